// Exact-rational bound propagation for the pentagon minimum: the known
// value table, the subset-averaging lower bound, the odd-even step, and
// the limiting density estimates.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pentamin/rational.hpp"

namespace pent {

// Known exact values: 0 for n <= 8, then 1,2,7,12,27,42,77,112 for
// n = 9..16.
std::vector<std::pair<int, long long>> known_values();
std::optional<long long> known_mu5(int n);

// ceil(r * C(n,k) / C(m,k)), a valid lower bound on mu_k(n) whenever
// mu_k(m) >= r. Throws std::invalid_argument unless 1 <= k <= m <= n
// and r >= 0.
Int folklore_lower_bound(int k, int m, const Int& r, long long n);

// If mu_odd equals C(h,5)+C(h-1,5) (the conjectured value of
// mu5(2h-1)), returns 2*C(h,5) as the exact value of mu5(2h); otherwise
// throws std::invalid_argument reporting both sides. Requires h > 5.
Int odd_even_step(int h, const Int& mu_odd);

// mu_value / C(n,5), exact. A valid lower bound on the limit density
// when mu_value is a valid lower bound on mu5(n). Requires n >= 5.
Rat c5_ratio(int n, const Int& mu_value);

// The limiting ratio of the conjectured values: 1/16.
Rat conjecture_limit();

// The conjectured-value density 2*C(n,5)/C(2n,5) at a given n, used to
// check the monotone approach to 1/16.
Rat conjectured_ratio_at(long long n);

struct BoundRecord {
  long long n = 0;
  Int lower;
  Int upper;
  std::vector<std::string> provenance;  // one line per derivation step
};

// lower: known table for n <= 16, else the folklore bound from
// mu5(16) = 112; upper: the conjectured construction value.
BoundRecord derive_bounds(long long n);

// Same, but the lower bound is propagated from a caller-supplied base
// mu5(m) >= r.
BoundRecord derive_bounds_from(long long n, int m, const Int& r);

// CSV rendering: "n,lower,upper,provenance" (provenance steps joined
// with "; ").
std::string bounds_csv_header();
std::string bounds_csv_row(const BoundRecord& rec);

}  // namespace pent
