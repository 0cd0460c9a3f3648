#include "pentamin/bounds.hpp"

#include <stdexcept>

#include "pentamin/constructions.hpp"
#include "pentamin/tuples.hpp"

namespace pent {

std::vector<std::pair<int, long long>> known_values() {
  std::vector<std::pair<int, long long>> out;
  for (int n = 5; n <= 16; ++n) out.emplace_back(n, *known_mu5(n));
  return out;
}

std::optional<long long> known_mu5(int n) {
  if (n < 0) return std::nullopt;
  if (n <= 8) return 0;
  switch (n) {
    case 9: return 1;
    case 10: return 2;
    case 11: return 7;
    case 12: return 12;
    case 13: return 27;
    case 14: return 42;
    case 15: return 77;
    case 16: return 112;
    default: return std::nullopt;
  }
}

Int folklore_lower_bound(int k, int m, const Int& r, long long n) {
  if (k < 1 || k > m || m > n)
    throw std::invalid_argument("folklore_lower_bound: need 1 <= k <= m <= n");
  if (r < 0) throw std::invalid_argument("folklore_lower_bound: r >= 0 required");
  // ceil(r * C(n,k) / C(m,k)), exactly.
  const Int num = r * binomial(n, k);
  const Int den = binomial(m, k);
  return (num + den - 1) / den;
}

Int odd_even_step(int h, const Int& mu_odd) {
  if (h <= 5) throw std::invalid_argument("odd_even_step: h > 5 required");
  const Int hypothesis = binomial(h, 5) + binomial(h - 1, 5);
  if (mu_odd != hypothesis)
    throw std::invalid_argument(
        "odd_even_step: hypothesis fails: mu5(" + std::to_string(2 * h - 1) +
        ") given as " + mu_odd.str() + " but the step requires " +
        hypothesis.str());
  return 2 * binomial(h, 5);
}

Rat c5_ratio(int n, const Int& mu_value) {
  if (n < 5) throw std::invalid_argument("c5_ratio: n >= 5 required");
  return Rat(mu_value, binomial(n, 5));
}

Rat conjecture_limit() { return Rat(1, 16); }

Rat conjectured_ratio_at(long long n) {
  if (n < 5) throw std::invalid_argument("conjectured_ratio_at: n >= 5 required");
  return Rat(2 * binomial(n, 5), binomial(2 * n, 5));
}

BoundRecord derive_bounds(long long n) {
  if (n >= 5 && n <= 16) {
    BoundRecord rec;
    rec.n = n;
    rec.lower = *known_mu5(static_cast<int>(n));
    rec.upper = conjectured_mu5(n);
    rec.provenance.push_back("lower: exact table value mu5(" + std::to_string(n) +
                             ") = " + rec.lower.str());
    rec.provenance.push_back("upper: construction value C(floor(n/2),5)+C(ceil(n/2),5) = " +
                             rec.upper.str());
    return rec;
  }
  return derive_bounds_from(n, 16, Int(112));
}

BoundRecord derive_bounds_from(long long n, int m, const Int& r) {
  if (n < m) throw std::invalid_argument("derive_bounds_from: n >= m required");
  BoundRecord rec;
  rec.n = n;
  rec.lower = folklore_lower_bound(5, m, r, n);
  rec.upper = conjectured_mu5(n);
  rec.provenance.push_back("lower: subset-averaging lemma from mu5(" +
                           std::to_string(m) + ") >= " + r.str() +
                           ": ceil(" + r.str() + "*C(n,5)/C(" + std::to_string(m) +
                           ",5)) = " + rec.lower.str());
  rec.provenance.push_back("upper: construction value C(floor(n/2),5)+C(ceil(n/2),5) = " +
                           rec.upper.str());
  if (rec.lower > rec.upper)
    throw std::logic_error("derive_bounds_from: lower exceeds upper (invalid base)");
  return rec;
}

std::string bounds_csv_header() { return "n,lower,upper,provenance"; }

std::string bounds_csv_row(const BoundRecord& rec) {
  std::string prov;
  for (size_t i = 0; i < rec.provenance.size(); ++i) {
    if (i) prov += "; ";
    prov += rec.provenance[i];
  }
  return std::to_string(rec.n) + "," + rec.lower.str() + "," + rec.upper.str() +
         ",\"" + prov + "\"";
}

}  // namespace pent
