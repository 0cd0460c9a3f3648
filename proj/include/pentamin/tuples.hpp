// Binomial coefficients and the lexicographic ranking of sorted index
// tuples. Ranks are 1-based and shared by the signotope storage and the
// SAT/MaxSAT variable numbering, so they must never change.
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

#include "pentamin/rational.hpp"

namespace pent {

// Exact binomial coefficient; 0 when k < 0 or k > n.
Int binomial(long long n, long long k);

// Binomial coefficient as int64; throws std::overflow_error if it does
// not fit. Sufficient for every tuple-ranking context (n is small there).
long long binomial64(long long n, long long k);

// Rank of the sorted triple 1 <= a < b < c <= n among all C(n,3) triples
// in lexicographic order, counting from 1.
long long triple_rank(int n, int a, int b, int c);

// Inverse of triple_rank.
std::array<int, 3> triple_of_rank(int n, long long rank);

// Rank of the sorted 5-tuple 1 <= a < ... < e <= n, counting from 1.
long long quint_rank(int n, const std::array<int, 5>& t);

// Inverse of quint_rank.
std::array<int, 5> quint_of_rank(int n, long long rank);

}  // namespace pent
