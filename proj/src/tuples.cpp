#include "pentamin/tuples.hpp"

#include <limits>

namespace pent {

namespace {

// Small fixed-k binomials in plain integer arithmetic (hot paths: the
// rank functions below run inside clause generation and solver loops).
inline long long choose1(long long m) { return m < 1 ? 0 : m; }
inline long long choose2(long long m) { return m < 2 ? 0 : m * (m - 1) / 2; }
inline long long choose3(long long m) {
  return m < 3 ? 0 : m * (m - 1) / 2 * (m - 2) / 3;
}
inline long long choose4(long long m) {
  return m < 4 ? 0 : m * (m - 1) / 2 * (m - 2) / 3 * (m - 3) / 4;
}
inline long long choosek(long long m, int k) {
  switch (k) {
    case 0: return 1;
    case 1: return choose1(m);
    case 2: return choose2(m);
    case 3: return choose3(m);
    case 4: return choose4(m);
    default: return binomial64(m, k);
  }
}

}  // namespace

Int binomial(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  Int out = 1;
  for (long long i = 1; i <= k; ++i) {
    out *= (n - k + i);
    out /= i;  // exact: the running product is always divisible by i!
  }
  return out;
}

long long binomial64(long long n, long long k) {
  Int v = binomial(n, k);
  if (v > std::numeric_limits<long long>::max())
    throw std::overflow_error("binomial64 overflow");
  return static_cast<long long>(v);
}

long long triple_rank(int n, int a, int b, int c) {
  if (!(1 <= a && a < b && b < c && c <= n))
    throw std::invalid_argument("triple_rank: need 1 <= a < b < c <= n");
  // Count triples lexicographically before (a,b,c).
  long long before = choose3(n) - choose3(n - a + 1);    // first index < a
  before += choose2(n - a) - choose2(n - b + 1);         // = a, second < b
  before += c - b - 1;                                   // = a, = b, third < c
  return before + 1;
}

std::array<int, 3> triple_of_rank(int n, long long rank) {
  if (rank < 1 || rank > choose3(n))
    throw std::invalid_argument("triple_of_rank: rank out of range");
  long long rem = rank - 1;
  int a = 1;
  while (rem >= choose2(n - a)) rem -= choose2(n - a++);
  int b = a + 1;
  while (rem >= n - b) rem -= n - b++;
  int c = b + 1 + static_cast<int>(rem);
  return {a, b, c};
}

long long quint_rank(int n, const std::array<int, 5>& t) {
  for (int i = 0; i < 5; ++i) {
    if (t[i] < 1 || t[i] > n || (i > 0 && t[i] <= t[i - 1]))
      throw std::invalid_argument("quint_rank: need 1 <= a < ... < e <= n");
  }
  long long before = 0;
  int prev = 0;
  for (int i = 0; i < 5; ++i) {
    for (int v = prev + 1; v < t[i]; ++v) before += choosek(n - v, 4 - i);
    prev = t[i];
  }
  return before + 1;
}

std::array<int, 5> quint_of_rank(int n, long long rank) {
  if (rank < 1 || rank > binomial64(n, 5))
    throw std::invalid_argument("quint_of_rank: rank out of range");
  long long rem = rank - 1;
  std::array<int, 5> t{};
  int prev = 0;
  for (int i = 0; i < 5; ++i) {
    int v = prev + 1;
    while (rem >= choosek(n - v, 4 - i)) rem -= choosek(n - v++, 4 - i);
    t[i] = v;
    prev = v;
  }
  return t;
}

}  // namespace pent
