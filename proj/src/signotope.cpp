#include "pentamin/signotope.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

#include "pentamin/tuples.hpp"

namespace pent {

SignotopeAssignment::SignotopeAssignment(int n, std::vector<uint8_t> values)
    : n_(n), values_(std::move(values)) {
  if (n < 3) throw std::invalid_argument("signotope needs n >= 3");
  if (static_cast<long long>(values_.size()) != binomial64(n, 3))
    throw std::invalid_argument("signotope needs exactly C(n,3) values");
}

SignotopeAssignment SignotopeAssignment::all_true(int n) {
  return SignotopeAssignment(n, std::vector<uint8_t>(binomial64(n, 3), 1));
}

SignotopeAssignment SignotopeAssignment::all_false(int n) {
  return SignotopeAssignment(n, std::vector<uint8_t>(binomial64(n, 3), 0));
}

bool SignotopeAssignment::get(int a, int b, int c) const {
  return values_[triple_rank(n_, a, b, c) - 1] != 0;
}

void SignotopeAssignment::set(int a, int b, int c, bool v) {
  values_[triple_rank(n_, a, b, c) - 1] = v ? 1 : 0;
}

std::vector<AxiomViolation> check_axioms(const SignotopeAssignment& s) {
  std::vector<AxiomViolation> out;
  const int n = s.n();
  for (int a = 1; a <= n - 3; ++a)
    for (int b = a + 1; b <= n - 2; ++b)
      for (int c = b + 1; c <= n - 1; ++c)
        for (int d = c + 1; d <= n; ++d) {
          const bool abc = s.get(a, b, c);
          const bool abd = s.get(a, b, d);
          const bool acd = s.get(a, c, d);
          const bool bcd = s.get(b, c, d);
          // Each equation is a pair of clauses forbidding the two
          // alternations (-+- and +-+) on one triple subsequence.
          const struct {
            bool c1, c2;
          } eq[4] = {
              {abc || !abd || acd, !abc || abd || !acd},
              {abc || !acd || bcd, !abc || acd || !bcd},
              {abc || !abd || bcd, !abc || abd || !bcd},
              {abd || !acd || bcd, !abd || acd || !bcd},
          };
          for (int i = 0; i < 4; ++i) {
            if (!eq[i].c1) out.push_back({{a, b, c, d}, i + 1, 1});
            if (!eq[i].c2) out.push_back({{a, b, c, d}, i + 1, 2});
          }
        }
  return out;
}

ConvexCase convex_case(const SignotopeAssignment& s, const std::array<int, 5>& t) {
  const auto [a, b, c, d, e] = t;
  if (!(1 <= a && a < b && b < c && c < d && d < e && e <= s.n()))
    throw std::invalid_argument("convex_case: tuple must be sorted within 1..n");
  const bool abc = s.get(a, b, c);
  if (abc == s.get(b, c, d) && abc == s.get(c, d, e)) return ConvexCase::CaseI;
  if (abc == s.get(b, c, e) && abc == !s.get(a, d, e)) return ConvexCase::CaseII;
  const bool abd = s.get(a, b, d);
  if (abd == s.get(b, d, e) && abd == !s.get(a, c, e)) return ConvexCase::CaseIII;
  const bool abe = s.get(a, b, e);
  if (abe == !s.get(a, c, d) && abe == !s.get(c, d, e)) return ConvexCase::CaseIV;
  return ConvexCase::None;
}

long long count_convex_pentagons(const SignotopeAssignment& s) {
  if (!check_axioms(s).empty())
    throw std::invalid_argument(
        "count_convex_pentagons: assignment violates the signotope axioms");
  const int n = s.n();
  long long count = 0;
  std::array<int, 5> t{};
  for (t[0] = 1; t[0] <= n - 4; ++t[0])
    for (t[1] = t[0] + 1; t[1] <= n - 3; ++t[1])
      for (t[2] = t[1] + 1; t[2] <= n - 2; ++t[2])
        for (t[3] = t[2] + 1; t[3] <= n - 1; ++t[3])
          for (t[4] = t[3] + 1; t[4] <= n; ++t[4])
            if (convex_case(s, t) != ConvexCase::None) ++count;
  return count;
}

std::string to_text(const SignotopeAssignment& s) {
  std::string out = std::to_string(s.n());
  out += '\n';
  for (uint8_t v : s.values()) out += v ? '+' : '-';
  out += '\n';
  return out;
}

SignotopeAssignment signotope_from_text(std::istream& in) {
  int n = 0;
  if (!(in >> n)) throw std::invalid_argument("signotope text: missing n");
  std::string line;
  if (!(in >> line)) throw std::invalid_argument("signotope text: missing values");
  if (static_cast<long long>(line.size()) != binomial64(n, 3))
    throw std::invalid_argument("signotope text: expected " +
                                std::to_string(binomial64(n, 3)) +
                                " characters, got " + std::to_string(line.size()));
  std::vector<uint8_t> values(line.size());
  for (size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '+')
      values[i] = 1;
    else if (line[i] == '-')
      values[i] = 0;
    else
      throw std::invalid_argument("signotope text: invalid character");
  }
  return SignotopeAssignment(n, std::move(values));
}

}  // namespace pent
