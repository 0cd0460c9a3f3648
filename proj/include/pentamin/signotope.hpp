// The discrete abstraction of a point set: one boolean per sorted triple
// (true = counterclockwise), axiom checking over quadruples, the four
// convex-pentagon cases over 5-tuples, and pentagon counting.
#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace pent {

enum class ConvexCase { None, CaseI, CaseII, CaseIII, CaseIV };

// Total assignment over all C(n,3) sorted triples, stored in
// lexicographic triple-rank order.
class SignotopeAssignment {
 public:
  SignotopeAssignment(int n, std::vector<uint8_t> values);

  static SignotopeAssignment all_true(int n);
  static SignotopeAssignment all_false(int n);

  int n() const { return n_; }
  long long num_triples() const { return static_cast<long long>(values_.size()); }

  // 1-based indices, a < b < c required.
  bool get(int a, int b, int c) const;
  void set(int a, int b, int c, bool v);

  // Raw values in lexicographic triple order.
  const std::vector<uint8_t>& values() const { return values_; }

  bool operator==(const SignotopeAssignment& o) const {
    return n_ == o.n_ && values_ == o.values_;
  }

 private:
  int n_;
  std::vector<uint8_t> values_;
};

// One falsified axiom clause: the quadruple it lives on, which of the
// four equations (1..4), and which conjunct of the pair (1 or 2).
struct AxiomViolation {
  std::array<int, 4> quad;
  int axiom_id;
  int conjunct;

  bool operator==(const AxiomViolation& o) const {
    return quad == o.quad && axiom_id == o.axiom_id && conjunct == o.conjunct;
  }
};

// Evaluates all 8 axiom clauses on every sorted quadruple and returns
// every falsified one; empty iff the assignment is axiom-consistent.
std::vector<AxiomViolation> check_axioms(const SignotopeAssignment& a);

// Tests the four convex-pentagon patterns on one sorted 5-tuple, in the
// order I..IV, returning the first match (None when none matches). On
// axiom-consistent assignments at most one case can match.
ConvexCase convex_case(const SignotopeAssignment& a, const std::array<int, 5>& t);

// Number of 5-tuples whose convex_case is not None. Throws
// std::invalid_argument on axiom-inconsistent input.
long long count_convex_pentagons(const SignotopeAssignment& a);

// Text format: line 1 is n, line 2 is C(n,3) characters '+'/'-' in
// lexicographic triple order.
std::string to_text(const SignotopeAssignment& a);
SignotopeAssignment signotope_from_text(std::istream& in);

}  // namespace pent
