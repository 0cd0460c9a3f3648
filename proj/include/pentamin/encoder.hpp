// SAT/MaxSAT encodings of the pentagon-minimization problem: axiom and
// convexity clauses, relaxation variables with unit soft clauses,
// symmetry-breaking units, cube-and-conquer splits, and bit-exact
// DIMACS/WCNF emission plus model decoding.
#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "pentamin/signotope.hpp"
#include "pentamin/tuples.hpp"

namespace pent {

// Deterministic variable numbering: sigma variables take ids 1..C(n,3)
// in lexicographic triple order; relaxation variables follow with ids
// C(n,3)+1..C(n,3)+C(n,5) in lexicographic 5-tuple order.
struct VarMap {
  explicit VarMap(int n);

  int n;
  long long num_sigma;  // C(n,3)
  long long num_relax;  // C(n,5)

  int sigma_index(int a, int b, int c) const;
  int relax_index(const std::array<int, 5>& t) const;
  std::array<int, 3> triple_of(int var) const;   // var in 1..num_sigma
  std::array<int, 5> quint_of(int var) const;    // var in num_sigma+1..
};

struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
};

// Weighted formula: hard clauses (symmetry units, when present, are the
// trailing num_symmetry entries of `hard`), and soft clauses that are
// exactly the unit clauses {soft_lit} with weight 1, in 5-tuple order.
struct WcnfFormula {
  int n = 0;
  int num_vars = 0;
  std::vector<std::vector<int>> hard;
  long long num_symmetry = 0;
  std::vector<int> soft_lits;
  long long top_weight = 0;
};

// A conjunction of literals on the splitting variables.
struct Cube {
  std::vector<int> literals;
};

// Axiom clauses (8 per sorted quadruple) when requested, plus the 8
// convexity clauses per sorted 5-tuple. Variables are sigma only.
CnfFormula encode_sat(int n, bool with_axioms);

// Hard = axioms + convexity clauses relaxed with r_{abcde} (+ symmetry
// units last, if requested); soft = C(n,5) units (-r) with weight 1;
// top weight = C(n,5)+1.
WcnfFormula encode_maxsat(int n, bool symmetry);

// Positive units sigma(1,b,c) for all 1 < b < c <= n.
std::vector<std::vector<int>> symmetry_units(int n);

// Splitting variables sigma(2i+1, 2i+2, 2i+3) for i >= 1 while
// 2i+3 <= n; all 2^c sign patterns, cube 0 all-positive, counting in
// binary with the first variable as the most significant bit.
std::vector<Cube> make_cubes(int n);
std::vector<Cube> make_cubes_from_vars(const std::vector<int>& vars);

// Reads the sigma variables out of a model (list of nonzero literals).
// Throws std::invalid_argument when a sigma variable is missing or a
// literal is out of range.
SignotopeAssignment decode_model(int n, const std::vector<int>& model);

// Deterministic writers. Clause order: axioms by quadruple rank (within
// one quadruple: equation 1..4, conjunct 1..2), convexity by 5-tuple
// rank then clause index, symmetry units last; soft clauses by 5-tuple
// rank. `new_format` selects the 2022 "h"-prefixed WCNF style.
void write_dimacs(const CnfFormula& f, std::ostream& out);
void write_wcnf(const WcnfFormula& f, std::ostream& out, bool new_format = false);

// Standalone WCNF for one cube: the cube literals are appended as hard
// units after the symmetry units.
void write_wcnf_cube(const WcnfFormula& f, const Cube& cube, std::ostream& out,
                     bool new_format = false);

// One line per cube: "a <lit>* 0".
void write_cube_list(const std::vector<Cube>& cubes, std::ostream& out);

// Model file: integer literals separated by whitespace; "v" prefixes
// accepted, "c"/"s"/"o" lines and zeros ignored.
std::vector<int> read_model_file(std::istream& in);

// WCNF reader for both header styles (used by solve --wcnf).
WcnfFormula read_wcnf(std::istream& in);

// Independent evaluator: does `values[v]` (v in 1..num_vars, entries 0/1)
// satisfy all hard clauses, and how many soft clauses does it falsify?
struct WcnfEval {
  bool hard_ok = false;
  long long soft_falsified = 0;
};
WcnfEval evaluate_wcnf(const WcnfFormula& f, const std::vector<uint8_t>& values);

// Expands a model literal list into the 0/1 vector evaluate_wcnf expects;
// unassigned variables default to false.
std::vector<uint8_t> model_to_values(int num_vars, const std::vector<int>& model);

}  // namespace pent
