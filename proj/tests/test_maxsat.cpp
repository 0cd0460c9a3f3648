#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "pentamin/constructions.hpp"
#include "pentamin/encoder.hpp"
#include "pentamin/geom.hpp"
#include "pentamin/maxsat_bb.hpp"
#include "pentamin/signotope.hpp"

using namespace pent;

namespace {

// Full witness audit: the model satisfies the hards, attains the claimed
// cost, and decodes to a consistent signotope with that many pentagons.
void audit_optimal(const WcnfFormula& f, int n, const SolveResult& r) {
  REQUIRE(r.status == SolveStatus::Optimal);
  CHECK(r.lower == r.upper);
  const auto values = model_to_values(f.num_vars, r.model);
  const WcnfEval ev = evaluate_wcnf(f, values);
  CHECK(ev.hard_ok);
  CHECK(ev.soft_falsified == r.upper);
  const SignotopeAssignment a = decode_model(n, r.model);
  CHECK(check_axioms(a).empty());
  CHECK(count_convex_pentagons(a) == r.upper);
}

}  // namespace

TEST_CASE("exact optima for n = 5..10") {
  const long long expected[] = {0, 0, 0, 0, 1, 2};
  for (int n = 5; n <= 10; ++n) {
    const WcnfFormula f = encode_maxsat(n, true);
    const SolveResult r = solve_exact(f);
    CHECK(optimum_of(r) == expected[n - 5]);
    audit_optimal(f, n, r);
  }
}

TEST_CASE("symmetry breaking does not change the optimum") {
  const WcnfFormula with = encode_maxsat(9, true);
  const WcnfFormula without = encode_maxsat(9, false);
  const SolveResult a = solve_exact(with);
  const SolveResult b = solve_exact(without);
  CHECK(optimum_of(a) == 1);
  CHECK(optimum_of(b) == 1);
  audit_optimal(without, 9, b);
}

TEST_CASE("an upper-bound hint prunes without changing the optimum") {
  for (int n : {9, 10}) {
    const WcnfFormula f = encode_maxsat(n, true);
    SolveOptions opts;
    opts.ub_hint = static_cast<long long>(conjectured_mu5(n));
    const SolveResult hinted = solve_exact(f, opts);
    const SolveResult plain = solve_exact(f);
    CHECK(optimum_of(hinted) == optimum_of(plain));
    CHECK(hinted.propagations <= plain.propagations);
  }
}

TEST_CASE("an invalid upper-bound hint is detected") {
  const WcnfFormula f = encode_maxsat(9, true);
  SolveOptions opts;
  opts.ub_hint = 0;  // claims a pentagon-free set of 9 points exists
  CHECK_THROWS_AS(solve_exact(f, opts), std::invalid_argument);
}

TEST_CASE("propagation budget reports an honest interval") {
  const WcnfFormula f = encode_maxsat(10, true);
  SolveOptions opts;
  opts.max_propagations = 1000;
  const SolveResult r = solve_exact(f, opts);
  CHECK(r.status == SolveStatus::BudgetExceeded);
  CHECK(r.lower <= 2);
  CHECK(r.upper >= 2);
  CHECK(r.propagations >= 1000);
  CHECK_THROWS_AS(optimum_of(r), std::logic_error);
}

TEST_CASE("layered branch order agrees with lexicographic") {
  const WcnfFormula f = encode_maxsat(9, true);
  SolveOptions layered;
  layered.branch_order = BranchOrder::Layered;
  CHECK(optimum_of(solve_exact(f, layered)) == 1);
}

TEST_CASE("hard-unsat formulas are reported, not mis-solved") {
  WcnfFormula f = encode_maxsat(7, true);
  f.hard.push_back({1});
  f.hard.push_back({-1});
  const SolveResult r = solve_exact(f);
  CHECK(r.status == SolveStatus::HardUnsat);
  CHECK(r.model.empty());
}

TEST_CASE("cube split: per-cube minima reduce to the global optimum") {
  const WcnfFormula f = encode_maxsat(9, true);
  const auto cubes = make_cubes(9);
  REQUIRE(cubes.size() == 8);

  long long best = -1;
  int solved = 0;
  for (const Cube& c : cubes) {
    WcnfFormula g = f;
    for (int lit : c.literals) g.hard.push_back({lit});
    const SolveResult r = solve_exact(g);
    if (r.status == SolveStatus::HardUnsat) continue;
    ++solved;
    if (best < 0 || r.upper < best) best = r.upper;
  }
  CHECK(solved >= 1);
  CHECK(best == 1);

  const SolveResult serial = solve_exact_cubes(f, cubes, {}, 1);
  const SolveResult parallel = solve_exact_cubes(f, cubes, {}, 2);
  CHECK(optimum_of(serial) == 1);
  CHECK(optimum_of(parallel) == 1);
  audit_optimal(f, 9, serial);
  audit_optimal(f, 9, parallel);
}

TEST_CASE("cube split on an unsatisfiable formula") {
  WcnfFormula f = encode_maxsat(7, true);
  f.hard.push_back({1});
  f.hard.push_back({-1});
  const SolveResult r = solve_exact_cubes(f, make_cubes(7), {}, 2);
  CHECK(r.status == SolveStatus::HardUnsat);
}

TEST_CASE("solver agrees with the geometric count on realizable instances") {
  // The construction values are upper bounds; at n <= 10 the solver
  // certifies they are exact.
  for (int n : {8, 9, 10}) {
    const PointSet s = parabolic(n);
    const long long geometric = count_convex_kgons(s, 5);
    const WcnfFormula f = encode_maxsat(n, true);
    CHECK(optimum_of(solve_exact(f)) == geometric);
  }
}

TEST_CASE("malformed soft shape is rejected") {
  WcnfFormula f = encode_maxsat(5, false);
  f.hard.push_back({-11});  // relaxation variable now occurs negatively
  CHECK_THROWS_AS(solve_exact(f), std::invalid_argument);
}
