// A small exact branch-and-bound MaxSAT solver for the pentagon
// formulas: DPLL over sigma variables with counter-based unit
// propagation on the hard clauses; the forced relaxation variables give
// an admissible lower bound for pruning.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pentamin/encoder.hpp"

namespace pent {

enum class SolveStatus { Optimal, BudgetExceeded, HardUnsat };

// Order in which unassigned sigma variables are branched. LexTriples is
// plain ascending variable id (lexicographic triple order). Layered
// orders triples by their largest point first, so all triples within
// the first m points are decided before point m+1 is touched — the
// convexity status of small prefixes is settled early, which lets the
// cost bound prune much sooner.
enum class BranchOrder { LexTriples, Layered };

struct SolveOptions {
  // A known valid upper bound (e.g. conjectured_mu5(n)); never changes
  // the optimum, only prunes.
  std::optional<long long> ub_hint;
  uint64_t max_propagations = 1'000'000'000ULL;
  BranchOrder branch_order = BranchOrder::LexTriples;
};

struct SolveResult {
  SolveStatus status = SolveStatus::HardUnsat;
  // For Optimal: lower == upper == optimum and `model` witnesses it.
  // For BudgetExceeded: best interval known when the budget ran out
  // (upper comes from the best model found, if any).
  long long lower = 0;
  long long upper = 0;
  std::vector<int> model;
  uint64_t propagations = 0;
  double time = 0.0;
};

long long optimum_of(const SolveResult& r);  // requires status == Optimal

// Minimum number of falsified soft clauses over assignments satisfying
// every hard clause. The formula must follow the encode_maxsat shape:
// soft clauses are negative units on relaxation variables that occur
// only positively in hard clauses.
SolveResult solve_exact(const WcnfFormula& f, const SolveOptions& opts = {});

// Solves each cube-restricted formula independently (across `jobs`
// workers) and reduces with min; hard-UNSAT cubes are skipped. The best
// optimum over cubes equals the unrestricted optimum when the cubes
// partition the space.
SolveResult solve_exact_cubes(const WcnfFormula& f, const std::vector<Cube>& cubes,
                              const SolveOptions& opts = {}, int jobs = 1);

}  // namespace pent
