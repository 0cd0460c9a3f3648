// Stochastic local search over sigma variables in the DDFW style:
// weighted falsified-clause minimization with clause-weight transfer at
// local minima and periodic restarts.
#pragma once

#include <cstdint>
#include <optional>

#include "pentamin/encoder.hpp"
#include "pentamin/signotope.hpp"

namespace pent {

struct SlsConfig {
  uint64_t seed = 1;
  long long max_flips = 2'000'000;
  long long restart_interval = 100'000;
  long long weight_init = 8;
  long long transfer_quantum = 2;
  bool include_axioms = true;
  // Stop early once best_falsified <= target (negative = run the full
  // flip budget).
  long long target = -1;
  // Emit "c flips=<k> best=<b>" every this many flips (0 = quiet).
  long long report_interval = 0;
};

struct SlsResult {
  long long best_falsified = 0;
  SignotopeAssignment best_assignment;
  long long flips_used = 0;
  long long restarts = 0;
  double wall_time = 0.0;
  uint64_t seed = 0;
  // True when the best assignment falsifies no axiom clause, in which
  // case best_falsified equals its abstract pentagon count.
  bool axioms_clean = false;
};

// Minimizes the number of falsified clauses of encode_sat(n,
// cfg.include_axioms). Deterministic given cfg.seed.
SlsResult sls_minimize(int n, const SlsConfig& cfg);

// Runs num_seeds independent runs with seeds base.seed, base.seed+1, ...
// across `jobs` workers and returns the best result (ties broken toward
// the smallest seed). Each run is reproducible individually.
SlsResult sls_portfolio(int n, const SlsConfig& base, int num_seeds, int jobs);

}  // namespace pent
