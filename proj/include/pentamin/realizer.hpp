// Penalty-based local search for planar realizations of a signotope
// assignment: maximize the minimum pairwise distance subject to
// orientation-margin and x-order constraints, then convert to exact
// rationals and re-verify before reporting success.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>

#include "pentamin/geom.hpp"
#include "pentamin/signotope.hpp"

namespace pent {

struct RealizerConfig {
  double epsilon = 1e-3;       // required orientation slack
  double box = 10.0;           // coordinates live in [0, box]^2
  int restarts = 40;
  long long max_iters = 60'000;  // proposals per restart
  double step_init = 1.0;
  double step_min = 1e-4;
  double penalty_weight = 1e3;
  uint64_t seed = 1;
};

enum class RealizeStatus { Realized, NotFound };

struct RealizationResult {
  RealizeStatus status = RealizeStatus::NotFound;
  std::optional<PointSet> points;   // exact, re-verified, when Realized
  double z = 0.0;                   // lower bound on min pairwise distance
  double min_orientation_slack = 0.0;
  int restarts_used = 0;
  double time = 0.0;
};

// Multi-restart hill climbing with per-point Gaussian moves and
// geometric step decay. Throws std::invalid_argument on
// axiom-inconsistent input (never realizable). NotFound carries no
// non-realizability claim. Deterministic given cfg.seed.
RealizationResult realize(const SignotopeAssignment& a, const RealizerConfig& cfg = {});

// Presentational SVG rendering of a point set (with hull edges on request).
void write_svg(const PointSet& s, std::ostream& out, bool hull_edges = false);

}  // namespace pent
