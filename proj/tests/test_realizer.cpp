#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "pentamin/constructions.hpp"
#include "pentamin/geom.hpp"
#include "pentamin/realizer.hpp"
#include "pentamin/signotope.hpp"

using namespace pent;

TEST_CASE("realizes the parabolic signotope and re-verifies it") {
  const SignotopeAssignment target = signotope_of(parabolic(8));
  const RealizationResult r = realize(target);
  REQUIRE(r.status == RealizeStatus::Realized);
  REQUIRE(r.points.has_value());
  CHECK(r.points->n() == 8);
  CHECK(is_general_position(*r.points));
  CHECK(signotope_of(*r.points) == target);
  CHECK(r.z > 0.0);
  CHECK(r.min_orientation_slack > 0.0);
  CHECK(r.restarts_used >= 1);
}

TEST_CASE("reported z is a true lower bound on the exact pairwise distances") {
  const SignotopeAssignment target = signotope_of(parabolic(7));
  const RealizationResult r = realize(target);
  REQUIRE(r.status == RealizeStatus::Realized);
  const Rat z2 = rational_from_double(r.z) * rational_from_double(r.z);
  const PointSet& s = *r.points;
  for (int i = 0; i < s.n(); ++i)
    for (int j = i + 1; j < s.n(); ++j) {
      const Rat dx = s[j].x - s[i].x;
      const Rat dy = s[j].y - s[i].y;
      const Rat dist2 = dx * dx + dy * dy;
      CHECK(dist2 >= z2);
    }
}

TEST_CASE("pentagon count is preserved through realization") {
  const PointSet original = pinwheel(2);
  const SignotopeAssignment target = signotope_of(original);
  const RealizationResult r = realize(target);
  REQUIRE(r.status == RealizeStatus::Realized);
  CHECK(count_convex_kgons(*r.points, 5) == 0);
  CHECK(count_convex_kgons(*r.points, 5) == count_convex_kgons(original, 5));
}

TEST_CASE("axiom-inconsistent input is rejected up front") {
  SignotopeAssignment bad = SignotopeAssignment::all_true(4);
  bad.set(1, 2, 3, false);
  bad.set(2, 3, 4, false);
  REQUIRE_FALSE(check_axioms(bad).empty());
  CHECK_THROWS_AS(realize(bad), std::invalid_argument);
}

TEST_CASE("deterministic given the seed") {
  const SignotopeAssignment target = signotope_of(parabolic(6));
  RealizerConfig cfg;
  cfg.seed = 99;
  const RealizationResult a = realize(target, cfg);
  const RealizationResult b = realize(target, cfg);
  REQUIRE(a.status == RealizeStatus::Realized);
  REQUIRE(b.status == RealizeStatus::Realized);
  REQUIRE(a.points->n() == b.points->n());
  for (int i = 0; i < a.points->n(); ++i) {
    CHECK((*a.points)[i].x == (*b.points)[i].x);
    CHECK((*a.points)[i].y == (*b.points)[i].y);
  }
  CHECK(a.z == b.z);
  CHECK(a.restarts_used == b.restarts_used);
}

TEST_CASE("robust across seeds") {
  const SignotopeAssignment target = signotope_of(parabolic(10));
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    RealizerConfig cfg;
    cfg.seed = seed;
    const RealizationResult r = realize(target, cfg);
    CHECK(r.status == RealizeStatus::Realized);
    if (r.status == RealizeStatus::Realized)
      CHECK(signotope_of(*r.points) == target);
  }
}

TEST_CASE("an exhausted budget reports NotFound without a point set") {
  const SignotopeAssignment target = signotope_of(parabolic(9));
  RealizerConfig cfg;
  cfg.restarts = 1;
  cfg.max_iters = 0;  // no proposals: the initial layout is never feasible
  const RealizationResult r = realize(target, cfg);
  CHECK(r.status == RealizeStatus::NotFound);
  CHECK_FALSE(r.points.has_value());
  CHECK(r.restarts_used == 1);
}

TEST_CASE("SVG rendering") {
  const PointSet s = parabolic(6);
  std::ostringstream plain, with_hull;
  write_svg(s, plain);
  write_svg(s, with_hull, true);
  const std::string p = plain.str();
  CHECK(p.find("<svg") != std::string::npos);
  CHECK(p.find("</svg>") != std::string::npos);
  CHECK(std::count(p.begin(), p.end(), '\n') > 6);
  size_t circles = 0, pos = 0;
  while ((pos = p.find("<circle", pos)) != std::string::npos) ++circles, ++pos;
  CHECK(circles == 6);
  CHECK(p.find("polygon") == std::string::npos);
  CHECK(with_hull.str().find("polygon") != std::string::npos);
}
