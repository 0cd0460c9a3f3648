// Exact planar geometry: rational points, the orientation predicate,
// general-position testing, brute-force convex k-gon counting, and the
// extraction of signotopes from coordinates.
#pragma once

#include <array>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "pentamin/rational.hpp"
#include "pentamin/signotope.hpp"

namespace pent {

enum class Orientation { CounterClockwise, Clockwise, Collinear };

struct Point {
  Rat x;
  Rat y;
};

// An ordered point set with strictly increasing x-coordinates. Duplicate
// x-coordinates are rejected, never perturbed.
class PointSet {
 public:
  // Sorts by x and validates strict increase; throws std::invalid_argument
  // on duplicate x.
  static PointSet from_points(std::vector<Point> pts);

  int n() const { return static_cast<int>(pts_.size()); }
  const Point& operator[](int i) const { return pts_[i]; }
  const std::vector<Point>& points() const { return pts_; }

 private:
  explicit PointSet(std::vector<Point> pts) : pts_(std::move(pts)) {}
  std::vector<Point> pts_;
};

// Thrown when an exact computation hits a collinear triple it cannot
// accept; carries the (1-based) offending indices.
struct CollinearError : std::runtime_error {
  CollinearError(int a, int b, int c);
  int a, b, c;
};

// Sign of (y_c - y_a)(x_b - x_a) - (x_c - x_a)(y_b - y_a), exactly.
Orientation orientation(const Point& pa, const Point& pb, const Point& pc);

// True iff no triple of points is collinear.
bool is_general_position(const PointSet& s);

// Number of k-subsets in convex position, by exhaustive enumeration with
// exact arithmetic. Requires general position and 3 <= k <= n. When
// `witnesses` is non-null the convex subsets are appended to it
// (1-based indices) in lexicographic order.
long long count_convex_kgons(const PointSet& s, int k,
                             std::vector<std::vector<int>>* witnesses = nullptr);

// sigma(a,b,c) = true iff p_a,p_b,p_c are counterclockwise. Throws
// CollinearError naming the offending triple when one exists.
SignotopeAssignment signotope_of(const PointSet& s);

// Point-set JSON: {"n": <int>, "points": [["<num>","<num>"], ...]} where
// each coordinate is a decimal or "p/q" string. Round-trips exactly.
PointSet read_pointset_json(std::istream& in);
void write_pointset_json(const PointSet& s, std::ostream& out);

}  // namespace pent
