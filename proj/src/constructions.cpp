#include "pentamin/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "pentamin/tuples.hpp"

namespace pent {

namespace {

// Shear (x, y) -> (M*x + y, y) with M exceeding the y-span. The map has
// determinant M > 0, so every orientation (and hence the pentagon count
// and general position) is preserved exactly, while points that shared
// an x-coordinate become distinct: x is strictly ordered by (x, y)
// lexicographically afterward.
std::vector<Point> shear_distinct_x(std::vector<Point> pts) {
  Rat ymin = pts[0].y, ymax = pts[0].y;
  for (const Point& p : pts) {
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const Rat m = ymax - ymin + 1;
  for (Point& p : pts) p.x = m * p.x + p.y;
  return pts;
}

void verify_construction(const PointSet& s, const char* name) {
  if (!is_general_position(s))
    throw std::logic_error(std::string(name) + ": collinear triple generated");
}

}  // namespace

PointSet pinwheel(int k) {
  if (k < 1) throw std::invalid_argument("pinwheel: k >= 1 required");
  // Spokes scaled by k^3: S1 = (k^3(k+j), k^3 - j(k-j)), S2 = -S1,
  // S3 = (j(k-j) - k^3, k^3(k+j)), S4 = -S3, for j = 0..k-1.
  const Int k3 = Int(k) * k * k;
  std::vector<Point> pts;
  pts.reserve(4 * k);
  for (int j = 0; j < k; ++j) {
    const Int arm = k3 * (k + j);
    const Int sag = Int(j) * (k - j);
    pts.push_back({Rat(arm), Rat(k3 - sag)});
    pts.push_back({Rat(-arm), Rat(sag - k3)});
    pts.push_back({Rat(sag - k3), Rat(arm)});
    pts.push_back({Rat(k3 - sag), Rat(-arm)});
  }
  // The raw scaling leaves x-collisions inside S3/S4 (j and k-j give the
  // same x), so make x distinct with an orientation-preserving shear.
  PointSet s = PointSet::from_points(shear_distinct_x(std::move(pts)));
  verify_construction(s, "pinwheel");
  return s;
}

PointSet parabolic(int n) {
  if (n < 1) throw std::invalid_argument("parabolic: n >= 1 required");
  const Int n2 = Int(n) * n;
  std::vector<Point> pts;
  pts.reserve(n);
  for (int i = 1; i <= n / 2; ++i)
    pts.push_back({Rat(Int(i) * n2), Rat(2 * n2 + Int(i) * i)});
  for (int i = 1; i <= (n + 1) / 2; ++i)
    pts.push_back({Rat(Int(i) * n2 + 1), Rat(-(2 * n2 + Int(i) * i))});
  PointSet s = PointSet::from_points(std::move(pts));
  verify_construction(s, "parabolic");
  return s;
}

Int conjectured_mu5(long long n) {
  if (n < 0) throw std::invalid_argument("conjectured_mu5: n >= 0 required");
  return binomial(n / 2, 5) + binomial((n + 1) / 2, 5);
}

}  // namespace pent
