#include "pentamin/geom.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <string>

#include <json.hpp>

#include "pentamin/tuples.hpp"

namespace pent {

namespace {

// Per-axis integer scaling: multiplying all x by one positive constant
// and all y by another multiplies every orientation determinant by
// their (positive) product, so orientation signs are preserved. This
// lets the hot loops run on integers instead of rationals.
struct IntGrid {
  std::vector<Int> x, y;
  bool small = false;  // coordinates fit in int64 -> __int128 determinants
  std::vector<long long> sx, sy;
};

IntGrid make_grid(const PointSet& s) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::lcm;
  using boost::multiprecision::numerator;
  Int lx = 1, ly = 1;
  for (const Point& p : s.points()) {
    lx = lcm(lx, denominator(p.x));
    ly = lcm(ly, denominator(p.y));
  }
  IntGrid g;
  g.x.reserve(s.n());
  g.y.reserve(s.n());
  for (const Point& p : s.points()) {
    g.x.push_back(numerator(p.x) * (lx / denominator(p.x)));
    g.y.push_back(numerator(p.y) * (ly / denominator(p.y)));
  }
  const Int limit = Int(1) << 60;
  g.small = true;
  for (int i = 0; i < s.n() && g.small; ++i)
    if (abs(g.x[i]) > limit || abs(g.y[i]) > limit) g.small = false;
  if (g.small) {
    g.sx.reserve(s.n());
    g.sy.reserve(s.n());
    for (int i = 0; i < s.n(); ++i) {
      g.sx.push_back(static_cast<long long>(g.x[i]));
      g.sy.push_back(static_cast<long long>(g.y[i]));
    }
  }
  return g;
}

// Sign of the orientation determinant for point indices i, j, k.
int grid_orient(const IntGrid& g, int i, int j, int k) {
  if (g.small) {
    const __int128 d = static_cast<__int128>(g.sy[k] - g.sy[i]) * (g.sx[j] - g.sx[i]) -
                       static_cast<__int128>(g.sx[k] - g.sx[i]) * (g.sy[j] - g.sy[i]);
    return d > 0 ? 1 : d < 0 ? -1 : 0;
  }
  const Int d = (g.y[k] - g.y[i]) * (g.x[j] - g.x[i]) -
                (g.x[k] - g.x[i]) * (g.y[j] - g.y[i]);
  return d > 0 ? 1 : d < 0 ? -1 : 0;
}

// Number of hull vertices of the subset `idx` (indices ascending by x).
// Monotone chain; requires no collinear triple among the points.
int hull_vertices(const IntGrid& g, const std::vector<int>& idx) {
  const int k = static_cast<int>(idx.size());
  std::vector<int> chain;
  chain.reserve(k + 1);
  auto build = [&](bool forward) {
    chain.clear();
    for (int t = 0; t < k; ++t) {
      const int p = idx[forward ? t : k - 1 - t];
      while (chain.size() >= 2 &&
             grid_orient(g, chain[chain.size() - 2], chain.back(), p) <= 0)
        chain.pop_back();
      chain.push_back(p);
    }
    return static_cast<int>(chain.size());
  };
  const int lower = build(true);
  const int upper = build(false);
  return lower + upper - 2;
}

}  // namespace

PointSet PointSet::from_points(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(),
            [](const Point& a, const Point& b) { return a.x < b.x; });
  for (size_t i = 1; i < pts.size(); ++i)
    if (pts[i - 1].x == pts[i].x)
      throw std::invalid_argument("duplicate x-coordinate: " +
                                  format_rational(pts[i].x));
  return PointSet(std::move(pts));
}

CollinearError::CollinearError(int a_, int b_, int c_)
    : std::runtime_error("collinear triple (" + std::to_string(a_) + "," +
                         std::to_string(b_) + "," + std::to_string(c_) + ")"),
      a(a_), b(b_), c(c_) {}

Orientation orientation(const Point& pa, const Point& pb, const Point& pc) {
  const Rat d = (pc.y - pa.y) * (pb.x - pa.x) - (pc.x - pa.x) * (pb.y - pa.y);
  const int s = sign_of(d);
  return s > 0 ? Orientation::CounterClockwise
         : s < 0 ? Orientation::Clockwise
                 : Orientation::Collinear;
}

bool is_general_position(const PointSet& s) {
  const int n = s.n();
  const IntGrid g = make_grid(s);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (grid_orient(g, a, b, c) == 0) return false;
  return true;
}

long long count_convex_kgons(const PointSet& s, int k,
                             std::vector<std::vector<int>>* witnesses) {
  const int n = s.n();
  if (k < 3 || k > n)
    throw std::invalid_argument("count_convex_kgons: need 3 <= k <= n");
  const IntGrid g = make_grid(s);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (grid_orient(g, a, b, c) == 0) throw CollinearError(a + 1, b + 1, c + 1);

  // Enumerate k-subsets in lexicographic order.
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  long long count = 0;
  while (true) {
    if (hull_vertices(g, idx) == k) {
      ++count;
      if (witnesses) {
        std::vector<int> w(idx);
        for (int& v : w) ++v;  // 1-based for callers
        witnesses->push_back(std::move(w));
      }
    }
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return count;
}

SignotopeAssignment signotope_of(const PointSet& s) {
  const int n = s.n();
  if (n < 3) throw std::invalid_argument("signotope_of: need n >= 3");
  const IntGrid g = make_grid(s);
  std::vector<uint8_t> values;
  values.reserve(binomial64(n, 3));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        const int o = grid_orient(g, a, b, c);
        if (o == 0) throw CollinearError(a + 1, b + 1, c + 1);
        values.push_back(o > 0 ? 1 : 0);
      }
  return SignotopeAssignment(n, std::move(values));
}

PointSet read_pointset_json(std::istream& in) {
  nlohmann::json j;
  in >> j;
  if (!j.is_object() || !j.contains("n") || !j.contains("points"))
    throw std::invalid_argument("point-set JSON: need {\"n\":..., \"points\":[...]}");
  const auto& arr = j["points"];
  if (!arr.is_array())
    throw std::invalid_argument("point-set JSON: \"points\" must be an array");
  std::vector<Point> pts;
  pts.reserve(arr.size());
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("point-set JSON: each point is [x, y]");
    auto coord = [](const nlohmann::json& v) {
      if (v.is_string()) return parse_rational(v.get<std::string>());
      if (v.is_number_integer()) return Rat(Int(v.get<long long>()));
      throw std::invalid_argument("point-set JSON: coordinates are strings");
    };
    pts.push_back({coord(e[0]), coord(e[1])});
  }
  if (j["n"].get<long long>() != static_cast<long long>(pts.size()))
    throw std::invalid_argument("point-set JSON: n does not match points length");
  return PointSet::from_points(std::move(pts));
}

void write_pointset_json(const PointSet& s, std::ostream& out) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Point& p : s.points())
    arr.push_back({format_rational(p.x), format_rational(p.y)});
  nlohmann::json j;
  j["n"] = s.n();
  j["points"] = std::move(arr);
  out << j.dump(2) << "\n";
}

}  // namespace pent
