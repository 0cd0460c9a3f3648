#include "pentamin/realizer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <ostream>
#include <random>
#include <stdexcept>

namespace pent {

namespace {

struct TripleConstraint {
  int a, b, c;     // 0-based point indices
  double sign;     // +1 needs ccw (orient >= eps), -1 needs cw (orient <= -eps)
};

struct Eval {
  double viol = 0.0;       // sum of constraint hinges
  double z = 0.0;          // min pairwise distance
  double min_slack = 0.0;  // min signed orientation slack over triples
  double score() const { return z - viol; }
};

struct Climber {
  int n;
  double eps, box, penalty;
  std::vector<TripleConstraint> triples;
  std::vector<double> xs, ys;
  std::vector<uint8_t> in_violation;  // per point, refreshed by evaluate()
  std::vector<int> violated_points;

  double orient(int a, int b, int c) const {
    return (ys[c] - ys[a]) * (xs[b] - xs[a]) - (xs[c] - xs[a]) * (ys[b] - ys[a]);
  }

  Eval evaluate(bool track_violators) {
    Eval e;
    e.min_slack = std::numeric_limits<double>::infinity();
    if (track_violators) {
      std::fill(in_violation.begin(), in_violation.end(), 0);
      violated_points.clear();
    }
    auto mark = [&](int p) {
      if (!in_violation[p]) {
        in_violation[p] = 1;
        violated_points.push_back(p);
      }
    };
    for (const auto& t : triples) {
      const double slack = t.sign * orient(t.a, t.b, t.c);
      e.min_slack = std::min(e.min_slack, slack);
      if (slack < eps) {
        e.viol += penalty * (eps - slack);
        if (track_violators) {
          mark(t.a);
          mark(t.b);
          mark(t.c);
        }
      }
    }
    for (int i = 0; i + 1 < n; ++i) {
      const double gap = xs[i + 1] - xs[i];
      if (gap < eps) {
        e.viol += penalty * (eps - gap);
        if (track_violators) {
          mark(i);
          mark(i + 1);
        }
      }
    }
    e.z = 2.0 * box;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        e.z = std::min(e.z, std::hypot(xs[i] - xs[j], ys[i] - ys[j]));
    if (triples.empty()) e.min_slack = 0.0;
    return e;
  }
};

// Rounds to six decimal places; the search maintains orientation slack
// several orders of magnitude above the rounding perturbation, so the
// snapped coordinates normally verify exactly.
Rat snap_millionths(double v) {
  return Rat(Int(std::llround(v * 1e6)), Int(1000000));
}

std::optional<PointSet> try_exact(const Climber& cl, const SignotopeAssignment& a,
                                  bool dyadic) {
  std::vector<Point> pts;
  pts.reserve(cl.n);
  for (int i = 0; i < cl.n; ++i) {
    if (dyadic)
      pts.push_back({rational_from_double(cl.xs[i]), rational_from_double(cl.ys[i])});
    else
      pts.push_back({snap_millionths(cl.xs[i]), snap_millionths(cl.ys[i])});
  }
  try {
    PointSet s = PointSet::from_points(std::move(pts));
    if (cl.n < 3 || signotope_of(s) == a) return s;  // no triples below n=3
  } catch (const std::exception&) {
    // duplicate x or a collinear triple after rounding: not a witness
  }
  return std::nullopt;
}

}  // namespace

RealizationResult realize(const SignotopeAssignment& a, const RealizerConfig& cfg) {
  if (!check_axioms(a).empty())
    throw std::invalid_argument("realize: assignment violates the signotope axioms");
  const auto t0 = std::chrono::steady_clock::now();
  const int n = a.n();

  Climber cl;
  cl.n = n;
  cl.eps = cfg.epsilon;
  cl.box = cfg.box;
  cl.penalty = cfg.penalty_weight;
  cl.xs.resize(n);
  cl.ys.resize(n);
  cl.in_violation.resize(n);
  for (int x = 1; x <= n; ++x)
    for (int y = x + 1; y <= n; ++y)
      for (int z = y + 1; z <= n; ++z)
        cl.triples.push_back({x - 1, y - 1, z - 1, a.get(x, y, z) ? 1.0 : -1.0});

  RealizationResult res;
  double best_score = -std::numeric_limits<double>::infinity();
  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  auto record = [&](const Eval& e) {
    if (e.score() > best_score) {
      best_score = e.score();
      res.z = e.z;
      res.min_orientation_slack = e.min_slack;
    }
  };
  auto finish_time = [&]() {
    res.time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  for (int restart = 0; restart < cfg.restarts; ++restart) {
    res.restarts_used = restart + 1;
    // Evenly spaced x (the required order), random y.
    for (int i = 0; i < n; ++i) {
      cl.xs[i] = cfg.box * (i + 0.5) / n;
      cl.ys[i] = cfg.box * unit(rng);
    }
    Eval cur = cl.evaluate(true);
    record(cur);
    double step = cfg.step_init;
    int accepts = 0;
    bool attempted = false;  // one exact attempt per distinct configuration
    for (long long iter = 0; iter < cfg.max_iters; ++iter) {
      if (cur.viol == 0.0 && !attempted) {
        attempted = true;
        auto s = try_exact(cl, a, false);
        if (!s) s = try_exact(cl, a, true);
        if (s) {
          res.status = RealizeStatus::Realized;
          // Recompute z from the snapped points so it stays a valid
          // lower bound on their pairwise distances after rounding.
          double z = 2.0 * cfg.box;
          const auto& pts = s->points();
          for (size_t i = 0; i < pts.size(); ++i)
            for (size_t k = i + 1; k < pts.size(); ++k)
              z = std::min(z, std::hypot(static_cast<double>(pts[i].x - pts[k].x),
                                         static_cast<double>(pts[i].y - pts[k].y)));
          res.z = pts.size() >= 2 ? z * (1.0 - 1e-9) : 0.0;
          res.min_orientation_slack = cur.min_slack;
          res.points = std::move(*s);
          finish_time();
          return res;
        }
      }
      // Move a point involved in a violated constraint most of the time.
      int p;
      if (!cl.violated_points.empty() && unit(rng) < 0.8)
        p = cl.violated_points[rng() % cl.violated_points.size()];
      else
        p = static_cast<int>(rng() % n);
      const double ox = cl.xs[p], oy = cl.ys[p];
      cl.xs[p] = std::clamp(ox + step * gauss(rng), 0.0, cfg.box);
      cl.ys[p] = std::clamp(oy + step * gauss(rng), 0.0, cfg.box);
      const Eval cand = cl.evaluate(false);
      if (cand.score() > cur.score()) {
        cur = cl.evaluate(true);  // refresh the violator list
        record(cur);
        ++accepts;
        attempted = false;
      } else {
        cl.xs[p] = ox;
        cl.ys[p] = oy;
      }
      // Adapt the step to keep a useful acceptance rate.
      if ((iter + 1) % 200 == 0) {
        if (accepts < 20)
          step = std::max(step * 0.6, cfg.step_min);
        else if (accepts > 80)
          step = std::min(step * 1.5, cfg.box);
        accepts = 0;
      }
    }
  }
  finish_time();
  return res;
}

void write_svg(const PointSet& s, std::ostream& out, bool hull_edges) {
  const int W = 480, H = 480, margin = 24;
  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  std::vector<std::pair<double, double>> pts;
  for (const auto& p : s.points())
    pts.emplace_back(static_cast<double>(p.x), static_cast<double>(p.y));
  if (!pts.empty()) {
    xmin = xmax = pts[0].first;
    ymin = ymax = pts[0].second;
    for (const auto& [x, y] : pts) {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  if (xmax - xmin < 1e-12) xmax = xmin + 1;
  if (ymax - ymin < 1e-12) ymax = ymin + 1;
  auto px = [&](double x) {
    return margin + (x - xmin) / (xmax - xmin) * (W - 2 * margin);
  };
  auto py = [&](double y) {  // SVG y grows downward
    return H - margin - (y - ymin) / (ymax - ymin) * (H - 2 * margin);
  };
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\""
      << H << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
  if (hull_edges && s.n() >= 3) {
    // Monotone chain in doubles; the drawing is presentational only.
    auto cross = [&](int o, int a, int b) {
      return (pts[a].first - pts[o].first) * (pts[b].second - pts[o].second) -
             (pts[a].second - pts[o].second) * (pts[b].first - pts[o].first);
    };
    const int m = static_cast<int>(pts.size());
    std::vector<int> hull;
    for (int pass = 0; pass < 2; ++pass) {
      const size_t base = hull.size();
      for (int k = 0; k < m; ++k) {
        const int i = pass == 0 ? k : m - 1 - k;
        while (hull.size() >= base + 2 &&
               cross(hull[hull.size() - 2], hull.back(), i) <= 0)
          hull.pop_back();
        hull.push_back(i);
      }
      hull.pop_back();
    }
    out << "  <polygon points=\"";
    for (int i : hull)
      out << px(pts[i].first) << "," << py(pts[i].second) << " ";
    out << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  }
  for (size_t i = 0; i < pts.size(); ++i) {
    out << "  <circle cx=\"" << px(pts[i].first) << "\" cy=\"" << py(pts[i].second)
        << "\" r=\"4\" fill=\"#1f77b4\"/>\n";
    out << "  <text x=\"" << px(pts[i].first) + 6 << "\" y=\""
        << py(pts[i].second) - 6 << "\" font-size=\"11\">" << (i + 1) << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace pent
