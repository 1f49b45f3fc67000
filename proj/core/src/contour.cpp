#include "linecong/contour.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "linecong/errors.hpp"

namespace linecong {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double safe_eval(const std::function<double(const Point2&)>& f, const Point2& p) {
  try {
    const double v = f(p);
    return std::isfinite(v) ? v : kNaN;
  } catch (const MathError&) {
    return kNaN;
  }
}

// Illinois (modified regula falsi) on the segment a -> b with f(a) > 0 >= f(b).
Point2 refine(const std::function<double(const Point2&)>& f, const Point2& a, double fa,
              const Point2& b, double fb, double iso_tol) {
  if (fb == 0.0) return b;
  double s0 = 0.0, s1 = 1.0;
  double f0 = fa, f1 = fb;
  int side = 0;
  Point2 best = std::abs(fa) < std::abs(fb) ? a : b;
  double best_f = std::min(std::abs(fa), std::abs(fb));
  for (int it = 0; it < 100 && best_f > iso_tol; ++it) {
    double s = (s0 * f1 - s1 * f0) / (f1 - f0);
    if (!(s > s0 && s < s1)) s = 0.5 * (s0 + s1);
    const Point2 p = a + s * (b - a);
    const double fs = safe_eval(f, p);
    if (!std::isfinite(fs)) break;
    if (std::abs(fs) < best_f) {
      best_f = std::abs(fs);
      best = p;
    }
    if (fs > 0.0) {
      s0 = s;
      f0 = fs;
      if (side == -1) f1 *= 0.5;
      side = -1;
    } else {
      s1 = s;
      f1 = fs;
      if (side == 1) f0 *= 0.5;
      side = 1;
    }
    if (s1 - s0 <= 4.0 * std::numeric_limits<double>::epsilon()) break;
  }
  return best;
}

bool same_points(const Polyline& a, const Polyline& b) {
  if (a.points.size() != b.points.size()) return false;
  for (const Point2& p : a.points) {
    bool found = false;
    for (const Point2& q : b.points) {
      if ((p - q).norm() <= 1e-12) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

double lattice_coordinate(double lo, double hi, int grid_n, int i) {
  return lo + (i + 0.5) * (hi - lo) / grid_n;
}

std::vector<Polyline> zero_contours(const std::function<double(const Point2&)>& f,
                                    const DomainRect& domain, int grid_n, double iso_tol) {
  if (grid_n < 2) throw std::invalid_argument("grid_n must be at least 2");
  const int n = grid_n;
  std::vector<double> v(static_cast<std::size_t>(n) * n);
  std::vector<Point2> node(v.size());
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const Point2 p(lattice_coordinate(domain.u1_min, domain.u1_max, n, i),
                     lattice_coordinate(domain.u2_min, domain.u2_max, n, j));
      node[j * n + i] = p;
      v[j * n + i] = safe_eval(f, p);
    }
  }
  const auto idx = [n](int i, int j) { return j * n + i; };
  // Edge ids: 2*node for the edge to the right neighbour, 2*node+1 upwards.
  const auto h_edge = [&](int i, int j) { return 2L * idx(i, j); };
  const auto v_edge = [&](int i, int j) { return 2L * idx(i, j) + 1; };

  std::unordered_map<long, Point2> vertex;
  std::unordered_map<long, std::vector<long>> adjacency;
  std::vector<long> order;  // first-seen order keeps output deterministic

  const auto crossing = [&](long edge) {
    auto it = vertex.find(edge);
    if (it != vertex.end()) return;
    const int k = static_cast<int>(edge / 2);
    const int i = k % n, j = k / n;
    const int k2 = (edge % 2 == 0) ? idx(i + 1, j) : idx(i, j + 1);
    int a = k, b = k2;
    if (!(v[a] > 0.0)) std::swap(a, b);
    vertex[edge] = refine(f, node[a], v[a], node[b], v[b], iso_tol);
  };
  const auto segment = [&](long e1, long e2) {
    crossing(e1);
    crossing(e2);
    for (long e : {e1, e2}) {
      if (!adjacency.count(e)) order.push_back(e);
    }
    adjacency[e1].push_back(e2);
    adjacency[e2].push_back(e1);
  };

  for (int j = 0; j + 1 < n; ++j) {
    for (int i = 0; i + 1 < n; ++i) {
      const double c0 = v[idx(i, j)], c1 = v[idx(i + 1, j)], c2 = v[idx(i + 1, j + 1)],
                   c3 = v[idx(i, j + 1)];
      if (std::isnan(c0) || std::isnan(c1) || std::isnan(c2) || std::isnan(c3)) continue;
      const int code = (c0 > 0) | ((c1 > 0) << 1) | ((c2 > 0) << 2) | ((c3 > 0) << 3);
      const long e0 = h_edge(i, j), e1 = v_edge(i + 1, j), e2 = h_edge(i, j + 1), e3 = v_edge(i, j);
      switch (code) {
        case 0:
        case 15:
          break;
        case 1:
        case 14:
          segment(e3, e0);
          break;
        case 2:
        case 13:
          segment(e0, e1);
          break;
        case 3:
        case 12:
          segment(e3, e1);
          break;
        case 4:
        case 11:
          segment(e1, e2);
          break;
        case 6:
        case 9:
          segment(e0, e2);
          break;
        case 7:
        case 8:
          segment(e3, e2);
          break;
        case 5:
        case 10: {
          const Point2 centre = 0.5 * (node[idx(i, j)] + node[idx(i + 1, j + 1)]);
          double cv = safe_eval(f, centre);
          if (std::isnan(cv)) cv = 0.25 * (c0 + c1 + c2 + c3);
          const bool centre_pos = cv > 0.0;
          // Keep the corners that share the centre's class connected.
          if ((code == 5) == centre_pos) {
            segment(e0, e1);
            segment(e2, e3);
          } else {
            segment(e3, e0);
            segment(e1, e2);
          }
          break;
        }
      }
    }
  }

  std::vector<Polyline> out;
  std::unordered_map<long, bool> visited;
  const auto walk = [&](long start) {
    Polyline pl;
    long prev = -1, cur = start;
    for (;;) {
      visited[cur] = true;
      pl.points.push_back(vertex.at(cur));
      long nxt = -1;
      for (long cand : adjacency.at(cur)) {
        if (cand != prev && !visited[cand]) {
          nxt = cand;
          break;
        }
      }
      if (nxt < 0) {
        for (long cand : adjacency.at(cur)) {
          if (cand == start && cand != prev && pl.points.size() > 2) pl.closed = true;
        }
        break;
      }
      prev = cur;
      cur = nxt;
    }
    if (pl.closed) pl.points.push_back(pl.points.front());
    return pl;
  };
  for (long e : order) {
    if (!visited[e] && adjacency.at(e).size() == 1) out.push_back(walk(e));
  }
  for (long e : order) {
    if (!visited[e]) out.push_back(walk(e));
  }

  std::vector<Polyline> unique;
  for (auto& pl : out) {
    // Collapse consecutive coincident vertices (zeros sitting on nodes).
    std::vector<Point2> pts;
    for (const Point2& p : pl.points) {
      if (pts.empty() || (p - pts.back()).norm() > 1e-14) pts.push_back(p);
    }
    pl.points = std::move(pts);
    if (pl.points.size() < 2) continue;
    bool dup = false;
    for (const auto& u : unique) dup = dup || same_points(u, pl);
    if (!dup) unique.push_back(std::move(pl));
  }
  return unique;
}

double distance_to_polyline(const Point2& p, const std::vector<Point2>& line) {
  if (line.empty()) return std::numeric_limits<double>::infinity();
  if (line.size() == 1) return (p - line[0]).norm();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k + 1 < line.size(); ++k) {
    const Point2 a = line[k], b = line[k + 1];
    const Point2 ab = b - a;
    const double len2 = ab.squaredNorm();
    double s = len2 > 0.0 ? (p - a).dot(ab) / len2 : 0.0;
    s = std::clamp(s, 0.0, 1.0);
    best = std::min(best, (p - (a + s * ab)).norm());
  }
  return best;
}

double hausdorff_distance(const std::vector<Point2>& a, const std::vector<Point2>& b) {
  double d = 0.0;
  for (const Point2& p : a) d = std::max(d, distance_to_polyline(p, b));
  for (const Point2& p : b) d = std::max(d, distance_to_polyline(p, a));
  return d;
}

}  // namespace linecong
