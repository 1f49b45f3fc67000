#include "linecong/bde.hpp"

#include <algorithm>
#include <cmath>

#include "linecong/errors.hpp"
#include "linecong/frontal.hpp"
#include "linecong/kummer.hpp"

namespace linecong {

std::string_view to_string(RootMultiplicity m) {
  switch (m) {
    case RootMultiplicity::two_distinct:
      return "two_distinct";
    case RootMultiplicity::double_root:
      return "double_root";
    case RootMultiplicity::identically_zero:
      return "identically_zero";
    case RootMultiplicity::none_real:
      return "none_real";
  }
  return "unknown";
}

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::left_domain:
      return "left_domain";
    case Termination::hit_discriminant_zero:
      return "hit_discriminant_zero";
    case Termination::hit_singular_set:
      return "hit_singular_set";
    case Termination::max_steps:
      return "max_steps";
  }
  return "unknown";
}

namespace {

Vec2 canonical(Vec2 v) {
  v.normalize();
  const double lead = v[0] != 0.0 ? v[0] : v[1];
  return lead < 0.0 ? Vec2(-v) : v;
}

constexpr double kDoubleRootTol = 1e-14;

}  // namespace

DirectionPair solve_directions(const BDECoeffs& c, double zero_tol, double scale) {
  DirectionPair out;
  const double s = c.max_abs();
  if (s <= zero_tol * scale) {
    out.multiplicity = RootMultiplicity::identically_zero;
    return out;
  }
  const double a = c.A / s, b = c.B / s, cc = c.C / s;
  const double d = b * b - 4.0 * a * cc;
  if (d < -kDoubleRootTol) {
    out.multiplicity = RootMultiplicity::none_real;
    return out;
  }
  if (a == 0.0 && cc == 0.0) {
    out.directions = {Vec2(1.0, 0.0), Vec2(0.0, 1.0)};
    out.multiplicity = RootMultiplicity::two_distinct;
    return out;
  }
  const bool use_r = std::abs(a) >= std::abs(cc);  // r = du1/du2, else s = du2/du1
  const double lead = use_r ? a : cc;
  const double tail = use_r ? cc : a;
  const auto make = [use_r](double root) {
    return canonical(use_r ? Vec2(root, 1.0) : Vec2(1.0, root));
  };
  if (d <= kDoubleRootTol) {
    out.directions = {make(-b / (2.0 * lead))};
    out.multiplicity = RootMultiplicity::double_root;
    return out;
  }
  const double sq = std::sqrt(d);
  const double q = -0.5 * (b + (b >= 0.0 ? sq : -sq));
  out.directions = {make(q / lead), make(tail / q)};
  std::sort(out.directions.begin(), out.directions.end(), [](const Vec2& u, const Vec2& v) {
    return u[0] != v[0] ? u[0] > v[0] : u[1] > v[1];
  });
  out.multiplicity = RootMultiplicity::two_distinct;
  return out;
}

BdeField make_field(const CongruenceScene& scene, BdeKind kind) {
  BdeField f;
  f.kind = kind;
  f.domain = scene.domain;
  switch (kind) {
    case BdeKind::principal:
      f.coeffs = [scene](const Point2& q) { return principal_bde(scene, q).pulled_back; };
      f.factor = [scene](const Point2& q) { return omega_forms(scene, q).delta; };
      break;
    case BdeKind::developable:
      f.coeffs = [scene](const Point2& q) { return developable_bde(scene, q); };
      break;
    case BdeKind::curvature_line:
      if (!scene.omega) {
        throw MathError(MathErrorKind::precondition,
                        "lines of curvature need a moving basis given in the scene");
      }
      f.coeffs = [scene](const Point2& q) { return curvature_line_bde(scene.x, *scene.omega, q); };
      f.factor = [scene](const Point2& q) { return decompose(scene.x, *scene.omega, q).det; };
      break;
    case BdeKind::synthetic:
      throw std::invalid_argument("synthetic fields are built by hand");
  }
  return f;
}

namespace {

enum class Pick { ok, collide, failed };

// Root of the field at p closest in angle to ref, oriented along ref.
Pick pick_direction(const BdeField& field, const Point2& p, const Vec2& ref, double collide_angle,
                    Vec2& out) {
  DirectionPair dp;
  try {
    dp = solve_directions(field.coeffs(p));
  } catch (const MathError&) {
    return Pick::failed;
  }
  if (dp.multiplicity != RootMultiplicity::two_distinct) return Pick::collide;
  const Vec2& d0 = dp.directions[0];
  const Vec2& d1 = dp.directions[1];
  const double sep = std::acos(std::min(1.0, std::abs(d0.dot(d1))));
  if (sep < collide_angle) return Pick::collide;
  const Vec2& best = std::abs(d0.dot(ref)) >= std::abs(d1.dot(ref)) ? d0 : d1;
  out = best.dot(ref) < 0.0 ? Vec2(-best) : best;
  return Pick::ok;
}

Vec2 factor_gradient(const BdeField& field, const Point2& p) {
  const double h = 1e-7 * std::max(field.domain.width(), field.domain.height());
  const Vec2 e1(h, 0.0), e2(0.0, h);
  return {(field.factor(p + e1) - field.factor(p - e1)) / (2.0 * h),
          (field.factor(p + e2) - field.factor(p - e2)) / (2.0 * h)};
}

IntegralCurve trace_level_set(const BdeField& field, const Point2& seed, int branch,
                              const TraceOptions& opt) {
  IntegralCurve c;
  c.branch = branch;
  c.within_singular_set = true;
  const auto tangent = [&](const Point2& p, const Vec2& ref, Vec2& out) {
    const Vec2 g = factor_gradient(field, p);
    if (!(g.norm() > 1e-12)) return false;
    const Vec2 t = Vec2(-g[1], g[0]).normalized();
    out = t.dot(ref) < 0.0 ? Vec2(-t) : t;
    return true;
  };
  Vec2 dir;
  {
    const Vec2 g = factor_gradient(field, seed);
    if (!(g.norm() > 1e-12)) {
      throw MathError(MathErrorKind::precondition, "seed is a critical point of the singular set");
    }
    Vec2 t = canonical(Vec2(-g[1], g[0]));
    if (branch == 2) t = -t;
    if (opt.initial_direction) t = t.dot(*opt.initial_direction) < 0.0 ? Vec2(-t) : t;
    else t *= opt.direction_sign;
    dir = t;
  }
  Point2 p = seed;
  c.points.push_back(p);
  c.t.push_back(0.0);
  const double h = opt.step;
  for (int step = 0; step < opt.max_steps; ++step) {
    Vec2 k1, k2, k3, k4;
    bool ok = tangent(p, dir, k1);
    ok = ok && field.domain.contains(p + 0.5 * h * k1) && tangent(p + 0.5 * h * k1, k1, k2);
    ok = ok && field.domain.contains(p + 0.5 * h * k2) && tangent(p + 0.5 * h * k2, k2, k3);
    ok = ok && field.domain.contains(p + h * k3) && tangent(p + h * k3, k3, k4);
    if (!ok) {
      c.reason = field.domain.contains(p + h * dir) ? Termination::hit_discriminant_zero
                                                    : Termination::left_domain;
      return c;
    }
    Point2 next = p + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    for (int it = 0; it < 3; ++it) {
      const Vec2 g = factor_gradient(field, next);
      const double gg = g.squaredNorm();
      if (!(gg > 0.0)) break;
      next -= field.factor(next) * g / gg;
    }
    if (!field.domain.contains(next)) {
      c.reason = Termination::left_domain;
      return c;
    }
    dir = (k1 + 2.0 * k2 + 2.0 * k3 + k4).normalized();
    c.t.push_back(c.t.back() + (next - p).norm());
    p = next;
    c.points.push_back(p);
  }
  c.reason = Termination::max_steps;
  return c;
}

}  // namespace

IntegralCurve trace(const BdeField& field, const Point2& seed, int branch, const TraceOptions& opt) {
  if (branch != 1 && branch != 2) throw std::invalid_argument("branch must be 1 or 2");
  if (!field.domain.contains(seed)) {
    throw MathError(MathErrorKind::precondition, "seed lies outside the domain");
  }
  double f0 = 1.0;
  if (field.factor) {
    f0 = field.factor(seed);
    if (std::abs(f0) <= opt.factor_tol) return trace_level_set(field, seed, branch, opt);
  }
  const DirectionPair dp = solve_directions(field.coeffs(seed));
  if (dp.multiplicity != RootMultiplicity::two_distinct ||
      std::acos(std::min(1.0, std::abs(dp.directions[0].dot(dp.directions[1])))) < opt.collide_angle) {
    throw MathError(MathErrorKind::precondition, "seed lies on the discriminant-zero set");
  }
  Vec2 dir = dp.directions[branch - 1];
  if (opt.initial_direction) {
    const Vec2& ref = *opt.initial_direction;
    const Vec2& a = dp.directions[0];
    const Vec2& b = dp.directions[1];
    dir = std::abs(a.dot(ref)) >= std::abs(b.dot(ref)) ? a : b;
    if (dir.dot(ref) < 0.0) dir = -dir;
  } else {
    dir *= opt.direction_sign;
  }

  IntegralCurve c;
  c.branch = branch;
  Point2 p = seed;
  c.points.push_back(p);
  c.t.push_back(0.0);
  const double h = opt.step;
  const auto stage = [&](const Point2& at, const Vec2& ref, Vec2& out) -> Pick {
    if (!field.domain.contains(at)) return Pick::failed;
    return pick_direction(field, at, ref, opt.collide_angle, out);
  };
  for (int step = 0; step < opt.max_steps; ++step) {
    Vec2 k1, k2, k3, k4;
    Pick r = stage(p, dir, k1);
    if (r == Pick::ok) r = stage(p + 0.5 * h * k1, k1, k2);
    if (r == Pick::ok) r = stage(p + 0.5 * h * k2, k2, k3);
    if (r == Pick::ok) r = stage(p + h * k3, k3, k4);
    if (r != Pick::ok) {
      if (r == Pick::collide) {
        c.reason = Termination::hit_discriminant_zero;
      } else if (!field.domain.contains(p + h * dir)) {
        c.reason = Termination::left_domain;
      } else {
        c.reason = Termination::hit_singular_set;
      }
      return c;
    }
    const Point2 next = p + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!field.domain.contains(next)) {
      c.reason = Termination::left_domain;
      return c;
    }
    if (field.factor) {
      double fn;
      try {
        fn = field.factor(next);
      } catch (const MathError&) {
        c.reason = Termination::hit_singular_set;
        return c;
      }
      if (std::abs(fn) <= opt.factor_tol || (fn > 0.0) != (f0 > 0.0)) {
        c.reason = Termination::hit_singular_set;
        return c;
      }
    }
    dir = (k1 + 2.0 * k2 + 2.0 * k3 + k4).normalized();
    c.t.push_back(c.t.back() + h);
    p = next;
    c.points.push_back(p);
  }
  c.reason = Termination::max_steps;
  return c;
}

IntegralCurve trace(const CongruenceScene& scene, BdeKind kind, const Point2& seed, int branch,
                    const TraceOptions& options) {
  return trace(make_field(scene, kind), seed, branch, options);
}

std::function<double(const Point2&)> discriminant_function(const CongruenceScene& scene,
                                                           BdeKind kind) {
  switch (kind) {
    case BdeKind::principal:
      return [scene](const Point2& q) {
        const KummerFormsOmega f = omega_forms(scene, q);
        const double d = principal_bde(f).b_form.discriminant;
        return 0.5 * f.delta * std::sqrt(std::max(0.0, d));
      };
    case BdeKind::curvature_line:
      if (!scene.omega) {
        throw MathError(MathErrorKind::precondition,
                        "lines of curvature need a moving basis given in the scene");
      }
      return [scene](const Point2& q) {
        const RelativeCurvatureSample s = relative_curvatures(scene.x, *scene.omega, q);
        const double d = bde_from_matrix(perp() * s.alpha.transpose(), BdeKind::curvature_line).discriminant;
        return s.lambda * std::sqrt(std::max(0.0, d));
      };
    case BdeKind::developable:
      return [scene](const Point2& q) { return developable_bde(scene, q).discriminant; };
    case BdeKind::synthetic:
      break;
  }
  throw std::invalid_argument("no discriminant function for this kind");
}

DiscriminantZeroSet discriminant_zero_set(const CongruenceScene& scene, BdeKind kind, int grid_n,
                                          double iso_tol) {
  if (grid_n < 8) throw std::invalid_argument("grid_n must be at least 8");
  const auto f = discriminant_function(scene, kind);
  DiscriminantZeroSet out;
  double peak = 0.0;
  bool any = false;
  for (int j = 0; j < grid_n; ++j) {
    for (int i = 0; i < grid_n; ++i) {
      const Point2 q(lattice_coordinate(scene.domain.u1_min, scene.domain.u1_max, grid_n, i),
                     lattice_coordinate(scene.domain.u2_min, scene.domain.u2_max, grid_n, j));
      try {
        peak = std::max(peak, std::abs(f(q)));
        any = true;
      } catch (const MathError&) {
      }
    }
  }
  if (any && peak <= 1e-10) {
    out.status = "degenerate";
    return out;
  }
  out.curves = zero_contours(f, scene.domain, grid_n, iso_tol);
  out.status = out.curves.empty() ? "empty" : "curves";
  return out;
}

}  // namespace linecong
