#include "linecong/kummer.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "linecong/errors.hpp"
#include "linecong/parser.hpp"

namespace linecong {

namespace {

void require_unit(const PointJets& p, const char* what) {
  if (std::abs(p.xi.norm() - 1.0) > 1e-10) {
    throw MathError(MathErrorKind::precondition,
                    std::string(what) + " requires a unit direction field (set unitize_xi = true)");
  }
}

double triple(const Vec3& a, const Vec3& b, const Vec3& c) { return a.dot(b.cross(c)); }

Vec2 canonical(Vec2 v) {
  v.normalize();
  const double lead = std::abs(v[0]) > 1e-14 ? v[0] : v[1];
  return lead < 0.0 ? Vec2(-v) : v;
}

}  // namespace

PointJets evaluate_point(const CongruenceScene& scene, const Point2& q) {
  PointJets p;
  p.q = q;
  const Jet3 x = eval_vector_jet(scene.x, q);
  const Jet3 xi = eval_vector_jet(scene.direction(), q);
  p.x = value_of(x);
  p.Dx = jacobian_of(x);
  p.xi = value_of(xi);
  p.Dxi = jacobian_of(xi);
  if (!(p.xi.norm() > 0.0)) {
    throw MathError(MathErrorKind::domain, "direction field vanishes at the point");
  }
  return p;
}

KummerFormsClassical classical_forms(const PointJets& p) {
  KummerFormsClassical c;
  c.I = p.Dxi.transpose() * p.Dxi;
  c.II = -p.Dxi.transpose() * p.Dx;
  c.E = c.I(0, 0);
  c.F = c.I(0, 1);
  c.G = c.I(1, 1);
  c.L = c.II(0, 0);
  c.M1 = c.II(0, 1);  // -<x_u2, xi_u1>
  c.M2 = c.II(1, 0);  // -<x_u1, xi_u2>
  c.N = c.II(1, 1);
  c.regular = !nearly_singular(c.I) && c.E > 0.0 && c.G > 0.0 &&
              det2(c.I) > 1e-12 * c.I.squaredNorm();
  return c;
}

KummerFormsClassical classical_forms(const CongruenceScene& scene, const Point2& q) {
  return classical_forms(evaluate_point(scene, q));
}

KummerFormsOmega omega_forms(const CongruenceScene& scene, const PointJets& p) {
  KummerFormsOmega f;
  if (scene.omega) {
    f.omega = evaluate_basis(*scene.omega, p.q);
    f.omega_from_scene = true;
  } else {
    f.omega = p.Dxi;
  }
  const DecompositionSample d = decompose(p.Dxi, f.omega);
  if (!d.tangent) {
    throw MathError(MathErrorKind::not_tangent,
                    "omega is not a tangent moving basis of xi (residual " +
                        std::to_string(d.tangency_residual) + ")");
  }
  f.Delta = d.Lambda;
  f.delta = d.det;
  f.tangency_residual = d.tangency_residual;
  f.I_O = f.omega.transpose() * f.omega;
  f.II_O = -f.omega.transpose() * p.Dx;
  f.E_O = f.I_O(0, 0);
  f.F_O = f.I_O(0, 1);
  f.G_O = f.I_O(1, 1);
  f.L_O = f.II_O(0, 0);
  f.M1_O = f.II_O(0, 1);
  f.M2_O = f.II_O(1, 0);
  f.N_O = f.II_O(1, 1);
  return f;
}

KummerFormsOmega omega_forms(const CongruenceScene& scene, const Point2& q) {
  return omega_forms(scene, evaluate_point(scene, q));
}

Mat2 kummer_matrix(const KummerFormsOmega& f) { return f.II_O * adj(f.Delta.transpose()); }

double kummer_curvature_omega(const KummerFormsOmega& f, const Vec2& b) {
  return b.dot(kummer_matrix(f) * b) / b.dot(f.I_O * b);
}

double kummer_curvature_omega(const CongruenceScene& scene, const Point2& q, const Vec2& b) {
  return kummer_curvature_omega(omega_forms(scene, q), b);
}

double kummer_curvature_classical(const KummerFormsClassical& f, const Vec2& a) {
  if (!f.regular) {
    throw MathError(MathErrorKind::singular,
                    "Kummer curvature is undefined on the singular set of xi");
  }
  return a.dot(f.II * a) / a.dot(f.I * a);
}

double kummer_curvature_classical(const CongruenceScene& scene, const Point2& q, const Vec2& a) {
  return kummer_curvature_classical(classical_forms(scene, q), a);
}

PrincipalEquation principal_bde(const KummerFormsOmega& f) {
  const Mat2 M = kummer_matrix(f);
  const double X = M(0, 0);              // d22 L - d12 M1
  const double Y = M(1, 1);              // d11 N - d21 M2
  const double Mix = M(0, 1) + M(1, 0);  // d11 M1 - d21 L + d22 M2 - d12 N
  const double C1 = 2.0 * f.F_O * X - f.E_O * Mix;
  const double C2 = 2.0 * f.G_O * X - 2.0 * f.E_O * Y;
  const double C3 = f.G_O * Mix - 2.0 * f.F_O * Y;
  PrincipalEquation out;
  out.b_form = make_bde(C1, C2, C3, BdeKind::principal);
  Mat2 Cm;
  Cm << C1, 0.5 * C2, 0.5 * C2, C3;
  out.pulled_back = bde_from_matrix(0.5 * f.Delta * Cm * f.Delta.transpose(), BdeKind::principal);
  return out;
}

PrincipalEquation principal_bde(const CongruenceScene& scene, const Point2& q) {
  return principal_bde(omega_forms(scene, q));
}

BDECoeffs developable_bde(const PointJets& p, const KummerFormsOmega& f) {
  require_unit(p, "developable_bde");
  return bde_from_matrix(perp() * adj(f.II_O) * f.I_O * f.Delta.transpose(), BdeKind::developable);
}

BDECoeffs developable_bde(const CongruenceScene& scene, const Point2& q) {
  const PointJets p = evaluate_point(scene, q);
  return developable_bde(p, omega_forms(scene, p));
}

BDECoeffs developable_bde_triple(const PointJets& p) {
  require_unit(p, "developable_bde_triple");
  const Vec3 x1 = p.Dx.col(0), x2 = p.Dx.col(1);
  const Vec3 e1 = p.Dxi.col(0), e2 = p.Dxi.col(1);
  return make_bde(triple(x1, e1, p.xi), triple(x1, e2, p.xi) + triple(x2, e1, p.xi),
                  triple(x2, e2, p.xi), BdeKind::developable);
}

BDECoeffs developable_bde_triple(const CongruenceScene& scene, const Point2& q) {
  return developable_bde_triple(evaluate_point(scene, q));
}

NormalityReport is_normal(const KummerFormsClassical& c, const KummerFormsOmega& f, double tol) {
  NormalityReport r;
  r.asymmetry = relative_asymmetry(kummer_matrix(f));
  r.normal = r.asymmetry <= tol;
  r.classical_gap = std::abs(c.M1 - c.M2);
  return r;
}

NormalityReport is_normal(const CongruenceScene& scene, const Point2& q, double tol) {
  const PointJets p = evaluate_point(scene, q);
  return is_normal(classical_forms(p), omega_forms(scene, p), tol);
}

TheoremResidual theorem_residual(const KummerFormsOmega& f) {
  const Mat2 P = perp();
  const Mat2 A = adj(f.II_O);
  const Mat2 lhs = f.Delta * P * A.transpose() * f.Delta * f.I_O * f.Delta.transpose();
  const Mat2 rhs = f.delta * P * A * f.I_O * f.Delta.transpose();
  TheoremResidual r;
  r.residual = (lhs - rhs).norm();
  r.lhs_norm = lhs.norm();
  r.normal = relative_asymmetry(kummer_matrix(f)) <= kSymmetryTol;
  return r;
}

TheoremResidual theorem_residual(const CongruenceScene& scene, const Point2& q) {
  return theorem_residual(omega_forms(scene, q));
}

bool exact_normal_at(const CongruenceScene& scene, const Point2& q) {
  if (!scene.declared_exact_normal()) return false;
  return decompose(scene.x, *scene.omega, q).tangent;
}

namespace {

RelativeCurvatureSample exact_normal_sample(const CongruenceScene& scene, const Point2& q,
                                            const char* what) {
  if (!exact_normal_at(scene, q)) {
    throw MathError(MathErrorKind::precondition,
                    std::string(what) + " requires xi = normal(omega) with omega tangent to x");
  }
  return relative_curvatures(scene.x, *scene.omega, q);
}

}  // namespace

BDECoeffs principal_bde_via_alpha(const CongruenceScene& scene, const Point2& q) {
  const RelativeCurvatureSample s = exact_normal_sample(scene, q, "principal_bde_via_alpha");
  return bde_from_matrix(-s.K * det2(s.I_omega) * perp() * s.alpha.transpose(), BdeKind::principal);
}

BDECoeffs developable_bde_via_alpha(const CongruenceScene& scene, const Point2& q) {
  const RelativeCurvatureSample s = exact_normal_sample(scene, q, "developable_bde_via_alpha");
  return bde_from_matrix(-det2(s.I_omega) * perp() * s.alpha.transpose(), BdeKind::developable);
}

PrincipalDirections principal_directions_eigen(const CongruenceScene& scene, const Point2& q) {
  const PointJets p = evaluate_point(scene, q);
  const KummerFormsOmega f = omega_forms(scene, p);
  if (relative_asymmetry(kummer_matrix(f)) > kSymmetryTol) {
    throw MathError(MathErrorKind::precondition,
                    "principal directions by eigenvectors need a normal congruence at the point");
  }
  // Gram-Schmidt: omega = Q T with Q orthonormal and T upper triangular.
  const Vec3 w1 = f.omega.col(0), w2 = f.omega.col(1);
  const double t11 = w1.norm();
  const Vec3 q1 = w1 / t11;
  const double t12 = w2.dot(q1);
  const Vec3 perp2 = w2 - t12 * q1;
  const double t22 = perp2.norm();
  Mat32 Q;
  Q.col(0) = q1;
  Q.col(1) = perp2 / t22;
  Mat2 T;
  T << t11, t12, 0.0, t22;

  const Mat2 DeltaT = T * f.Delta.transpose();  // Dxi = Q (T Delta^T)
  const Mat2 II = -Q.transpose() * p.Dx;
  Mat2 M = II * adj(DeltaT);
  M = 0.5 * (M + M.transpose());

  Eigen::SelfAdjointEigenSolver<Mat2> eig(M);
  const Vec2 gamma = eig.eigenvalues();
  const Mat2 V = eig.eigenvectors();

  PrincipalDirections out;
  const double scale = std::max({1.0, std::abs(gamma[0]), std::abs(gamma[1])});
  out.values = {gamma[0], gamma[1]};
  out.umbilic = std::abs(gamma[1] - gamma[0]) <= 1e-10 * scale;
  if (!out.umbilic) {
    const Mat2 R = T.inverse();
    for (int i = 0; i < 2; ++i) out.directions.push_back(canonical(R * V.col(i)));
  }

  if (exact_normal_at(scene, q)) {
    const Jet3 n = eval_vector_jet(induced_normal(scene.omega->w1, scene.omega->w2), q);
    const Mat2 IIn = -Q.transpose() * jacobian_of(n);
    const DecompositionSample lam = decompose(p.Dx, Q);
    const Mat2 N = IIn * adj(lam.Lambda.transpose());
    double worst = 0.0;
    for (int i = 0; i < 2; ++i) {
      const Vec2 v = V.col(i);
      worst = std::max(worst, (N * v - gamma[1 - i] * v).norm());
    }
    out.swap_residual = worst / scale;
  }
  return out;
}

std::pair<double, double> extremum_system_residual(const KummerFormsOmega& f, const Vec2& b,
                                                   double k0) {
  const Vec2 u = b.normalized();
  const Mat2 M = kummer_matrix(f);
  const double mix = M(0, 1) + M(1, 0);
  const double r1 = u[0] * M(0, 0) + 0.5 * u[1] * mix - k0 * (u[0] * f.E_O + u[1] * f.F_O);
  const double r2 = u[1] * M(1, 1) + 0.5 * u[0] * mix - k0 * (u[1] * f.G_O + u[0] * f.F_O);
  return {r1, r2};
}

std::pair<double, double> extremum_system_residual(const KummerFormsOmega& f, const Vec2& b) {
  return extremum_system_residual(f, b, kummer_curvature_omega(f, b));
}

FocalLimitData focal_and_limit(const KummerFormsClassical& c) {
  if (!c.regular) {
    throw MathError(MathErrorKind::singular,
                    "focal and limit points are undefined on the singular set of xi");
  }
  FocalLimitData d;
  const double EG = c.E * c.G - c.F * c.F;
  const double qa = EG;
  const double qb = c.F * c.M2 - c.N * c.E + c.F * c.M1 - c.G * c.L;
  const double qc = c.N * c.L - c.M2 * c.M1;
  // qb^2 - 4 qa qc written through B = adj(I) II, which stays accurate near double roots.
  const Mat2 B = adj(c.I) * c.II;
  const double disc = (B(0, 0) - B(1, 1)) * (B(0, 0) - B(1, 1)) + 4.0 * B(0, 1) * B(1, 0);
  const std::complex<double> root = std::sqrt(std::complex<double>(disc, 0.0));
  // Numerically stable pair: avoid cancellation between -qb and the root.
  const std::complex<double> big = -0.5 * (qb + (qb >= 0.0 ? root : -root));
  std::complex<double> r1 = big / qa;
  std::complex<double> r2 = std::abs(big) > 0.0 ? qc / big : r1;
  if (r2.real() < r1.real() || (r2.real() == r1.real() && r2.imag() < r1.imag())) std::swap(r1, r2);
  d.rho1 = r1;
  d.rho2 = r2;
  d.rho_real = disc >= 0.0;
  if (d.rho_real) {
    d.rho1 = {r1.real(), 0.0};
    d.rho2 = {r2.real(), 0.0};
  }

  // Extremal values of II(v)/I(v): generalized symmetric eigenproblem.
  const Mat2 S = 0.5 * (c.II + c.II.transpose());
  Eigen::GeneralizedSelfAdjointEigenSolver<Mat2> ges(S, c.I, Eigen::EigenvaluesOnly);
  d.kappa1 = ges.eigenvalues()[0];
  d.kappa2 = ges.eigenvalues()[1];

  d.is_normal_point = std::abs(c.M1 - c.M2) <= kSymmetryTol * c.II.norm();
  d.sum_residual = std::abs(d.rho1 + d.rho2 - (d.kappa1 + d.kappa2));
  const std::complex<double> rd = d.rho1 - d.rho2;
  const double lhs = (d.kappa1 - d.kappa2) * (d.kappa1 - d.kappa2) - (rd * rd).real();
  d.diff_residual = std::abs(lhs - (c.M1 - c.M2) * (c.M1 - c.M2) / EG);
  return d;
}

FocalLimitData focal_and_limit(const CongruenceScene& scene, const Point2& q) {
  return focal_and_limit(classical_forms(scene, q));
}

Point2 PlaneCurve::at(double t) const {
  const Point2 s(t, 0.0);
  return {eval(u1, s), eval(u2, s)};
}

Vec2 PlaneCurve::tangent(double t) const {
  const Point2 s(t, 0.0);
  return {eval_jet(u1, s).d1, eval_jet(u2, s).d1};
}

PlaneCurve parse_curve(std::string_view u1, std::string_view u2, double t_min, double t_max) {
  if (!(t_min < t_max)) throw std::invalid_argument("curve parameter range is empty");
  PlaneCurve c;
  c.u1 = parse_scalar(u1, kCurveVariables);
  c.u2 = parse_scalar(u2, kCurveVariables);
  c.t_min = t_min;
  c.t_max = t_max;
  return c;
}

double central_point(const PointJets& p, const Vec2& direction) {
  const Vec3 xp = p.Dx * direction;
  const Vec3 ep = p.Dxi * direction;
  const double ee = ep.squaredNorm();
  if (!(ee > 1e-24 * std::max(1.0, direction.squaredNorm()))) {
    throw MathError(MathErrorKind::singular, "xi' vanishes along the curve");
  }
  return -xp.dot(ep) / ee;
}

namespace {

std::vector<double> samples(double a, double b, int n) {
  std::vector<double> t(n);
  for (int i = 0; i < n; ++i) t[i] = n == 1 ? a : a + (b - a) * i / (n - 1);
  return t;
}

void require_inside(const CongruenceScene& scene, const Point2& u, double t) {
  if (!scene.domain.contains(u)) {
    throw MathError(MathErrorKind::domain,
                    "curve leaves the domain at t = " + std::to_string(t));
  }
}

}  // namespace

StrictionCurve striction_curve(const CongruenceScene& scene, const PlaneCurve& curve, int t_samples) {
  if (t_samples < 1) throw std::invalid_argument("t_samples must be positive");
  const auto beta_at = [&](double t, double* k_out) {
    const Point2 u = curve.at(t);
    const PointJets p = evaluate_point(scene, u);
    const double k = central_point(p, curve.tangent(t));
    if (k_out) *k_out = k;
    return Vec3(p.x + k * p.xi);
  };
  const double h = 1e-5 * std::max(1.0, curve.t_max - curve.t_min);
  StrictionCurve out;
  for (double t : samples(curve.t_min, curve.t_max, t_samples)) {
    StrictionSample s;
    s.t = t;
    s.u = curve.at(t);
    require_inside(scene, s.u, t);
    const PointJets p = evaluate_point(scene, s.u);
    require_unit(p, "striction_curve");
    const Vec2 d = curve.tangent(t);
    s.k = central_point(p, d);
    s.beta = p.x + s.k * p.xi;
    const Vec3 dbeta = (beta_at(t + h, nullptr) - beta_at(t - h, nullptr)) / (2.0 * h);
    s.property_residual = std::abs(dbeta.dot(p.Dxi * d));
    out.max_property_residual = std::max(out.max_property_residual, s.property_residual);
    out.samples.push_back(s);
  }
  return out;
}

CongruenceMesh surface_of_congruence(const CongruenceScene& scene, const PlaneCurve& curve,
                                     int t_samples, double w_min, double w_max, int w_samples) {
  if (t_samples < 1 || w_samples < 1) throw std::invalid_argument("sample counts must be positive");
  CongruenceMesh m;
  m.rows = t_samples;
  m.cols = w_samples;
  m.t = samples(curve.t_min, curve.t_max, t_samples);
  m.w = w_samples == 1 ? std::vector<double>{0.0} : samples(w_min, w_max, w_samples);
  for (double t : m.t) {
    const Point2 u = curve.at(t);
    require_inside(scene, u, t);
    const PointJets p = evaluate_point(scene, u);
    const Vec2 d = curve.tangent(t);
    m.developability.push_back(triple(p.Dx * d, p.Dxi * d, p.xi));
    for (double w : m.w) m.vertices.push_back(p.x + w * p.xi);
  }
  return m;
}

}  // namespace linecong
