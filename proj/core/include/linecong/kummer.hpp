#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "linecong/bde_types.hpp"
#include "linecong/frontal.hpp"
#include "linecong/scene.hpp"

namespace linecong {

inline constexpr double kSymmetryTol = 1e-8;

/// Values and Jacobians of x and of the direction field at one point.
struct PointJets {
  Point2 q = Point2::Zero();
  Vec3 x = Vec3::Zero();
  Mat32 Dx = Mat32::Zero();
  Vec3 xi = Vec3::Zero();
  Mat32 Dxi = Mat32::Zero();
};

PointJets evaluate_point(const CongruenceScene& scene, const Point2& q);

struct KummerFormsClassical {
  double E = 0, F = 0, G = 0;
  double L = 0, M1 = 0, M2 = 0, N = 0;
  Mat2 I = Mat2::Zero();   // Dxi^T Dxi
  Mat2 II = Mat2::Zero();  // -Dxi^T Dx
  /// False on the singular set of xi, where I is not positive definite.
  bool regular = false;
};

KummerFormsClassical classical_forms(const PointJets& p);
KummerFormsClassical classical_forms(const CongruenceScene& scene, const Point2& q);

struct KummerFormsOmega {
  double E_O = 0, F_O = 0, G_O = 0;
  double L_O = 0, M1_O = 0, M2_O = 0, N_O = 0;
  Mat2 I_O = Mat2::Zero();   // Omega^T Omega
  Mat2 II_O = Mat2::Zero();  // -Omega^T Dx
  Mat2 Delta = Mat2::Zero(); // Dxi = Omega Delta^T
  double delta = 0.0;
  double tangency_residual = 0.0;
  Mat32 omega = Mat32::Zero();
  bool omega_from_scene = false;  // false: (xi_u1, xi_u2) was used pointwise
};

/// Uses the scene's omega, which must be tangent to xi (else
/// MathError(not_tangent)); without one, (xi_u1, xi_u2) is used and must
/// have rank 2 (else MathError(rank_deficient)).
KummerFormsOmega omega_forms(const CongruenceScene& scene, const PointJets& p);
KummerFormsOmega omega_forms(const CongruenceScene& scene, const Point2& q);

/// II_O adj(Delta^T); symmetric exactly for normal congruences.
Mat2 kummer_matrix(const KummerFormsOmega& f);

double kummer_curvature_omega(const KummerFormsOmega& f, const Vec2& b);
double kummer_curvature_omega(const CongruenceScene& scene, const Point2& q, const Vec2& b);

/// Throws MathError(singular) on the singular set of xi.
double kummer_curvature_classical(const KummerFormsClassical& f, const Vec2& a);
double kummer_curvature_classical(const CongruenceScene& scene, const Point2& q, const Vec2& a);

struct PrincipalEquation {
  BDECoeffs b_form;       // C1 b1^2 + C2 b1 b2 + C3 b2^2 in P_Omega coordinates
  BDECoeffs pulled_back;  // half of the b-form evaluated at b = Delta^T u'
};

PrincipalEquation principal_bde(const KummerFormsOmega& f);
PrincipalEquation principal_bde(const CongruenceScene& scene, const Point2& q);

/// u'^T P adj(II_O) I_O Delta^T u'. Requires a unit direction field.
BDECoeffs developable_bde(const CongruenceScene& scene, const Point2& q);
BDECoeffs developable_bde(const PointJets& p, const KummerFormsOmega& f);

/// Triple products [x_ui, xi_uj, xi].
BDECoeffs developable_bde_triple(const CongruenceScene& scene, const Point2& q);
BDECoeffs developable_bde_triple(const PointJets& p);

struct NormalityReport {
  bool normal = false;
  double asymmetry = 0.0;      // relative Frobenius asymmetry of kummer_matrix
  double classical_gap = 0.0;  // |M1 - M2|
};

NormalityReport is_normal(const KummerFormsClassical& c, const KummerFormsOmega& f,
                          double tol = kSymmetryTol);
NormalityReport is_normal(const CongruenceScene& scene, const Point2& q, double tol = kSymmetryTol);

struct TheoremResidual {
  double residual = 0.0;
  double lhs_norm = 0.0;
  bool normal = false;  // precondition; the residual need not vanish otherwise
};

TheoremResidual theorem_residual(const KummerFormsOmega& f);
TheoremResidual theorem_residual(const CongruenceScene& scene, const Point2& q);

/// True when xi is normal(omega) and omega is tangent to x at q.
bool exact_normal_at(const CongruenceScene& scene, const Point2& q);

/// -K det(I_omega) u'^T P alpha^T u' for exact normal scenes.
BDECoeffs principal_bde_via_alpha(const CongruenceScene& scene, const Point2& q);
/// -det(I_omega) u'^T P alpha^T u' for exact normal scenes.
BDECoeffs developable_bde_via_alpha(const CongruenceScene& scene, const Point2& q);

struct PrincipalDirections {
  std::vector<Vec2> directions;  // b-coordinates in the scene's P_Omega basis
  std::vector<double> values;    // eigenvalues in the orthonormalised frame
  bool umbilic = false;
  /// max |N v_i - gamma_j v_i| / (1 + max|gamma|) with N = II adj(Lambda^T);
  /// only available when omega is also tangent to x.
  std::optional<double> swap_residual;
};

/// Requires a normal point (MathError(precondition) otherwise).
PrincipalDirections principal_directions_eigen(const CongruenceScene& scene, const Point2& q);

/// Residuals of the two linear extremality conditions at the unit vector
/// b/|b|, with k0 = kummer_curvature_omega(b).
std::pair<double, double> extremum_system_residual(const KummerFormsOmega& f, const Vec2& b);
std::pair<double, double> extremum_system_residual(const KummerFormsOmega& f, const Vec2& b,
                                                   double k0);

struct FocalLimitData {
  std::complex<double> rho1, rho2;  // focal coordinates, Re(rho1) <= Re(rho2)
  double kappa1 = 0.0, kappa2 = 0.0;  // extremal central-point coordinates
  bool rho_real = false;
  bool is_normal_point = false;
  double sum_residual = 0.0;   // |rho1 + rho2 - kappa1 - kappa2|
  double diff_residual = 0.0;  // |(k1-k2)^2 - (r1-r2)^2 - (M1-M2)^2/(EG-F^2)|
};

/// Throws MathError(singular) on the singular set of xi.
FocalLimitData focal_and_limit(const KummerFormsClassical& c);
FocalLimitData focal_and_limit(const CongruenceScene& scene, const Point2& q);

/// A curve t -> (u1(t), u2(t)) in the parameter domain.
struct PlaneCurve {
  ScalarExpr u1;  // variable index 0 is t
  ScalarExpr u2;
  double t_min = 0.0;
  double t_max = 1.0;

  Point2 at(double t) const;
  Vec2 tangent(double t) const;
};

/// Parses u1(t), u2(t) given as expressions in t.
PlaneCurve parse_curve(std::string_view u1, std::string_view u2, double t_min, double t_max);

struct StrictionSample {
  double t = 0.0;
  Point2 u = Point2::Zero();
  Vec3 beta = Vec3::Zero();
  double k = 0.0;                  // central point coordinate
  double property_residual = 0.0;  // |<beta', xi'>| with beta' by central differences
};

struct StrictionCurve {
  std::vector<StrictionSample> samples;
  double max_property_residual = 0.0;
};

/// Samples t uniformly on [t_min, t_max]. Throws MathError(singular) where
/// xi' vanishes and MathError(domain) where the curve leaves the domain.
StrictionCurve striction_curve(const CongruenceScene& scene, const PlaneCurve& curve,
                               int t_samples);

/// Central-point coordinate -<x', xi'>/<xi', xi'> along a curve direction.
double central_point(const PointJets& p, const Vec2& direction);

struct CongruenceMesh {
  int rows = 0;  // t samples
  int cols = 0;  // w samples
  std::vector<Vec3> vertices;  // row-major: vertex (i, j) at i * cols + j
  std::vector<double> t;
  std::vector<double> w;
  std::vector<double> developability;  // [x', xi', xi] per t sample
};

CongruenceMesh surface_of_congruence(const CongruenceScene& scene, const PlaneCurve& curve,
                                     int t_samples, double w_min, double w_max, int w_samples);

}  // namespace linecong
