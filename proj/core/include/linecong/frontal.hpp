#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "linecong/bde_types.hpp"
#include "linecong/contour.hpp"
#include "linecong/linalg.hpp"
#include "linecong/scene.hpp"

namespace linecong {

inline constexpr double kRankTol = 1e-10;
inline constexpr double kTangencyTol = 1e-8;

/// Lambda with DF = Omega Lambda^T, for a map F and a moving basis Omega.
struct DecompositionSample {
  Mat2 Lambda = Mat2::Zero();
  double det = 0.0;
  double tangency_residual = 0.0;  // ||DF - Omega Lambda^T||_F

  /// Residual within kTangencyTol relative to max(1, ||DF||).
  bool tangent = false;
};

/// Numeric core: Lambda = DF^T Omega (Omega^T Omega)^{-1}. Throws
/// MathError(rank_deficient) when the columns of omega are dependent.
DecompositionSample decompose(const Mat32& DF, const Mat32& omega);

DecompositionSample decompose(const VectorExpr& map, const MovingBasis& omega, const Point2& q);

struct RelativeCurvatureSample {
  Mat2 Lambda = Mat2::Zero();
  double lambda = 0.0;
  double tangency_residual = 0.0;
  Mat2 I_omega = Mat2::Zero();   // Omega^T Omega
  Mat2 II_omega = Mat2::Zero();  // -Omega^T Dn
  Mat2 mu = Mat2::Zero();        // -II_omega^T I_omega^{-1}
  Mat2 alpha = Mat2::Zero();     // mu adj(Lambda)
  double K = 0.0;                // det(mu)
  double H = 0.0;                // -tr(alpha) / 2
  std::optional<double> k1;      // H - sqrt(H^2 - lambda K), absent when complex
  std::optional<double> k2;
  std::complex<double> k1_complex;
  std::complex<double> k2_complex;
  Vec3 n = Vec3::Zero();
  Mat32 Dn = Mat32::Zero();
};

/// Relative curvatures of x with respect to omega and its induced normal.
RelativeCurvatureSample relative_curvatures(const VectorExpr& x, const MovingBasis& omega,
                                            const Point2& q);

/// Zero set of lambda = det(Lambda) for x decomposed on omega.
std::vector<Polyline> singular_set(const VectorExpr& x, const MovingBasis& omega,
                                   const DomainRect& domain, int grid_n, double iso_tol = 1e-10);

/// lambda * (v^T P alpha^T v), the lines-of-curvature equation of x.
BDECoeffs curvature_line_bde(const VectorExpr& x, const MovingBasis& omega, const Point2& q);

/// The same equation from an already computed sample.
BDECoeffs curvature_line_bde(const RelativeCurvatureSample& s);

}  // namespace linecong
