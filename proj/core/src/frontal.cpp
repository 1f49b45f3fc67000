#include "linecong/frontal.hpp"

#include <cmath>

#include "linecong/errors.hpp"

namespace linecong {

std::string_view to_string(BdeKind kind) {
  switch (kind) {
    case BdeKind::principal:
      return "principal";
    case BdeKind::developable:
      return "developable";
    case BdeKind::curvature_line:
      return "curvature_line";
    case BdeKind::synthetic:
      return "synthetic";
  }
  return "unknown";
}

BDECoeffs make_bde(double A, double B, double C, BdeKind kind) {
  BDECoeffs c;
  c.A = A;
  c.B = B;
  c.C = C;
  c.discriminant = B * B - 4.0 * A * C;
  c.kind = kind;
  return c;
}

BDECoeffs bde_from_matrix(const Mat2& m, BdeKind kind) {
  const Eigen::Vector3d v = quadratic_coefficients(m);
  return make_bde(v[0], v[1], v[2], kind);
}

DecompositionSample decompose(const Mat32& DF, const Mat32& omega) {
  if (rank_deficient(omega, kRankTol)) {
    throw MathError(MathErrorKind::rank_deficient, "moving basis columns are linearly dependent");
  }
  const Mat2 gram = omega.transpose() * omega;
  DecompositionSample s;
  s.Lambda = DF.transpose() * omega * gram.inverse();
  s.det = det2(s.Lambda);
  s.tangency_residual = (DF - omega * s.Lambda.transpose()).norm();
  s.tangent = s.tangency_residual <= kTangencyTol * std::max(1.0, DF.norm());
  return s;
}

DecompositionSample decompose(const VectorExpr& map, const MovingBasis& omega, const Point2& q) {
  const Mat32 D = jacobian_of(eval_vector_jet(map, q));
  return decompose(D, evaluate_basis(omega, q));
}

RelativeCurvatureSample relative_curvatures(const VectorExpr& x, const MovingBasis& omega,
                                            const Point2& q) {
  const Mat32 W = evaluate_basis(omega, q);
  const Mat32 Dx = jacobian_of(eval_vector_jet(x, q));
  const DecompositionSample d = decompose(Dx, W);
  const Jet3 n = eval_vector_jet(induced_normal(omega.w1, omega.w2), q);

  RelativeCurvatureSample s;
  s.Lambda = d.Lambda;
  s.lambda = d.det;
  s.tangency_residual = d.tangency_residual;
  s.n = value_of(n);
  s.Dn = jacobian_of(n);
  s.I_omega = W.transpose() * W;
  s.II_omega = -W.transpose() * s.Dn;
  s.mu = -s.II_omega.transpose() * s.I_omega.inverse();
  s.alpha = s.mu * adj(s.Lambda);
  s.K = det2(s.mu);
  s.H = -0.5 * s.alpha.trace();
  const double disc = s.H * s.H - s.lambda * s.K;
  const std::complex<double> root = std::sqrt(std::complex<double>(disc, 0.0));
  s.k1_complex = s.H - root;
  s.k2_complex = s.H + root;
  if (disc >= 0.0) {
    s.k1 = s.k1_complex.real();
    s.k2 = s.k2_complex.real();
  }
  return s;
}

std::vector<Polyline> singular_set(const VectorExpr& x, const MovingBasis& omega,
                                   const DomainRect& domain, int grid_n, double iso_tol) {
  if (grid_n < 8) throw std::invalid_argument("grid_n must be at least 8");
  return zero_contours([&](const Point2& q) { return decompose(x, omega, q).det; }, domain,
                       grid_n, iso_tol);
}

BDECoeffs curvature_line_bde(const RelativeCurvatureSample& s) {
  return bde_from_matrix(s.lambda * perp() * s.alpha.transpose(), BdeKind::curvature_line);
}

BDECoeffs curvature_line_bde(const VectorExpr& x, const MovingBasis& omega, const Point2& q) {
  return curvature_line_bde(relative_curvatures(x, omega, q));
}

}  // namespace linecong
