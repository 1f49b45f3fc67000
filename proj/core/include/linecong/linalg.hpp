#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <Eigen/LU>

#include "linecong/expr.hpp"

namespace linecong {

using Mat2 = Eigen::Matrix2d;
using Vec2 = Eigen::Vector2d;

/// Adjugate of a 2x2 matrix: adj(M) M = M adj(M) = det(M) I.
inline Mat2 adj(const Mat2& m) {
  Mat2 r;
  r << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  return r;
}

/// The rotation P = [[0, 1], [-1, 0]].
inline Mat2 perp() {
  Mat2 p;
  p << 0.0, 1.0, -1.0, 0.0;
  return p;
}

inline double det2(const Mat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

/// Relative Frobenius asymmetry ||M - M^T|| / ||M||, zero for the zero matrix.
inline double relative_asymmetry(const Mat2& m) {
  const double n = m.norm();
  if (n == 0.0) return 0.0;
  return (m - m.transpose()).norm() / n;
}

/// Coefficients (A, B, C) of v^T M v = A v1^2 + B v1 v2 + C v2^2.
inline Eigen::Vector3d quadratic_coefficients(const Mat2& m) {
  return {m(0, 0), m(0, 1) + m(1, 0), m(1, 1)};
}

/// True when the Gram-type matrix is numerically singular relative to its size.
inline bool nearly_singular(const Mat2& m) {
  const double s = m.squaredNorm();
  return s == 0.0 || std::abs(det2(m)) <= 1e-20 * s;
}

/// True when the columns of a 3x2 matrix are numerically dependent.
inline bool rank_deficient(const Mat32& w, double rank_tol = 1e-10) {
  const double scale = w.col(0).norm() * w.col(1).norm();
  return w.col(0).cross(w.col(1)).norm() <= rank_tol * scale || scale == 0.0;
}

}  // namespace linecong
