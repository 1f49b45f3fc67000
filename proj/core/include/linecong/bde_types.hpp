#pragma once

#include <string_view>

#include "linecong/linalg.hpp"

namespace linecong {

enum class BdeKind { principal, developable, curvature_line, synthetic };

std::string_view to_string(BdeKind kind);

/// Quadratic direction equation A du1^2 + B du1 du2 + C du2^2 = 0.
struct BDECoeffs {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
  double discriminant = 0.0;  // B^2 - 4AC
  BdeKind kind = BdeKind::synthetic;

  double scale() const { return std::abs(A) + std::abs(B) + std::abs(C); }
  double max_abs() const { return std::max({std::abs(A), std::abs(B), std::abs(C)}); }
  double residual(const Vec2& d) const { return A * d[0] * d[0] + B * d[0] * d[1] + C * d[1] * d[1]; }
  Eigen::Vector3d vector() const { return {A, B, C}; }
};

BDECoeffs make_bde(double A, double B, double C, BdeKind kind);

/// The quadratic form v^T M v as a BDE.
BDECoeffs bde_from_matrix(const Mat2& m, BdeKind kind);

}  // namespace linecong
