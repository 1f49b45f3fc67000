#pragma once

// Closed forms worked out symbolically, independent of the library code.

#include <array>
#include <cmath>

namespace oracle {

namespace parabolic {

// x = (u1, u2, u1^2 u2 + u2^2), W = |x_u1 x x_u2|^2
inline double W(double u1, double u2) {
  return std::pow(u1, 4) + 4 * u1 * u1 * u2 * u2 + 4 * u1 * u1 * u2 + 4 * u2 * u2 + 1;
}

// Lines of curvature, as printed.
inline std::array<double, 3> lines_of_curvature(double u1, double u2) {
  return {2 * std::pow(u1, 3) * u2 * u2 - 4 * u1 * std::pow(u2, 3) + u1,
          -std::pow(u1, 4) * u2 - 4 * std::pow(u2, 3) - u2 + 1,
          -std::pow(u1, 5) - 2 * std::pow(u1, 3) * u2 - u1};
}

// delta for omega = (x_u1, x_u2).
inline double delta(double u1, double u2) { return 4 * (u2 - u1 * u1) / std::pow(W(u1, u2), 2); }

// Pulled-back principal coefficients = factor * (u2 - u1^2) * lines_of_curvature.
inline double principal_factor(double u1, double u2) { return 8 * std::pow(W(u1, u2), -2.5); }

// Developable coefficients = factor * lines_of_curvature.
inline double developable_factor(double u1, double u2) { return 2 / std::sqrt(W(u1, u2)); }

inline double gaussian_curvature(double u1, double u2) {
  return -4 * (u1 * u1 - u2) / std::pow(W(u1, u2), 2);
}

}  // namespace parabolic

namespace example43 {

inline double rho(double u1, double u2) {
  return std::pow(u2, 10) + 2 * std::pow(u2, 7) + std::pow(u2, 6) + std::pow(u2, 4) +
         2 * std::pow(u2, 3) + u1 * u1 + 1;
}

// K_Omega as printed.
inline double printed_K_omega(double u1, double u2) {
  const double a = u2 + 1, b = u2 * u2 - u2 + 1;
  return 2 * u2 * a * a * b * b / std::pow(rho(u1, u2), 2);
}

// K_Omega = det(mu) derived from the printed x and Omega.
inline double derived_K_omega(double u1, double u2) { return -printed_K_omega(u1, u2); }

// Lines-of-curvature equation as printed.
inline std::array<double, 3> printed_lines_of_curvature(double u1, double u2) {
  const double s = 2 * u2;
  return {s * (std::pow(u2, 7) + std::pow(u2, 4) + std::pow(u2, 3) + 1),
          s * (3 * u1 * std::pow(u2, 6) + 3 * u1 * u2 * u2),
          s * (-4 * std::pow(u2, 11) - 12 * std::pow(u2, 8) + 2 * u1 * u1 * std::pow(u2, 5) -
               12 * std::pow(u2, 5) - 4 * u1 * u1 * u2 * u2 - 4 * u2 * u2)};
}

// lambda P alpha^T derived from the printed x and Omega.
inline std::array<double, 3> derived_lines_of_curvature(double u1, double u2) {
  const double r = std::pow(rho(u1, u2), 1.5);
  const double q = std::pow(u2, 4) + 1;
  return {-2 * u2 * (u2 + 1) * q * (u2 * u2 - u2 + 1) / r, 6 * u1 * std::pow(u2, 3) * q / r,
          4 * std::pow(u2, 3) *
              (5 * u1 * u1 * std::pow(u2, 3) + 2 * u1 * u1 + 2 * std::pow(u2, 9) +
               6 * std::pow(u2, 6) + 6 * std::pow(u2, 3) + 2) /
              r};
}

// Spot values of (K_Omega, A, B, C) from an independent symbolic evaluation.
struct Spot {
  double u1, u2, K, A, B, C;
};
inline constexpr std::array<Spot, 3> kSpots{{
    {0.3, 0.4, -0.57863500925838030, -0.62385437441981451, 0.084431419094410987,
     0.47892406908369567},
    {-0.5, 0.7, -0.40834898666863484, -0.59459920163044644, -0.32541356157734774,
     2.0199734223419017},
    {0.2, -0.6, 1.3678802466559687, 1.6888770042803924, -0.46530284811806727,
     -1.3738580225274650},
}};

}  // namespace example43

}  // namespace oracle
