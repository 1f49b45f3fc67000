#pragma once

#include <optional>
#include <string>

#include "linecong/expr.hpp"

namespace linecong {

/// Open rectangle (u1_min, u1_max) x (u2_min, u2_max).
struct DomainRect {
  double u1_min = -1.0;
  double u1_max = 1.0;
  double u2_min = -1.0;
  double u2_max = 1.0;

  bool contains(const Point2& q) const {
    return q[0] > u1_min && q[0] < u1_max && q[1] > u2_min && q[1] < u2_max;
  }
  bool valid() const { return u1_min < u1_max && u2_min < u2_max; }
  double width() const { return u1_max - u1_min; }
  double height() const { return u2_max - u2_min; }
};

/// Moving basis with columns w1, w2.
struct MovingBasis {
  VectorExpr w1;
  VectorExpr w2;
};

Mat32 evaluate_basis(const MovingBasis& omega, const Point2& q);

/// A line congruence {x, xi} on a rectangular domain.
struct CongruenceScene {
  std::string name = "unnamed";
  DomainRect domain;
  VectorExpr x;
  VectorExpr xi;                       // as written in the file
  std::optional<MovingBasis> omega;    // tangent moving basis of xi
  bool xi_is_omega_normal = false;     // xi was written as normal(omega)
  bool unitize_xi = true;

  /// The direction field used for computation: xi, wrapped in normalize()
  /// when unitize_xi is set and xi is not already a normalisation.
  VectorExpr direction() const;

  /// True when xi is the induced normal of omega and omega is tangent to x
  /// (checked numerically by callers; this only reports the construction).
  bool declared_exact_normal() const { return xi_is_omega_normal && omega.has_value(); }
};

/// Serialises a scene in the congruence-file format.
std::string print_scene(const CongruenceScene& scene);

}  // namespace linecong
