#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "linecong/bde_types.hpp"
#include "linecong/contour.hpp"
#include "linecong/scene.hpp"

namespace linecong {

enum class RootMultiplicity { two_distinct, double_root, identically_zero, none_real };

std::string_view to_string(RootMultiplicity m);

/// Up to two unit directions, first nonzero component positive, ordered
/// lexicographically descending.
struct DirectionPair {
  std::vector<Vec2> directions;
  RootMultiplicity multiplicity = RootMultiplicity::none_real;
};

/// `zero_tol` is relative: the equation is identically zero when
/// max(|A|, |B|, |C|) <= zero_tol * scale, with scale = 1 unless given.
DirectionPair solve_directions(const BDECoeffs& c, double zero_tol = 1e-12, double scale = 1.0);

/// A direction equation over a domain, with an optional factor whose zero set
/// stops tracing (delta for principal lines, lambda for lines of curvature).
struct BdeField {
  BdeKind kind = BdeKind::synthetic;
  DomainRect domain;
  std::function<BDECoeffs(const Point2&)> coeffs;
  std::function<double(const Point2&)> factor;  // may be empty
};

BdeField make_field(const CongruenceScene& scene, BdeKind kind);

enum class Termination {
  left_domain,
  hit_discriminant_zero,
  hit_singular_set,
  max_steps,
};

std::string_view to_string(Termination t);

struct IntegralCurve {
  std::vector<double> t;  // arc length in (u1, u2)
  std::vector<Point2> points;
  int branch = 1;
  Termination reason = Termination::max_steps;
  /// The seed lay on the zero set of the factor, where the equation vanishes
  /// identically; the curve then follows that zero set.
  bool within_singular_set = false;
};

struct TraceOptions {
  double step = 1e-3;
  int max_steps = 100000;
  double collide_angle = 1e-3;  // radians
  double factor_tol = 1e-10;
  int direction_sign = 1;  // +1 or -1, flips the initial direction
  std::optional<Vec2> initial_direction;  // overrides branch selection
};

/// Fixed-step RK4 along the unit direction field. Throws MathError(precondition)
/// when the seed is outside the domain or on the discriminant-zero set.
IntegralCurve trace(const BdeField& field, const Point2& seed, int branch,
                    const TraceOptions& options = {});
IntegralCurve trace(const CongruenceScene& scene, BdeKind kind, const Point2& seed, int branch,
                    const TraceOptions& options = {});

struct DiscriminantZeroSet {
  std::string status;  // "curves", "empty" or "degenerate"
  std::vector<Polyline> curves;
};

/// Signed function whose zero set is the discriminant-zero set of `kind`.
std::function<double(const Point2&)> discriminant_function(const CongruenceScene& scene,
                                                           BdeKind kind);

DiscriminantZeroSet discriminant_zero_set(const CongruenceScene& scene, BdeKind kind, int grid_n,
                                          double iso_tol = 1e-10);

}  // namespace linecong
