#pragma once

#include <string>
#include <string_view>

#include "linecong/errors.hpp"
#include "linecong/expr.hpp"
#include "linecong/scene.hpp"

namespace linecong {

/// Parses a congruence file:
///
///   name = "..."
///   domain = u1 in (a, b), u2 in (c, d)
///   x = (e1, e2, e3)
///   omega = ((w11, w12, w13), (w21, w22, w23))
///   xi = (e1, e2, e3) | normal(omega)
///   unitize_xi = true | false
///
/// Vectors may also be written cross(v, w), normalize(v) or normal(omega).
/// A statement continues onto following lines while parentheses are open.
/// Throws ParseError with the 1-based line and column of the problem.
CongruenceScene parse_scene(std::string_view text);

/// Parses a single scalar expression. `names` gives the spelling of the
/// variables with index 0 and 1; an empty name disables that variable.
ScalarExpr parse_scalar(std::string_view text, const VariableNames& names = kSurfaceVariables);

/// Parses a single vector expression (no normal(omega)).
VectorExpr parse_vector(std::string_view text, const VariableNames& names = kSurfaceVariables);

CongruenceScene load_scene_file(const std::string& path);

}  // namespace linecong
