#pragma once

#include <array>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "linecong/jet.hpp"

namespace linecong {

using Point2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat32 = Eigen::Matrix<double, 3, 2>;

enum class ScalarOp {
  variable,
  constant,
  negate,
  add,
  subtract,
  multiply,
  divide,
  power,
  sqrt,
  sin,
  cos,
};

/// Immutable scalar expression tree in (at most) two variables. Copies share
/// structure; nodes are never mutated after construction.
class ScalarExpr {
 public:
  struct Node;

  ScalarExpr();  // the constant 0

  static ScalarExpr variable(int index);
  static ScalarExpr constant(double value);
  static ScalarExpr power(ScalarExpr base, int exponent);
  static ScalarExpr sqrt(ScalarExpr arg);
  static ScalarExpr sin(ScalarExpr arg);
  static ScalarExpr cos(ScalarExpr arg);

  friend ScalarExpr operator-(ScalarExpr a);
  friend ScalarExpr operator+(ScalarExpr a, ScalarExpr b);
  friend ScalarExpr operator-(ScalarExpr a, ScalarExpr b);
  friend ScalarExpr operator*(ScalarExpr a, ScalarExpr b);
  friend ScalarExpr operator/(ScalarExpr a, ScalarExpr b);

  ScalarOp op() const;
  int variable_index() const;  // valid for ScalarOp::variable
  double constant_value() const;  // valid for ScalarOp::constant
  int exponent() const;  // valid for ScalarOp::power
  // Children: one for unary ops and power, two for binary ops.
  const ScalarExpr& lhs() const;
  const ScalarExpr& rhs() const;
  std::size_t arity() const;

 private:
  explicit ScalarExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct ScalarExpr::Node {
  ScalarOp op = ScalarOp::constant;
  int index = 0;
  double value = 0.0;
  int exponent = 0;
  std::vector<ScalarExpr> children;
};

enum class VectorOp { components, cross, normalize };

/// R^3-valued expression: a literal triple of scalars, a cross product, or a
/// normalisation. Differentiated through by forward-mode AD.
class VectorExpr {
 public:
  struct Node;

  VectorExpr();  // (0, 0, 0)
  VectorExpr(ScalarExpr a, ScalarExpr b, ScalarExpr c);

  static VectorExpr cross(VectorExpr a, VectorExpr b);
  static VectorExpr normalize(VectorExpr a);

  VectorOp op() const;
  const std::array<ScalarExpr, 3>& components() const;  // VectorOp::components
  const VectorExpr& lhs() const;  // cross (first), normalize (argument)
  const VectorExpr& rhs() const;  // cross (second)

 private:
  explicit VectorExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct VectorExpr::Node {
  VectorOp op = VectorOp::components;
  std::array<ScalarExpr, 3> scalars;
  std::vector<VectorExpr> children;
};

/// normal(w1, w2) = normalize(cross(w1, w2)), the unit normal induced by a
/// moving basis with columns w1, w2 (orientation taken from column order).
VectorExpr induced_normal(const VectorExpr& w1, const VectorExpr& w2);

using Jet3 = std::array<Jet, 3>;

/// Evaluates e and its first partials at q. Throws MathError(domain) for
/// sqrt of a non-positive value, division by zero or 0^negative; the message
/// names the offending subexpression.
Jet eval_jet(const ScalarExpr& e, const Point2& q);
double eval(const ScalarExpr& e, const Point2& q);

Jet3 eval_vector_jet(const VectorExpr& v, const Point2& q);
Vec3 value_of(const Jet3& v);
Mat32 jacobian_of(const Jet3& v);

Jet3 cross(const Jet3& a, const Jet3& b);
Jet dot(const Jet3& a, const Jet3& b);

/// Variable names used when printing. Index i prints as names[i].
using VariableNames = std::array<std::string_view, 2>;
inline constexpr VariableNames kSurfaceVariables{"u1", "u2"};
inline constexpr VariableNames kCurveVariables{"t", ""};

std::string to_string(const ScalarExpr& e, const VariableNames& names = kSurfaceVariables);
std::string to_string(const VectorExpr& v, const VariableNames& names = kSurfaceVariables);

bool structurally_equal(const ScalarExpr& a, const ScalarExpr& b);
bool structurally_equal(const VectorExpr& a, const VectorExpr& b);

/// Flat list of every scalar subtree that is the root of a literal vector
/// component, in depth-first order. Useful for sampling-based checks.
std::vector<ScalarExpr> scalar_components(const VectorExpr& v);

}  // namespace linecong
