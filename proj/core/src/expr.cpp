#include "linecong/expr.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include "linecong/errors.hpp"

namespace linecong {

namespace {

std::shared_ptr<const ScalarExpr::Node> make_node(ScalarOp op, std::vector<ScalarExpr> children,
                                                  double value = 0.0, int index = 0,
                                                  int exponent = 0) {
  auto n = std::make_shared<ScalarExpr::Node>();
  n->op = op;
  n->value = value;
  n->index = index;
  n->exponent = exponent;
  n->children = std::move(children);
  return n;
}

}  // namespace

// ---------------------------------------------------------------- ScalarExpr

ScalarExpr::ScalarExpr() : node_(make_node(ScalarOp::constant, {}, 0.0)) {}

ScalarExpr ScalarExpr::variable(int index) {
  if (index != 0 && index != 1) throw std::invalid_argument("variable index must be 0 or 1");
  return ScalarExpr(make_node(ScalarOp::variable, {}, 0.0, index));
}

ScalarExpr ScalarExpr::constant(double value) {
  return ScalarExpr(make_node(ScalarOp::constant, {}, value));
}

ScalarExpr ScalarExpr::power(ScalarExpr base, int exponent) {
  return ScalarExpr(make_node(ScalarOp::power, {std::move(base)}, 0.0, 0, exponent));
}

ScalarExpr ScalarExpr::sqrt(ScalarExpr arg) {
  return ScalarExpr(make_node(ScalarOp::sqrt, {std::move(arg)}));
}

ScalarExpr ScalarExpr::sin(ScalarExpr arg) {
  return ScalarExpr(make_node(ScalarOp::sin, {std::move(arg)}));
}

ScalarExpr ScalarExpr::cos(ScalarExpr arg) {
  return ScalarExpr(make_node(ScalarOp::cos, {std::move(arg)}));
}

ScalarExpr operator-(ScalarExpr a) {
  return ScalarExpr(make_node(ScalarOp::negate, {std::move(a)}));
}
ScalarExpr operator+(ScalarExpr a, ScalarExpr b) {
  return ScalarExpr(make_node(ScalarOp::add, {std::move(a), std::move(b)}));
}
ScalarExpr operator-(ScalarExpr a, ScalarExpr b) {
  return ScalarExpr(make_node(ScalarOp::subtract, {std::move(a), std::move(b)}));
}
ScalarExpr operator*(ScalarExpr a, ScalarExpr b) {
  return ScalarExpr(make_node(ScalarOp::multiply, {std::move(a), std::move(b)}));
}
ScalarExpr operator/(ScalarExpr a, ScalarExpr b) {
  return ScalarExpr(make_node(ScalarOp::divide, {std::move(a), std::move(b)}));
}

ScalarOp ScalarExpr::op() const { return node_->op; }
int ScalarExpr::variable_index() const { return node_->index; }
double ScalarExpr::constant_value() const { return node_->value; }
int ScalarExpr::exponent() const { return node_->exponent; }
const ScalarExpr& ScalarExpr::lhs() const { return node_->children.at(0); }
const ScalarExpr& ScalarExpr::rhs() const { return node_->children.at(1); }
std::size_t ScalarExpr::arity() const { return node_->children.size(); }

// ---------------------------------------------------------------- VectorExpr

namespace {

std::shared_ptr<const VectorExpr::Node> make_vnode(VectorOp op, std::array<ScalarExpr, 3> s,
                                                   std::vector<VectorExpr> children) {
  auto n = std::make_shared<VectorExpr::Node>();
  n->op = op;
  n->scalars = std::move(s);
  n->children = std::move(children);
  return n;
}

}  // namespace

VectorExpr::VectorExpr() : node_(make_vnode(VectorOp::components, {}, {})) {}

VectorExpr::VectorExpr(ScalarExpr a, ScalarExpr b, ScalarExpr c)
    : node_(make_vnode(VectorOp::components, {std::move(a), std::move(b), std::move(c)}, {})) {}

VectorExpr VectorExpr::cross(VectorExpr a, VectorExpr b) {
  return VectorExpr(make_vnode(VectorOp::cross, {}, {std::move(a), std::move(b)}));
}

VectorExpr VectorExpr::normalize(VectorExpr a) {
  return VectorExpr(make_vnode(VectorOp::normalize, {}, {std::move(a)}));
}

VectorOp VectorExpr::op() const { return node_->op; }
const std::array<ScalarExpr, 3>& VectorExpr::components() const { return node_->scalars; }
const VectorExpr& VectorExpr::lhs() const { return node_->children.at(0); }
const VectorExpr& VectorExpr::rhs() const { return node_->children.at(1); }

VectorExpr induced_normal(const VectorExpr& w1, const VectorExpr& w2) {
  return VectorExpr::normalize(VectorExpr::cross(w1, w2));
}

// ---------------------------------------------------------------- evaluation

namespace {

[[noreturn]] void domain_error(const std::string& what, const ScalarExpr& where) {
  throw MathError(MathErrorKind::domain, what + " in " + to_string(where));
}

Jet eval_rec(const ScalarExpr& e, const Point2& q) {
  switch (e.op()) {
    case ScalarOp::variable:
      return Jet::variable(e.variable_index(), q[e.variable_index()]);
    case ScalarOp::constant:
      return Jet::constant(e.constant_value());
    case ScalarOp::negate:
      return -eval_rec(e.lhs(), q);
    case ScalarOp::add:
      return eval_rec(e.lhs(), q) + eval_rec(e.rhs(), q);
    case ScalarOp::subtract:
      return eval_rec(e.lhs(), q) - eval_rec(e.rhs(), q);
    case ScalarOp::multiply:
      return eval_rec(e.lhs(), q) * eval_rec(e.rhs(), q);
    case ScalarOp::divide: {
      const Jet den = eval_rec(e.rhs(), q);
      if (den.value == 0.0) domain_error("division by zero", e);
      return eval_rec(e.lhs(), q) / den;
    }
    case ScalarOp::power: {
      const Jet base = eval_rec(e.lhs(), q);
      if (e.exponent() < 0 && base.value == 0.0) domain_error("zero raised to a negative power", e);
      return pow(base, e.exponent());
    }
    case ScalarOp::sqrt: {
      const Jet arg = eval_rec(e.lhs(), q);
      if (!(arg.value > 0.0)) {
        domain_error("sqrt of non-positive value " + std::to_string(arg.value), e);
      }
      return sqrt(arg);
    }
    case ScalarOp::sin:
      return sin(eval_rec(e.lhs(), q));
    case ScalarOp::cos:
      return cos(eval_rec(e.lhs(), q));
  }
  throw std::logic_error("unreachable scalar op");
}

Jet3 eval_vec_rec(const VectorExpr& v, const Point2& q) {
  switch (v.op()) {
    case VectorOp::components: {
      const auto& c = v.components();
      return {eval_rec(c[0], q), eval_rec(c[1], q), eval_rec(c[2], q)};
    }
    case VectorOp::cross:
      return cross(eval_vec_rec(v.lhs(), q), eval_vec_rec(v.rhs(), q));
    case VectorOp::normalize: {
      const Jet3 a = eval_vec_rec(v.lhs(), q);
      const Jet n2 = dot(a, a);
      if (!(n2.value > 1e-300)) {
        throw MathError(MathErrorKind::domain,
                        "normalisation of a zero vector in " + to_string(v));
      }
      const Jet inv = Jet::constant(1.0) / sqrt(n2);
      return {a[0] * inv, a[1] * inv, a[2] * inv};
    }
  }
  throw std::logic_error("unreachable vector op");
}

}  // namespace

Jet eval_jet(const ScalarExpr& e, const Point2& q) { return eval_rec(e, q); }

double eval(const ScalarExpr& e, const Point2& q) { return eval_rec(e, q).value; }

Jet3 eval_vector_jet(const VectorExpr& v, const Point2& q) { return eval_vec_rec(v, q); }

Vec3 value_of(const Jet3& v) { return {v[0].value, v[1].value, v[2].value}; }

Mat32 jacobian_of(const Jet3& v) {
  Mat32 m;
  for (int i = 0; i < 3; ++i) {
    m(i, 0) = v[i].d1;
    m(i, 1) = v[i].d2;
  }
  return m;
}

Jet3 cross(const Jet3& a, const Jet3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Jet dot(const Jet3& a, const Jet3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

// ---------------------------------------------------------------- printing

namespace {

int precedence(const ScalarExpr& e) {
  switch (e.op()) {
    case ScalarOp::add:
    case ScalarOp::subtract:
      return 1;
    case ScalarOp::multiply:
    case ScalarOp::divide:
      return 2;
    case ScalarOp::negate:
      return 3;
    case ScalarOp::power:
      return 4;
    case ScalarOp::constant:
      return e.constant_value() < 0.0 || std::signbit(e.constant_value()) ? 0 : 5;
    default:
      return 5;
  }
}

std::string number_text(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void print_rec(const ScalarExpr& e, const VariableNames& names, std::string& out);

void print_child(const ScalarExpr& e, int min_prec, const VariableNames& names,
                 std::string& out) {
  if (precedence(e) < min_prec) {
    out += '(';
    print_rec(e, names, out);
    out += ')';
  } else {
    print_rec(e, names, out);
  }
}

void print_rec(const ScalarExpr& e, const VariableNames& names, std::string& out) {
  switch (e.op()) {
    case ScalarOp::variable:
      out += names[e.variable_index()];
      return;
    case ScalarOp::constant:
      out += number_text(e.constant_value());
      return;
    case ScalarOp::negate:
      out += '-';
      print_child(e.lhs(), 3, names, out);
      return;
    case ScalarOp::add:
    case ScalarOp::subtract:
      print_child(e.lhs(), 1, names, out);
      out += e.op() == ScalarOp::add ? " + " : " - ";
      print_child(e.rhs(), 2, names, out);
      return;
    case ScalarOp::multiply:
    case ScalarOp::divide:
      print_child(e.lhs(), 2, names, out);
      out += e.op() == ScalarOp::multiply ? "*" : "/";
      print_child(e.rhs(), 3, names, out);
      return;
    case ScalarOp::power:
      print_child(e.lhs(), 5, names, out);
      out += '^';
      if (e.exponent() < 0) {
        out += "(" + std::to_string(e.exponent()) + ")";
      } else {
        out += std::to_string(e.exponent());
      }
      return;
    case ScalarOp::sqrt:
    case ScalarOp::sin:
    case ScalarOp::cos:
      out += e.op() == ScalarOp::sqrt ? "sqrt(" : e.op() == ScalarOp::sin ? "sin(" : "cos(";
      print_rec(e.lhs(), names, out);
      out += ')';
      return;
  }
}

}  // namespace

std::string to_string(const ScalarExpr& e, const VariableNames& names) {
  std::string out;
  print_rec(e, names, out);
  return out;
}

std::string to_string(const VectorExpr& v, const VariableNames& names) {
  switch (v.op()) {
    case VectorOp::components: {
      const auto& c = v.components();
      return "(" + to_string(c[0], names) + ", " + to_string(c[1], names) + ", " +
             to_string(c[2], names) + ")";
    }
    case VectorOp::cross:
      return "cross(" + to_string(v.lhs(), names) + ", " + to_string(v.rhs(), names) + ")";
    case VectorOp::normalize:
      return "normalize(" + to_string(v.lhs(), names) + ")";
  }
  return {};
}

bool structurally_equal(const ScalarExpr& a, const ScalarExpr& b) {
  if (a.op() != b.op()) return false;
  switch (a.op()) {
    case ScalarOp::variable:
      return a.variable_index() == b.variable_index();
    case ScalarOp::constant:
      return a.constant_value() == b.constant_value();
    case ScalarOp::power:
      return a.exponent() == b.exponent() && structurally_equal(a.lhs(), b.lhs());
    default:
      break;
  }
  if (a.arity() != b.arity()) return false;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!structurally_equal(i == 0 ? a.lhs() : a.rhs(), i == 0 ? b.lhs() : b.rhs())) return false;
  }
  return true;
}

bool structurally_equal(const VectorExpr& a, const VectorExpr& b) {
  if (a.op() != b.op()) return false;
  switch (a.op()) {
    case VectorOp::components:
      for (int i = 0; i < 3; ++i) {
        if (!structurally_equal(a.components()[i], b.components()[i])) return false;
      }
      return true;
    case VectorOp::cross:
      return structurally_equal(a.lhs(), b.lhs()) && structurally_equal(a.rhs(), b.rhs());
    case VectorOp::normalize:
      return structurally_equal(a.lhs(), b.lhs());
  }
  return false;
}

std::vector<ScalarExpr> scalar_components(const VectorExpr& v) {
  std::vector<ScalarExpr> out;
  switch (v.op()) {
    case VectorOp::components:
      out.assign(v.components().begin(), v.components().end());
      break;
    case VectorOp::cross: {
      out = scalar_components(v.lhs());
      auto r = scalar_components(v.rhs());
      out.insert(out.end(), r.begin(), r.end());
      break;
    }
    case VectorOp::normalize:
      out = scalar_components(v.lhs());
      break;
  }
  return out;
}

}  // namespace linecong
