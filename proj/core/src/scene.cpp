#include "linecong/scene.hpp"

#include <charconv>

namespace linecong {

namespace {

std::string number_text(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

Mat32 evaluate_basis(const MovingBasis& omega, const Point2& q) {
  Mat32 m;
  m.col(0) = value_of(eval_vector_jet(omega.w1, q));
  m.col(1) = value_of(eval_vector_jet(omega.w2, q));
  return m;
}

VectorExpr CongruenceScene::direction() const {
  if (!unitize_xi || xi.op() == VectorOp::normalize) return xi;
  return VectorExpr::normalize(xi);
}

std::string print_scene(const CongruenceScene& scene) {
  std::string out;
  out += "name = \"" + scene.name + "\"\n";
  out += "domain = u1 in (" + number_text(scene.domain.u1_min) + ", " +
         number_text(scene.domain.u1_max) + "), u2 in (" + number_text(scene.domain.u2_min) +
         ", " + number_text(scene.domain.u2_max) + ")\n";
  out += "x = " + to_string(scene.x) + "\n";
  if (scene.omega) {
    out += "omega = (" + to_string(scene.omega->w1) + ", " + to_string(scene.omega->w2) + ")\n";
  }
  if (scene.xi_is_omega_normal && scene.omega) {
    out += "xi = normal(omega)\n";
  } else {
    out += "xi = " + to_string(scene.xi) + "\n";
  }
  if (!scene.unitize_xi) out += "unitize_xi = false\n";
  return out;
}

}  // namespace linecong
