#include <gtest/gtest.h>

#include <cmath>

#include "linecong/errors.hpp"
#include "linecong/expr.hpp"
#include "linecong/fixtures.hpp"
#include "linecong/parser.hpp"
#include "linecong/scene.hpp"

using namespace linecong;

namespace {

ParseError parse_error_of(std::string_view text) {
  try {
    parse_scene(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no ParseError for:\n" << text;
  return ParseError(0, 0, "");
}

}  // namespace

TEST(Jet, ProductAndQuotientRules) {
  const Point2 q(0.7, -1.3);
  const Jet j = eval_jet(parse_scalar("u1*u2/(1 + u1^2)"), q);
  const double d = 1 + q[0] * q[0];
  EXPECT_NEAR(j.value, q[0] * q[1] / d, 1e-15);
  EXPECT_NEAR(j.d1, q[1] * (1 - q[0] * q[0]) / (d * d), 1e-15);
  EXPECT_NEAR(j.d2, q[0] / d, 1e-15);
}

TEST(Jet, TrigSqrtAndNegativePowers) {
  const Point2 q(0.4, 2.0);
  const Jet j = eval_jet(parse_scalar("sin(u1)*sqrt(u2) + cos(u1*u2) + u2^-2"), q);
  EXPECT_NEAR(j.value, std::sin(0.4) * std::sqrt(2.0) + std::cos(0.8) + 0.25, 1e-15);
  EXPECT_NEAR(j.d1, std::cos(0.4) * std::sqrt(2.0) - 2.0 * std::sin(0.8), 1e-14);
  EXPECT_NEAR(j.d2, std::sin(0.4) / (2 * std::sqrt(2.0)) - 0.4 * std::sin(0.8) - 2.0 / 8.0, 1e-14);
}

TEST(Jet, VectorJacobianOfCrossAndNormalize) {
  const VectorExpr v = parse_vector("normalize(cross((1, 0, u2), (0, 1, -u1)))");
  const Point2 q(0.3, -0.2);
  const Jet3 j = eval_vector_jet(v, q);
  const Vec3 n = value_of(j);
  EXPECT_NEAR(n.norm(), 1.0, 1e-15);
  const Mat32 D = jacobian_of(j);
  // unit length is preserved, so D^T n = 0
  EXPECT_NEAR((D.transpose() * n).norm(), 0.0, 1e-15);
  const double h = 1e-6;
  const Vec3 fd = (value_of(eval_vector_jet(v, q + Point2(h, 0))) - value_of(eval_vector_jet(v, q - Point2(h, 0)))) / (2 * h);
  EXPECT_NEAR((fd - D.col(0)).norm(), 0.0, 1e-9);
}

TEST(Jet, DomainErrorsNameTheSubexpression) {
  try {
    eval(parse_scalar("1 + sqrt(u1 - 1)"), Point2(0.5, 0));
    FAIL();
  } catch (const MathError& e) {
    EXPECT_EQ(e.kind(), MathErrorKind::domain);
    EXPECT_NE(std::string(e.what()).find("sqrt(u1 - 1)"), std::string::npos) << e.what();
  }
  EXPECT_THROW(eval(parse_scalar("1/(u1 - u2)"), Point2(0.5, 0.5)), MathError);
  EXPECT_THROW(eval(parse_scalar("u1^-1"), Point2(0, 0.5)), MathError);
}

TEST(Parser, PrecedenceAndUnaryMinus) {
  const Point2 q(2.0, 3.0);
  EXPECT_DOUBLE_EQ(eval(parse_scalar("-u1^2"), q), -4.0);
  EXPECT_DOUBLE_EQ(eval(parse_scalar("u1 - u2 - 1"), q), -2.0);
  EXPECT_DOUBLE_EQ(eval(parse_scalar("u2/u1/2"), q), 0.75);
  EXPECT_DOUBLE_EQ(eval(parse_scalar("2/5*u1"), q), 0.8);
  EXPECT_DOUBLE_EQ(eval(parse_scalar("u1^(-2)"), q), 0.25);
  EXPECT_DOUBLE_EQ(eval(parse_scalar("1.5e1 + .5"), q), 15.5);
}

TEST(Parser, PrintParseRoundTrip) {
  for (const char* text : {"u1 - (u2 - 1)", "-(u1 + u2)*u1", "(u1*u2)^3", "u1/(u2*u1)", "-u1^2",
                           "sqrt(u1)^-2", "sin(-u1) - -u2", "2^2", "u1^(-1)*(u1 - 1/2)"}) {
    const ScalarExpr e = parse_scalar(text);
    const ScalarExpr back = parse_scalar(to_string(e));
    EXPECT_TRUE(structurally_equal(e, back)) << text << " -> " << to_string(e);
  }
  EXPECT_EQ(to_string(parse_scalar("(u1 + u2) + u1")), "u1 + u2 + u1");
  EXPECT_EQ(to_string(parse_scalar("u1 - (u2 + u1)")), "u1 - (u2 + u1)");
  EXPECT_EQ(to_string(parse_scalar("(-u1)^2")), "(-u1)^2");
}

TEST(Parser, CurveVariables) {
  const ScalarExpr e = parse_scalar("t^2 + 1", kCurveVariables);
  EXPECT_DOUBLE_EQ(eval(e, Point2(3, 0)), 10.0);
  EXPECT_THROW(parse_scalar("u1 + t", kCurveVariables), ParseError);
  EXPECT_EQ(to_string(e, kCurveVariables), "t^2 + 1");
}

TEST(Parser, FixturesRoundTripThroughPrinter) {
  for (const std::string& name : fixture_names()) {
    const CongruenceScene a = fixture(name);
    const CongruenceScene b = parse_scene(print_scene(a));
    EXPECT_EQ(a.name, b.name);
    EXPECT_TRUE(structurally_equal(a.x, b.x)) << name;
    EXPECT_TRUE(structurally_equal(a.xi, b.xi)) << name;
    EXPECT_EQ(a.omega.has_value(), b.omega.has_value());
    EXPECT_EQ(a.unitize_xi, b.unitize_xi);
    EXPECT_EQ(a.domain.u2_max, b.domain.u2_max);
  }
}

TEST(Parser, SceneWithDefaultsAndComments) {
  const CongruenceScene s = parse_scene(
      "# plane with a tilted field\n"
      "x = (u1, u2, 0)\n"
      "xi = (u2,\n"
      "      -u1,\n"
      "      1)\n");
  EXPECT_EQ(s.name, "unnamed");
  EXPECT_EQ(s.domain.u1_min, -1.0);
  EXPECT_FALSE(s.omega.has_value());
  EXPECT_TRUE(s.unitize_xi);
  EXPECT_NEAR(value_of(eval_vector_jet(s.direction(), Point2(0.3, 0.4))).norm(), 1.0, 1e-15);
}

TEST(Parser, ErrorsCarryPositions) {
  {
    const ParseError e = parse_error_of("x = (u1, u2)\nxi = (0, 0, 1)\n");
    EXPECT_EQ(e.line(), 1);
    EXPECT_NE(e.detail().find("arity mismatch"), std::string::npos) << e.what();
  }
  {
    const ParseError e = parse_error_of("x = (u1, u2, 0)\nxi = (foo, 0, 1)\n");
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 7);
    EXPECT_NE(e.detail().find("unknown identifier 'foo'"), std::string::npos);
  }
  {
    const ParseError e = parse_error_of("x = (u1, u2, 0)\n");
    EXPECT_NE(e.detail().find("missing required key 'xi'"), std::string::npos);
  }
  {
    const ParseError e = parse_error_of("x = (u1, u2, 0)\nxi = normal(omega)\n");
    EXPECT_NE(e.detail().find("omega is not defined"), std::string::npos);
  }
  {
    const ParseError e = parse_error_of("x = (u1, u2, 0)\nx = (u1, u2, 1)\nxi = (0, 0, 1)\n");
    EXPECT_EQ(e.line(), 2);
    EXPECT_NE(e.detail().find("duplicate"), std::string::npos);
  }
  {
    const ParseError e = parse_error_of("x = (u1, u2, u1^u2)\nxi = (0, 0, 1)\n");
    EXPECT_NE(e.detail().find("exponent must be an integer literal"), std::string::npos);
  }
  {
    const ParseError e = parse_error_of("colour = 3\n");
    EXPECT_NE(e.detail().find("unknown key"), std::string::npos);
  }
  {
    const ParseError e = parse_error_of("x = (u1, u2, 0)\nxi = (0, 0, 1)\nomega = ((1, 0, 0))\n");
    EXPECT_NE(e.detail().find("omega needs 2 columns"), std::string::npos);
  }
  {
    const ParseError e = parse_error_of("x = (u1, u2, 0) $\n");
    EXPECT_EQ(e.column(), 17);
  }
}

TEST(Parser, DomainMustBeConstant) {
  EXPECT_THROW(parse_scene("domain = u1 in (0, u2), u2 in (0, 1)\nx = (u1, u2, 0)\nxi = (0, 0, 1)\n"),
               ParseError);
  const CongruenceScene s =
      parse_scene("domain = u1 in (-1/10, 1/10), u2 in (-sqrt(4), 2^2)\nx = (u1, u2, 0)\nxi = (0, 0, 1)\n");
  EXPECT_DOUBLE_EQ(s.domain.u1_min, -0.1);
  EXPECT_DOUBLE_EQ(s.domain.u2_min, -2.0);
  EXPECT_DOUBLE_EQ(s.domain.u2_max, 4.0);
}

TEST(Parser, LongEquiaffineFieldIngests) {
  const CongruenceScene s = fixture("example41");
  EXPECT_FALSE(s.unitize_xi);
  EXPECT_FALSE(s.omega.has_value());
  const Vec3 xi = value_of(eval_vector_jet(s.direction(), Point2(0.05, 1.0)));
  EXPECT_TRUE(xi.allFinite());
  EXPECT_GT(xi.norm(), 0.0);
}
