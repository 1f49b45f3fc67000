#include <gtest/gtest.h>

#include <cmath>

#include "linecong/bde.hpp"
#include "linecong/errors.hpp"
#include "linecong/fixtures.hpp"
#include "linecong/kummer.hpp"

using namespace linecong;

TEST(SolveDirections, TwoDistinctRoots) {
  // (du1 - du2)(du1 + 2 du2) = du1^2 + du1 du2 - 2 du2^2
  const DirectionPair p = solve_directions(make_bde(1, 1, -2, BdeKind::synthetic));
  ASSERT_EQ(p.multiplicity, RootMultiplicity::two_distinct);
  ASSERT_EQ(p.directions.size(), 2u);
  const double s = 1 / std::sqrt(2.0), t = 1 / std::sqrt(5.0);
  EXPECT_NEAR((p.directions[0] - Vec2(2 * t, -t)).norm(), 0.0, 1e-15);
  EXPECT_NEAR((p.directions[1] - Vec2(s, s)).norm(), 0.0, 1e-15);
}

TEST(SolveDirections, LeadingCoefficientZero) {
  const DirectionPair p = solve_directions(make_bde(0, 1, 0, BdeKind::synthetic));
  ASSERT_EQ(p.directions.size(), 2u);
  EXPECT_NEAR((p.directions[0] - Vec2(1, 0)).norm(), 0.0, 1e-15);
  EXPECT_NEAR((p.directions[1] - Vec2(0, 1)).norm(), 0.0, 1e-15);
}

TEST(SolveDirections, DegenerateCases) {
  EXPECT_EQ(solve_directions(make_bde(1, 2, 1, BdeKind::synthetic)).multiplicity, RootMultiplicity::double_root);
  EXPECT_EQ(solve_directions(make_bde(1, 0, 1, BdeKind::synthetic)).multiplicity, RootMultiplicity::none_real);
  EXPECT_EQ(solve_directions(make_bde(1e-14, 0, 0, BdeKind::synthetic)).multiplicity,
            RootMultiplicity::identically_zero);
  // scale makes the threshold relative
  EXPECT_EQ(solve_directions(make_bde(1e-14, 1e-14, 0, BdeKind::synthetic), 1e-12, 1e-10).multiplicity,
            RootMultiplicity::two_distinct);
}

TEST(Trace, SyntheticFieldGivesStraightLines) {
  BdeField f;
  f.domain = DomainRect{};
  f.coeffs = [](const Point2&) { return make_bde(0, 1, 0, BdeKind::synthetic); };
  TraceOptions opt;
  opt.step = 0.01;
  const IntegralCurve c = trace(f, Point2(0.2, 0.3), 1, opt);
  EXPECT_EQ(c.reason, Termination::left_domain);
  for (const Point2& p : c.points) EXPECT_NEAR(p[1], 0.3, 1e-15);
  EXPECT_NEAR(c.points.back()[0], 1.0, 0.011);
  opt.direction_sign = -1;
  const IntegralCurve back = trace(f, Point2(0.2, 0.3), 2, opt);
  for (const Point2& p : back.points) EXPECT_NEAR(p[0], 0.2, 1e-15);
  EXPECT_NEAR(back.points.back()[1], -1.0, 0.011);
}

TEST(Trace, CirclesFromARotationField) {
  BdeField f;
  f.domain = DomainRect{};
  f.coeffs = [](const Point2& p) {
    // (u1 du1 + u2 du2)(-u2 du1 + u1 du2)
    return make_bde(-p[0] * p[1], p[0] * p[0] - p[1] * p[1], p[0] * p[1], BdeKind::synthetic);
  };
  TraceOptions opt;
  opt.step = 0.01;
  opt.max_steps = 300;
  const Point2 seed(0.5, 0.1);
  const DirectionPair d = solve_directions(f.coeffs(seed));
  // pick the branch tangent to the circle through the seed
  int branch = std::abs(d.directions[0].dot(seed.normalized())) < 0.5 ? 1 : 2;
  const IntegralCurve c = trace(f, seed, branch, opt);
  for (const Point2& p : c.points) EXPECT_NEAR(p.norm(), seed.norm(), 1e-9);
}

TEST(Trace, SeedOnDiscriminantIsRejected) {
  BdeField f;
  f.domain = DomainRect{};
  f.coeffs = [](const Point2& p) { return make_bde(1, 2 * p[0], 1, BdeKind::synthetic); };
  EXPECT_THROW(trace(f, Point2(1.0 - 1e-17, 0), 1), MathError);  // outside the open domain
  EXPECT_THROW(trace(f, Point2(0.0, 0.0), 1), MathError);         // complex roots
}

TEST(Trace, PrincipalLinesStopOnTheSingularSet) {
  const CongruenceScene s = fixture("example43");
  TraceOptions opt;
  opt.step = 2e-3;
  const IntegralCurve c = trace(s, BdeKind::principal, Point2(0.1, 0.5), 2, opt);
  EXPECT_NE(c.reason, Termination::max_steps);
  if (c.reason == Termination::hit_singular_set) EXPECT_LT(std::abs(c.points.back()[1]), 0.01);
  // never crosses the singular set u2 = 0
  for (const Point2& p : c.points) EXPECT_GT(p[1], 0.0);
}

TEST(Trace, ParabolicCurveIsAPrincipalLine) {
  const CongruenceScene s = fixture("parabolic");
  const IntegralCurve c = trace(s, BdeKind::principal, Point2(0.3, 0.09), 1);
  EXPECT_TRUE(c.within_singular_set);
  ASSERT_GT(c.points.size(), 100u);
  for (const Point2& p : c.points) EXPECT_NEAR(p[1], p[0] * p[0], 1e-8);
  // the curve is not a line of curvature: that equation's roots are transverse
  const BDECoeffs lc = curvature_line_bde(s.x, *s.omega, Point2(0.3, 0.09));
  const Vec2 tangent = Vec2(1, 0.6).normalized();
  EXPECT_GT(std::abs(lc.residual(tangent)) / lc.max_abs(), 1e-3);
}

TEST(Discriminant, SphereIsDegenerate) {
  const DiscriminantZeroSet z = discriminant_zero_set(fixture("sphere"), BdeKind::principal, 16);
  EXPECT_EQ(z.status, "degenerate");
  const DiscriminantZeroSet p = discriminant_zero_set(fixture("parabolic"), BdeKind::curvature_line, 32);
  EXPECT_NE(p.status, "degenerate");
}

TEST(Discriminant, PrincipalFunctionCarriesTheSignOfDelta) {
  for (const char* name : {"parabolic", "example43", "skew"}) {
    const CongruenceScene scene = fixture(name);
    const auto f = discriminant_function(scene, BdeKind::principal);
    for (int i = 0; i < 10; ++i) {
      for (int j = 0; j < 10; ++j) {
        const Point2 q(-0.9 + 0.2 * i, -0.85 + 0.2 * j);
        const KummerFormsOmega forms = omega_forms(scene, q);
        const double disc = principal_bde(forms).b_form.discriminant;
        EXPECT_GE(disc, 0.0) << name << " " << q.transpose();
        EXPECT_NEAR(f(q), 0.5 * forms.delta * std::sqrt(disc), 1e-12 * (1 + std::abs(f(q))));
      }
    }
  }
}
