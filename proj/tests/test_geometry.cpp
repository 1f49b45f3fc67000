#include <gtest/gtest.h>

#include <cmath>

#include "linecong/contour.hpp"
#include "linecong/errors.hpp"
#include "linecong/fixtures.hpp"
#include "linecong/frontal.hpp"
#include "linecong/kummer.hpp"
#include "linecong/parser.hpp"
#include "linecong/rng.hpp"
#include "linecong/verify.hpp"
#include "oracles.hpp"

using namespace linecong;

TEST(Decompose, RecoversLambdaAndFlagsNonTangentBasis) {
  Mat32 omega;
  omega << 1, 0, 0, 2, 1, 1;
  Mat2 L;
  L << 1, 2, -3, 0.5;
  const DecompositionSample s = decompose(Mat32(omega * L.transpose()), omega);
  EXPECT_TRUE(s.tangent);
  EXPECT_NEAR((s.Lambda - L).norm(), 0.0, 1e-14);
  EXPECT_NEAR(s.det, L.determinant(), 1e-14);

  Mat32 off = omega * L.transpose();
  off(2, 0) += 1.0;
  EXPECT_FALSE(decompose(off, omega).tangent);

  Mat32 flat;
  flat << 1, 2, 0, 0, 0, 0;
  EXPECT_THROW(decompose(off, flat), MathError);
}

TEST(RelativeCurvatures, SphereIsUmbilicWithCurvaturesScaledByLambda) {
  const CongruenceScene s = fixture("sphere");
  for (const Point2 q : {Point2(0.1, 0.2), Point2(-0.7, 0.6)}) {
    const RelativeCurvatureSample r = relative_curvatures(s.x, *s.omega, q);
    EXPECT_NEAR(r.lambda, std::cos(q[1]), 1e-14);
    ASSERT_TRUE(r.k1.has_value());
    EXPECT_NEAR(*r.k1, -std::cos(q[1]), 1e-7);
    EXPECT_NEAR(*r.k2, -std::cos(q[1]), 1e-7);
    EXPECT_NEAR(*r.k1 / r.lambda, -1.0, 1e-7);
    EXPECT_NEAR(r.K, std::cos(q[1]), 1e-13);
    EXPECT_NEAR(r.K / r.lambda, 1.0, 1e-13);
  }
}

TEST(RelativeCurvatures, ParabolicGaussianCurvature) {
  const CongruenceScene s = fixture("parabolic");
  Sampler rng(5);
  for (int i = 0; i < 20; ++i) {
    const Point2 q = rng.point_in(s.domain);
    const RelativeCurvatureSample r = relative_curvatures(s.x, *s.omega, q);
    EXPECT_NEAR(r.lambda, 1.0, 1e-14);
    EXPECT_NEAR(r.K / r.lambda, oracle::parabolic::gaussian_curvature(q[0], q[1]), 1e-12);
  }
}

TEST(RelativeCurvatures, Example43SpotValues) {
  const CongruenceScene s = fixture("example43");
  for (const auto& spot : oracle::example43::kSpots) {
    const Point2 q(spot.u1, spot.u2);
    const RelativeCurvatureSample r = relative_curvatures(s.x, *s.omega, q);
    EXPECT_NEAR(r.K, spot.K, 1e-13 * std::abs(spot.K));
    const BDECoeffs c = curvature_line_bde(r);
    EXPECT_NEAR(c.A, spot.A, 1e-13);
    EXPECT_NEAR(c.B, spot.B, 1e-13);
    EXPECT_NEAR(c.C, spot.C, 1e-13);
    // the closed form used by the acceptance check agrees with the spot values
    EXPECT_NEAR(oracle::example43::derived_K_omega(spot.u1, spot.u2), spot.K, 1e-13);
  }
}

TEST(Contours, CircleAndStraightLine) {
  DomainRect d;
  const auto circle = zero_contours([](const Point2& p) { return p.squaredNorm() - 0.25; }, d, 41);
  ASSERT_EQ(circle.size(), 1u);
  EXPECT_TRUE(circle[0].closed);
  for (const Point2& p : circle[0].points) EXPECT_NEAR(p.norm(), 0.5, 1e-9);

  // zero set running exactly through lattice nodes
  const auto line = zero_contours([](const Point2& p) { return p[1]; }, d, 21);
  ASSERT_EQ(line.size(), 1u);
  for (const Point2& p : line[0].points) EXPECT_NEAR(p[1], 0.0, 1e-12);
  EXPECT_LT(line[0].points.front()[0], -0.9);
  EXPECT_GT(line[0].points.back()[0] * line[0].points.front()[0], -1.0 - 1e-12);

  EXPECT_TRUE(zero_contours([](const Point2&) { return 1.0; }, d, 16).empty());
}

TEST(Contours, HausdorffDistance) {
  const std::vector<Point2> a{{0, 0}, {1, 0}};
  const std::vector<Point2> b{{0, 0.1}, {1, 0.1}};
  EXPECT_NEAR(hausdorff_distance(a, b), 0.1, 1e-15);
  const std::vector<Point2> c{{0, 0}, {0.5, 0}, {1, 0}};
  EXPECT_NEAR(hausdorff_distance(a, c), 0.0, 1e-15);
  EXPECT_NEAR(distance_to_polyline(Point2(0.5, 2), a), 2.0, 1e-15);
}

TEST(SingularSet, Example43IsTheAxisU2EqualsZero) {
  const CongruenceScene s = fixture("example43");
  const auto curves = singular_set(s.x, *s.omega, s.domain, 64);
  ASSERT_EQ(curves.size(), 1u);
  for (const Point2& p : curves[0].points) EXPECT_NEAR(p[1], 0.0, 1e-10);
  EXPECT_TRUE(singular_set(fixture("sphere").x, *fixture("sphere").omega, s.domain, 32).empty());
}

TEST(Kummer, FormsAgreeWithDefinitions) {
  const CongruenceScene s = fixture("skew");
  const Point2 q(0.2, -0.4);
  const PointJets p = evaluate_point(s, q);
  const KummerFormsClassical c = classical_forms(p);
  EXPECT_NEAR(c.M1, -p.Dx.col(1).dot(p.Dxi.col(0)), 1e-15);
  EXPECT_NEAR(c.M2, -p.Dx.col(0).dot(p.Dxi.col(1)), 1e-15);
  EXPECT_TRUE(c.regular);
  const NormalityReport n = is_normal(s, q);
  EXPECT_FALSE(n.normal);
  EXPECT_GT(n.classical_gap, 1e-3);
  EXPECT_TRUE(is_normal(fixture("parabolic"), q).normal);
}

TEST(Kummer, CurvatureRescalingOffTheSingularSet) {
  const CongruenceScene s = fixture("example43");
  const Point2 q(0.4, 0.5);
  const KummerFormsOmega f = omega_forms(s, q);
  const Vec2 b(0.6, -0.8);
  const Vec2 a = f.Delta.transpose().inverse() * b;  // b = Delta^T a
  EXPECT_NEAR(f.delta * kummer_curvature_classical(s, q, a), kummer_curvature_omega(f, b), 1e-12);
}

TEST(Kummer, Example43SingularPointReport) {
  const CongruenceScene s = fixture("example43");
  const Point2 q(0.3, 0.0);
  EXPECT_FALSE(classical_forms(s, q).regular);
  EXPECT_NEAR(omega_forms(s, q).delta, 0.0, 1e-15);
  EXPECT_THROW(focal_and_limit(s, q), MathError);
  EXPECT_THROW(kummer_curvature_classical(s, q, Vec2(1, 0)), MathError);
}

TEST(Kummer, NonTangentOmegaIsRejected) {
  CongruenceScene s = parse_scene(
      "x = (u1, u2, 0)\n"
      "omega = ((1, 0, 0), (0, 1, 0))\n"
      "xi = (u1, u2, 1)\n");
  EXPECT_THROW(omega_forms(s, Point2(0.3, 0.3)), MathError);
}

TEST(Kummer, EigenDirectionsRequireNormality) {
  EXPECT_THROW(principal_directions_eigen(fixture("skew"), Point2(0.2, 0.3)), MathError);
  const PrincipalDirections d = principal_directions_eigen(fixture("parabolic"), Point2(0.2, 0.3));
  ASSERT_EQ(d.directions.size(), 2u);
  ASSERT_TRUE(d.swap_residual.has_value());
  EXPECT_LT(*d.swap_residual, 1e-10);
  EXPECT_TRUE(principal_directions_eigen(fixture("sphere"), Point2(0.2, 0.3)).umbilic);
}

TEST(Kummer, StrictionOnSphereAndHelicoid) {
  const PlaneCurve c = parse_curve("t", "t/3", -0.5, 0.5);
  const StrictionCurve s = striction_curve(fixture("sphere"), c, 21);
  for (const StrictionSample& p : s.samples) {
    EXPECT_NEAR(p.k, -1.0, 1e-12);
    EXPECT_LT(p.beta.norm(), 1e-12);
  }
  const PlaneCurve bad = parse_curve("3*t", "0", -0.5, 0.5);
  EXPECT_THROW(striction_curve(fixture("sphere"), bad, 21), MathError);
  // xi is constant along u1 = const on the plane with a constant field
  const CongruenceScene flat = parse_scene("x = (u1, u2, 0)\nxi = (0, 0, 1)\n");
  EXPECT_THROW(striction_curve(flat, c, 5), MathError);
}

TEST(Kummer, SurfaceOfCongruenceMesh) {
  const CongruenceScene s = fixture("helicoid");
  const PlaneCurve c = parse_curve("t", "0", -0.5, 0.5);
  const CongruenceMesh m = surface_of_congruence(s, c, 11, -1, 1, 5);
  EXPECT_EQ(m.rows, 11);
  EXPECT_EQ(m.cols, 5);
  ASSERT_EQ(m.vertices.size(), 55u);
  // middle column (w = 0) is the axis
  for (int i = 0; i < m.rows; ++i) EXPECT_NEAR(m.vertices[i * m.cols + 2].head<2>().norm(), 0.0, 1e-15);
  EXPECT_NEAR(m.vertices[0][2], -0.5, 1e-15);
}

TEST(Verify, DeterministicAndClassifiesPreconditions) {
  VerifyOptions opt;
  opt.seed = 42;
  opt.points = 40;
  const VerifyReport a = verify_scene(fixture("parabolic"), opt);
  const VerifyReport b = verify_scene(fixture("parabolic"), opt);
  ASSERT_EQ(a.identities.size(), b.identities.size());
  for (std::size_t i = 0; i < a.identities.size(); ++i) {
    EXPECT_EQ(a.identities[i].max_residual, b.identities[i].max_residual);
  }
  EXPECT_TRUE(a.all_pass());

  const VerifyReport skew = verify_scene(fixture("skew"), opt);
  EXPECT_TRUE(skew.all_pass());
  for (const IdentityResult& r : skew.identities) {
    if (r.name == "factorization_theorem") EXPECT_EQ(r.status, CheckStatus::not_applicable);
    if (r.name == "kummer_first_form_decomposition") EXPECT_EQ(r.status, CheckStatus::pass);
  }
}
