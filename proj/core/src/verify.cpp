#include "linecong/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "linecong/errors.hpp"
#include "linecong/frontal.hpp"
#include "linecong/kummer.hpp"
#include "linecong/rng.hpp"

namespace linecong {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::not_applicable:
      return "n/a";
  }
  return "unknown";
}

bool VerifyReport::all_pass() const {
  return std::none_of(identities.begin(), identities.end(),
                      [](const IdentityResult& r) { return r.status == CheckStatus::fail; });
}

namespace {

struct Tally {
  IdentityResult result;

  void record(double residual) {
    ++result.points;
    if (std::isnan(result.max_residual)) return;
    if (std::isnan(residual) || residual > result.max_residual) result.max_residual = residual;
  }
  void skip() { ++result.skipped; }
};

double proportionality_gap(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
  const double na = a.norm(), nb = b.norm();
  if (na <= 1e-14 && nb <= 1e-14) return 0.0;
  if (na <= 1e-14 || nb <= 1e-14) return 1.0;
  const Eigen::Vector3d ua = a / na, ub = b / nb;
  return std::min((ua - ub).norm(), (ua + ub).norm());
}

}  // namespace

VerifyReport verify_scene(const CongruenceScene& scene, const VerifyOptions& options) {
  const double tol = options.tol;
  std::vector<std::string> order;
  std::map<std::string, Tally> tallies;
  const auto tally = [&](const std::string& name, double tolerance) -> Tally& {
    auto it = tallies.find(name);
    if (it == tallies.end()) {
      order.push_back(name);
      Tally t;
      t.result.name = name;
      t.result.tolerance = tolerance;
      it = tallies.emplace(name, t).first;
    }
    return it->second;
  };
  // Register in a fixed order so the report layout does not depend on data.
  tally("kummer_first_form_decomposition", tol);
  tally("kummer_second_form_decomposition", tol);
  tally("curvature_rescaling", tol);
  tally("normality_criteria_agree", 0.0);
  tally("normal_orthogonal_to_x", tol);
  tally("normal_derivative_decomposition", tol);
  tally("delta_equals_mu", tol);
  tally("relative_curvature_algebra", tol);
  tally("principal_discriminant_nonnegative", 1e-12);
  tally("factorization_theorem", tol);
  tally("principal_equals_delta_times_developable", 1e-8);
  tally("developable_triple_product_oracle", tol);
  tally("principal_via_relative_curvature", tol);
  tally("focal_limit_midpoint_system", 1e-8);
  tally("focal_equals_limit_when_normal", 1e-8);
  tally("eigenvalue_swap", tol);

  const auto guarded = [&](const std::string& name, const std::function<void(Tally&)>& body) {
    Tally& t = tallies.at(name);
    try {
      body(t);
    } catch (const MathError&) {
      t.skip();
    }
  };

  Sampler rng(options.seed);
  for (int k = 0; k < options.points; ++k) {
    const Point2 q = rng.point_in(scene.domain);
    const Vec2 a(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));

    PointJets p;
    KummerFormsClassical c;
    KummerFormsOmega f;
    try {
      p = evaluate_point(scene, q);
      c = classical_forms(p);
      f = omega_forms(scene, p);
    } catch (const MathError&) {
      for (auto& [name, t] : tallies) t.skip();
      continue;
    }
    const bool normal = relative_asymmetry(kummer_matrix(f)) <= kSymmetryTol;
    const bool unit = std::abs(p.xi.norm() - 1.0) <= 1e-10;
    bool exact = false;
    try {
      exact = exact_normal_at(scene, q);
    } catch (const MathError&) {
    }

    guarded("kummer_first_form_decomposition", [&](Tally& t) {
      t.record((c.I - f.Delta * f.I_O * f.Delta.transpose()).norm() / (1.0 + c.I.norm()));
    });
    guarded("kummer_second_form_decomposition", [&](Tally& t) {
      t.record((c.II - f.Delta * f.II_O).norm() / (1.0 + c.II.norm()));
    });
    guarded("curvature_rescaling", [&](Tally& t) {
      if (!c.regular) return t.skip();
      const double lhs = f.delta * kummer_curvature_classical(c, a);
      const double rhs = kummer_curvature_omega(f, f.Delta.transpose() * a);
      t.record(std::abs(lhs - rhs) / (1.0 + std::abs(lhs)));
    });
    guarded("normality_criteria_agree", [&](Tally& t) {
      if (!c.regular) return t.skip();
      const bool classical = std::abs(c.M1 - c.M2) <= kSymmetryTol * c.II.norm();
      t.record(classical == normal ? 0.0 : 1.0);
    });
    if (scene.omega) {
      guarded("normal_orthogonal_to_x", [&](Tally& t) {
        if (!exact) return t.skip();
        const Vec3 n = value_of(eval_vector_jet(induced_normal(scene.omega->w1, scene.omega->w2), q));
        t.record((p.Dx.transpose() * n).norm() / (1.0 + p.Dx.norm()));
      });
      guarded("normal_derivative_decomposition", [&](Tally& t) {
        const RelativeCurvatureSample s = relative_curvatures(scene.x, *scene.omega, q);
        const Mat32 W = evaluate_basis(*scene.omega, q);
        t.record((s.Dn - W * s.mu.transpose()).norm() / (1.0 + s.Dn.norm()));
      });
      guarded("delta_equals_mu", [&](Tally& t) {
        if (!scene.xi_is_omega_normal) return t.skip();
        const RelativeCurvatureSample s = relative_curvatures(scene.x, *scene.omega, q);
        t.record((f.Delta - s.mu).cwiseAbs().maxCoeff() / (1.0 + s.mu.norm()));
      });
      guarded("relative_curvature_algebra", [&](Tally& t) {
        const RelativeCurvatureSample s = relative_curvatures(scene.x, *scene.omega, q);
        if (!s.k1) return t.skip();
        const double prod = std::abs(*s.k1 * *s.k2 - s.lambda * s.K) / (1.0 + std::abs(s.lambda * s.K));
        const double sum = std::abs(*s.k1 + *s.k2 - 2.0 * s.H) / (1.0 + std::abs(s.H));
        t.record(std::max(prod, sum));
      });
      guarded("principal_via_relative_curvature", [&](Tally& t) {
        if (!exact) return t.skip();
        const BDECoeffs pb = principal_bde(f).pulled_back;
        const BDECoeffs alt = principal_bde_via_alpha(scene, q);
        t.record((pb.vector() - alt.vector()).norm() / (1.0 + pb.vector().norm()));
      });
      guarded("eigenvalue_swap", [&](Tally& t) {
        if (!normal || !exact) return t.skip();
        const PrincipalDirections d = principal_directions_eigen(scene, q);
        if (!d.swap_residual) return t.skip();
        t.record(*d.swap_residual);
      });
    }
    guarded("principal_discriminant_nonnegative", [&](Tally& t) {
      const BDECoeffs b = principal_bde(f).b_form;
      const double s = b.max_abs();
      t.record(std::max(0.0, -b.discriminant) / (1.0 + s * s));
    });
    guarded("factorization_theorem", [&](Tally& t) {
      if (!normal) return t.skip();
      const TheoremResidual r = theorem_residual(f);
      t.record(r.residual / (1.0 + r.lhs_norm));
    });
    guarded("principal_equals_delta_times_developable", [&](Tally& t) {
      if (!normal || !unit) return t.skip();
      const Eigen::Vector3d pb = principal_bde(f).pulled_back.vector();
      const Eigen::Vector3d dev = f.delta * developable_bde(p, f).vector();
      t.record((pb - dev).norm() / (1.0 + pb.norm()));
    });
    guarded("developable_triple_product_oracle", [&](Tally& t) {
      if (!unit) return t.skip();
      t.record(proportionality_gap(developable_bde(p, f).vector(), developable_bde_triple(p).vector()));
    });
    guarded("focal_limit_midpoint_system", [&](Tally& t) {
      if (!c.regular) return t.skip();
      const FocalLimitData d = focal_and_limit(c);
      const double scale = 1.0 + std::abs(d.kappa1) + std::abs(d.kappa2);
      t.record(std::max(d.sum_residual / scale, d.diff_residual / (scale * scale)));
    });
    guarded("focal_equals_limit_when_normal", [&](Tally& t) {
      if (!c.regular || !normal) return t.skip();
      const FocalLimitData d = focal_and_limit(c);
      const double scale = 1.0 + std::abs(d.kappa1) + std::abs(d.kappa2);
      const double gap = std::max(std::abs(d.rho1 - d.kappa1), std::abs(d.rho2 - d.kappa2));
      t.record(gap / scale);
    });
  }

  VerifyReport report;
  report.scene = scene.name;
  report.seed = options.seed;
  report.requested_points = options.points;
  for (const std::string& name : order) {
    IdentityResult r = tallies.at(name).result;
    if (r.points == 0) {
      r.status = CheckStatus::not_applicable;
      r.max_residual = 0.0;
      r.note = "precondition not met at any sampled point";
    } else {
      r.status = r.max_residual <= r.tolerance ? CheckStatus::pass : CheckStatus::fail;
    }
    report.identities.push_back(std::move(r));
  }
  return report;
}

}  // namespace linecong
