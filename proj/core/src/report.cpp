#include "linecong/report.hpp"

#include <charconv>
#include <cmath>

#include <json.hpp>

#include "linecong/errors.hpp"
#include "linecong/frontal.hpp"

namespace linecong {

using Json = nlohmann::ordered_json;

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

Json mat(const Mat2& m) { return Json::array({m(0, 0), m(0, 1), m(1, 0), m(1, 1)}); }
Json vec(const Vec3& v) { return Json::array({v[0], v[1], v[2]}); }
Json complex_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

Json bde_json(const BDECoeffs& c) {
  return Json{{"A", c.A}, {"B", c.B}, {"C", c.C}, {"discriminant", c.discriminant}};
}

}  // namespace

std::string forms_report(const CongruenceScene& scene, const Point2& q) {
  const PointJets p = evaluate_point(scene, q);
  const KummerFormsClassical c = classical_forms(p);

  Json j;
  j["schema"] = kReportSchema;
  j["scene"] = scene.name;
  j["point"] = Json::array({q[0], q[1]});
  j["x"] = vec(p.x);
  j["xi"] = vec(p.xi);

  Json cl;
  cl["defined"] = c.regular;
  cl["E"] = c.E;
  cl["F"] = c.F;
  cl["G"] = c.G;
  cl["L"] = c.L;
  cl["M1"] = c.M1;
  cl["M2"] = c.M2;
  cl["N"] = c.N;
  cl["I"] = mat(c.I);
  cl["II"] = mat(c.II);
  if (c.regular) {
    const FocalLimitData d = focal_and_limit(c);
    cl["kummer_principal_curvatures"] = Json::array({d.kappa1, d.kappa2});
    cl["focal_coordinates"] = Json::array({complex_json(d.rho1), complex_json(d.rho2)});
    cl["focal_real"] = d.rho_real;
    cl["midpoint_residuals"] = Json::array({d.sum_residual, d.diff_residual});
  } else {
    cl["note"] = "xi is singular here; classical Kummer quantities are undefined";
  }
  j["classical"] = cl;

  const KummerFormsOmega f = omega_forms(scene, p);
  Json om;
  om["source"] = f.omega_from_scene ? "scene" : "xi_partials";
  om["E"] = f.E_O;
  om["F"] = f.F_O;
  om["G"] = f.G_O;
  om["L"] = f.L_O;
  om["M1"] = f.M1_O;
  om["M2"] = f.M2_O;
  om["N"] = f.N_O;
  om["I"] = mat(f.I_O);
  om["II"] = mat(f.II_O);
  om["Delta"] = mat(f.Delta);
  om["delta"] = f.delta;
  om["delta_zero"] = std::abs(f.delta) <= 1e-10;
  om["tangency_residual"] = f.tangency_residual;
  j["omega"] = om;

  const NormalityReport nr = is_normal(c, f);
  j["is_normal"] = nr.normal;
  j["asymmetry"] = nr.asymmetry;
  j["classical_gap"] = nr.classical_gap;

  const PrincipalEquation pe = principal_bde(f);
  const double scale = f.I_O.norm() * kummer_matrix(f).norm();
  Json pr = bde_json(pe.b_form);
  pr["pulled_back"] = bde_json(pe.pulled_back);
  pr["umbilic"] = pe.b_form.max_abs() <= 1e-10 * std::max(1.0, scale);
  j["principal"] = pr;
  j["discriminant"] = pe.b_form.discriminant;

  if (std::abs(p.xi.norm() - 1.0) <= 1e-10) {
    j["developable"] = bde_json(developable_bde(p, f));
  } else {
    j["developable"] = nullptr;
  }
  const TheoremResidual tr = theorem_residual(f);
  j["theorem_residual"] = Json{{"residual", tr.residual}, {"lhs_norm", tr.lhs_norm}, {"normal", tr.normal}};

  if (scene.omega) {
    try {
      const RelativeCurvatureSample s = relative_curvatures(scene.x, *scene.omega, q);
      Json rel;
      rel["Lambda"] = mat(s.Lambda);
      rel["lambda"] = s.lambda;
      rel["tangent_to_x"] = s.tangency_residual <= kTangencyTol * std::max(1.0, p.Dx.norm());
      rel["mu"] = mat(s.mu);
      rel["alpha"] = mat(s.alpha);
      rel["K"] = s.K;
      rel["H"] = s.H;
      if (s.k1) {
        rel["k1"] = *s.k1;
        rel["k2"] = *s.k2;
      } else {
        rel["k1"] = nullptr;
        rel["k2"] = nullptr;
        rel["k_complex"] = Json::array({complex_json(s.k1_complex), complex_json(s.k2_complex)});
      }
      rel["curvature_line"] = bde_json(curvature_line_bde(s));
      j["relative"] = rel;
    } catch (const MathError& e) {
      j["relative"] = Json{{"error", e.what()}};
    }
  } else {
    j["relative"] = nullptr;
  }
  return j.dump(2) + "\n";
}

std::string verify_report_json(const VerifyReport& report) {
  Json j;
  j["schema"] = kReportSchema;
  j["scene"] = report.scene;
  j["seed"] = report.seed;
  j["points"] = report.requested_points;
  j["all_pass"] = report.all_pass();
  Json ids = Json::array();
  for (const IdentityResult& r : report.identities) {
    Json e;
    e["name"] = r.name;
    e["status"] = std::string(to_string(r.status));
    e["max_residual"] = r.max_residual;
    e["tolerance"] = r.tolerance;
    e["points"] = r.points;
    e["skipped"] = r.skipped;
    if (!r.note.empty()) e["note"] = r.note;
    ids.push_back(e);
  }
  j["identities"] = ids;
  return j.dump(2) + "\n";
}

std::string curves_csv(const CongruenceScene& scene, BdeKind kind, const std::vector<TracedCurve>& curves) {
  std::string out = "curve_id,kind,branch,t,u1,u2,x,y,z\n";
  for (const TracedCurve& tc : curves) {
    for (std::size_t i = 0; i < tc.curve.points.size(); ++i) {
      const Point2& u = tc.curve.points[i];
      const Vec3 x = value_of(eval_vector_jet(scene.x, u));
      out += std::to_string(tc.curve_id) + "," + std::string(to_string(kind)) + "," +
             std::to_string(tc.curve.branch) + "," + format_number(tc.curve.t[i]) + "," +
             format_number(u[0]) + "," + format_number(u[1]) + "," + format_number(x[0]) + "," +
             format_number(x[1]) + "," + format_number(x[2]) + "\n";
    }
  }
  return out;
}

std::string contours_csv(const std::vector<CurveFamily>& families) {
  std::string out = "family,curve_id,u1,u2\n";
  for (const CurveFamily& fam : families) {
    for (std::size_t id = 0; id < fam.curves.size(); ++id) {
      for (const Point2& p : fam.curves[id].points) {
        out += fam.family + "," + std::to_string(id) + "," + format_number(p[0]) + "," +
               format_number(p[1]) + "\n";
      }
    }
  }
  return out;
}

std::string mesh_obj(const CongruenceMesh& mesh, const std::optional<StrictionCurve>& striction) {
  std::string out;
  for (const Vec3& v : mesh.vertices) {
    out += "v " + format_number(v[0]) + " " + format_number(v[1]) + " " + format_number(v[2]) + "\n";
  }
  for (int i = 0; i + 1 < mesh.rows; ++i) {
    for (int j = 0; j + 1 < mesh.cols; ++j) {
      const int a = i * mesh.cols + j + 1;  // OBJ indices are 1-based
      const int b = (i + 1) * mesh.cols + j + 1;
      out += "f " + std::to_string(a) + " " + std::to_string(b) + " " + std::to_string(b + 1) + " " +
             std::to_string(a + 1) + "\n";
    }
  }
  if (striction && !striction->samples.empty()) {
    const std::size_t base = mesh.vertices.size();
    for (const StrictionSample& s : striction->samples) {
      out += "v " + format_number(s.beta[0]) + " " + format_number(s.beta[1]) + " " +
             format_number(s.beta[2]) + "\n";
    }
    out += "l";
    for (std::size_t k = 0; k < striction->samples.size(); ++k) out += " " + std::to_string(base + k + 1);
    out += "\n";
  }
  return out;
}

std::string striction_csv(const StrictionCurve& s) {
  std::string out = "t,u1,u2,k,x,y,z,property_residual\n";
  for (const StrictionSample& p : s.samples) {
    out += format_number(p.t) + "," + format_number(p.u[0]) + "," + format_number(p.u[1]) + "," +
           format_number(p.k) + "," + format_number(p.beta[0]) + "," + format_number(p.beta[1]) + "," +
           format_number(p.beta[2]) + "," + format_number(p.property_residual) + "\n";
  }
  return out;
}

}  // namespace linecong
