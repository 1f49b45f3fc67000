#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "linecong/bde.hpp"
#include "linecong/errors.hpp"
#include "linecong/fixtures.hpp"
#include "linecong/frontal.hpp"
#include "linecong/kummer.hpp"
#include "linecong/parser.hpp"
#include "linecong/report.hpp"
#include "linecong/verify.hpp"

namespace linecong::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string positional;
  std::string scene_path;
  std::string fixture_name;
  std::string out_path;
  std::string format;
  double tol = 0.0;
  int grid = 0;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("source", c.positional, "Built-in fixture name or path to a congruence file");
  sub->add_option("--scene", c.scene_path, "Path to a congruence file");
  sub->add_option("--fixture", c.fixture_name, "Built-in fixture name");
  sub->add_option("--out", c.out_path, "Write the result to this file instead of stdout");
  sub->add_option("--format", c.format, "Output format (json, csv or obj)")
      ->check(CLI::IsMember({"json", "csv", "obj"}));
  sub->add_option("--tol", c.tol, "Tolerance override")->check(CLI::PositiveNumber);
}

CongruenceScene load(const Common& c) {
  const int sources = !c.positional.empty() + !c.scene_path.empty() + !c.fixture_name.empty();
  if (sources != 1) throw UsageError("give exactly one scene: a positional name/path, --scene or --fixture");
  if (!c.fixture_name.empty()) {
    if (!is_fixture(c.fixture_name)) throw UsageError("unknown fixture '" + c.fixture_name + "'");
    return fixture(c.fixture_name);
  }
  const std::string& src = c.positional.empty() ? c.scene_path : c.positional;
  if (c.scene_path.empty() && is_fixture(src)) return fixture(src);
  try {
    return load_scene_file(src);
  } catch (const ParseError&) {
    throw;
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
}

void check_format(const Common& c, const std::string& expected) {
  if (!c.format.empty() && c.format != expected) {
    throw UsageError("this subcommand writes " + expected + ", not " + c.format);
  }
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out_path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + c.out_path + "'");
  f << text;
}

std::pair<double, double> parse_pair(const std::string& s, const std::string& what) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw UsageError(what + " must look like a,b: '" + s + "'");
  try {
    std::size_t used1 = 0, used2 = 0;
    const std::string a = s.substr(0, comma), b = s.substr(comma + 1);
    const double x = std::stod(a, &used1);
    const double y = std::stod(b, &used2);
    if (used1 != a.size() || used2 != b.size()) throw std::invalid_argument(s);
    return {x, y};
  } catch (const std::logic_error&) {
    throw UsageError(what + " must look like a,b: '" + s + "'");
  }
}

BdeKind parse_kind(const std::string& s) {
  if (s == "principal") return BdeKind::principal;
  if (s == "developable") return BdeKind::developable;
  if (s == "curvature" || s == "curvature_line") return BdeKind::curvature_line;
  throw UsageError("unknown kind '" + s + "' (principal, developable, curvature)");
}

IntegralCurve stitch(const IntegralCurve& fwd, const IntegralCurve& bwd) {
  IntegralCurve c;
  c.branch = fwd.branch;
  c.within_singular_set = fwd.within_singular_set;
  c.reason = fwd.reason;
  for (std::size_t i = bwd.points.size(); i-- > 1;) {
    c.points.push_back(bwd.points[i]);
    c.t.push_back(-bwd.t[i]);
  }
  c.points.insert(c.points.end(), fwd.points.begin(), fwd.points.end());
  c.t.insert(c.t.end(), fwd.t.begin(), fwd.t.end());
  return c;
}

PlaneCurve curve_from(const std::string& u1, const std::string& u2, const std::string& range) {
  if (u1.empty() || u2.empty()) throw UsageError("the directrix needs both --u1 and --u2 expressions in t");
  const auto [a, b] = parse_pair(range, "--t-range");
  if (!(a < b)) throw UsageError("--t-range must be increasing");
  return parse_curve(u1, u2, a, b);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Line congruences with frontal direction fields", "linecong"};
  app.require_subcommand(1);

  // forms
  Common forms_c;
  std::string forms_point;
  auto* forms = app.add_subcommand("forms", "Fundamental forms and flags at one point (JSON)");
  add_common(forms, forms_c);
  forms->add_option("--point,--at", forms_point, "Point u1,u2")->required();

  // verify
  Common verify_c;
  std::uint64_t verify_seed = 1;
  int verify_points = 200;
  auto* verify = app.add_subcommand("verify", "Identity suite at seeded random points (JSON)");
  add_common(verify, verify_c);
  verify->add_option("--seed", verify_seed, "RNG seed");
  verify->add_option("--points", verify_points, "Number of random points")->check(CLI::PositiveNumber);

  // lines
  Common lines_c;
  std::string lines_kind = "principal";
  std::vector<std::string> lines_seeds;
  double lines_step = 1e-3;
  int lines_max_steps = 100000;
  auto* lines = app.add_subcommand("lines", "Trace integral curves of a direction equation (CSV)");
  add_common(lines, lines_c);
  lines->add_option("--kind", lines_kind, "principal, developable or curvature");
  lines->add_option("--seed", lines_seeds, "Seed point u1,u2 (repeatable)");
  lines->add_option("--grid", lines_c.grid, "Seed on an N x N lattice when no --seed is given")
      ->check(CLI::PositiveNumber);
  lines->add_option("--step", lines_step, "Step length in (u1, u2)")->check(CLI::PositiveNumber);
  lines->add_option("--max-steps", lines_max_steps, "Step limit per direction")->check(CLI::PositiveNumber);

  // mesh
  Common mesh_c;
  std::string mesh_u1, mesh_u2, mesh_t_range = "0,1", mesh_w_range = "-1,1";
  int mesh_t_samples = 50, mesh_w_samples = 11;
  bool mesh_striction = false;
  auto* mesh = app.add_subcommand("mesh", "Surface of the congruence along a directrix (OBJ)");
  add_common(mesh, mesh_c);
  mesh->add_option("--u1", mesh_u1, "u1(t)");
  mesh->add_option("--u2", mesh_u2, "u2(t)");
  mesh->add_option("--t-range", mesh_t_range, "Parameter interval a,b");
  mesh->add_option("--t-samples", mesh_t_samples, "Samples along t")->check(CLI::PositiveNumber);
  mesh->add_option("--w-range", mesh_w_range, "Line parameter interval a,b");
  mesh->add_option("--w-samples", mesh_w_samples, "Samples along each line")->check(CLI::PositiveNumber);
  mesh->add_flag("--striction", mesh_striction, "Append the striction line as an l record");

  // singular
  Common sing_c;
  sing_c.grid = 64;
  std::vector<std::string> sing_also;
  auto* singular = app.add_subcommand("singular", "Singular sets and discriminant curves (CSV)");
  add_common(singular, sing_c);
  singular->add_option("--grid", sing_c.grid, "Lattice size")->check(CLI::Range(8, 4096));
  singular->add_option("--also-discriminant", sing_also, "Also contour this kind's discriminant");

  // striction
  Common stric_c;
  std::string stric_u1, stric_u2, stric_t_range = "0,1";
  int stric_samples = 50;
  auto* striction = app.add_subcommand("striction", "Striction line along a directrix (CSV)");
  add_common(striction, stric_c);
  striction->add_option("--u1", stric_u1, "u1(t)");
  striction->add_option("--u2", stric_u2, "u2(t)");
  striction->add_option("--t-range", stric_t_range, "Parameter interval a,b");
  striction->add_option("--t-samples", stric_samples, "Samples along t")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << e.what() << "\n";
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (forms->parsed()) {
      check_format(forms_c, "json");
      const CongruenceScene scene = load(forms_c);
      const auto [u1, u2] = parse_pair(forms_point, "--point");
      const Point2 q(u1, u2);
      if (!scene.domain.contains(q)) throw UsageError("point lies outside the scene's domain");
      emit(forms_c, forms_report(scene, q), out);
      return kOk;
    }
    if (verify->parsed()) {
      check_format(verify_c, "json");
      const CongruenceScene scene = load(verify_c);
      VerifyOptions opt;
      opt.seed = verify_seed;
      opt.points = verify_points;
      if (verify_c.tol > 0.0) opt.tol = verify_c.tol;
      const VerifyReport report = verify_scene(scene, opt);
      emit(verify_c, verify_report_json(report), out);
      return report.all_pass() ? kOk : kVerificationFailed;
    }
    if (lines->parsed()) {
      check_format(lines_c, "csv");
      const CongruenceScene scene = load(lines_c);
      const BdeKind kind = parse_kind(lines_kind);
      std::vector<Point2> seeds;
      for (const std::string& s : lines_seeds) {
        const auto [a, b] = parse_pair(s, "--seed");
        seeds.emplace_back(a, b);
      }
      if (seeds.empty()) {
        if (lines_c.grid <= 0) throw UsageError("give --seed points or --grid N");
        const DomainRect& d = scene.domain;
        for (int j = 0; j < lines_c.grid; ++j) {
          for (int i = 0; i < lines_c.grid; ++i) {
            seeds.emplace_back(lattice_coordinate(d.u1_min, d.u1_max, lines_c.grid, i),
                               lattice_coordinate(d.u2_min, d.u2_max, lines_c.grid, j));
          }
        }
      }
      const BdeField field = make_field(scene, kind);
      TraceOptions opt;
      opt.step = lines_step;
      opt.max_steps = lines_max_steps;
      std::vector<TracedCurve> curves;
      int skipped = 0;
      for (const Point2& s : seeds) {
        for (int branch = 1; branch <= 2; ++branch) {
          try {
            TraceOptions f = opt, b = opt;
            b.direction_sign = -1;
            const IntegralCurve fwd = trace(field, s, branch, f);
            const IntegralCurve bwd = trace(field, s, branch, b);
            curves.push_back({static_cast<int>(curves.size()), stitch(fwd, bwd)});
            if (fwd.within_singular_set) break;  // one curve: the singular set itself
          } catch (const MathError& e) {
            ++skipped;
            err << "skipped seed " << format_number(s[0]) << "," << format_number(s[1])
                << " branch " << branch << ": " << e.what() << "\n";
            break;
          }
        }
      }
      emit(lines_c, curves_csv(scene, kind, curves), out);
      err << "traced " << curves.size() << " curves from " << seeds.size() << " seeds; skipped "
          << skipped << " seeds\n";
      return kOk;
    }
    if (mesh->parsed()) {
      check_format(mesh_c, "obj");
      const CongruenceScene scene = load(mesh_c);
      const PlaneCurve curve = curve_from(mesh_u1, mesh_u2, mesh_t_range);
      const auto [w0, w1] = parse_pair(mesh_w_range, "--w-range");
      const CongruenceMesh m = surface_of_congruence(scene, curve, mesh_t_samples, w0, w1, mesh_w_samples);
      std::optional<StrictionCurve> s;
      if (mesh_striction) s = striction_curve(scene, curve, mesh_t_samples);
      emit(mesh_c, mesh_obj(m, s), out);
      return kOk;
    }
    if (singular->parsed()) {
      check_format(sing_c, "csv");
      const CongruenceScene scene = load(sing_c);
      if (!scene.omega) {
        throw MathError(MathErrorKind::precondition, "singular sets need a moving basis omega in the scene");
      }
      const double iso = sing_c.tol > 0.0 ? sing_c.tol : 1e-10;
      std::vector<CurveFamily> families;
      families.push_back({"lambda", singular_set(scene.x, *scene.omega, scene.domain, sing_c.grid, iso)});
      families.push_back({"delta", zero_contours([&](const Point2& q) { return omega_forms(scene, q).delta; },
                                                 scene.domain, sing_c.grid, iso)});
      if (families[0].curves.empty() && families[1].curves.empty()) {
        err << "no singular points of x or xi found on the lattice\n";
      }
      for (const std::string& k : sing_also) {
        const BdeKind kind = parse_kind(k);
        const DiscriminantZeroSet z = discriminant_zero_set(scene, kind, sing_c.grid, iso);
        if (z.status == "degenerate") {
          err << "discriminant of " << to_string(kind) << " vanishes identically (umbilic everywhere)\n";
        }
        families.push_back({"discriminant_" + std::string(to_string(kind)), z.curves});
      }
      emit(sing_c, contours_csv(families), out);
      return kOk;
    }
    if (striction->parsed()) {
      check_format(stric_c, "csv");
      const CongruenceScene scene = load(stric_c);
      const PlaneCurve curve = curve_from(stric_u1, stric_u2, stric_t_range);
      emit(stric_c, striction_csv(striction_curve(scene, curve, stric_samples)), out);
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const MathError& e) {
    err << "math error: " << e.what() << "\n";
    return kMathError;
  }
  return kUsageError;
}

}  // namespace linecong::cli
