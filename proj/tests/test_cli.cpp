#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "linecong");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliRun r;
  r.code = linecong::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST(Cli, FormsParabolicIsNormal) {
  const CliRun r = run({"forms", "parabolic", "--point", "0.5,0.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["is_normal"], true);
  EXPECT_EQ(j["classical"]["defined"], true);
  EXPECT_TRUE(j["omega"].contains("Delta"));
}

TEST(Cli, FormsSphereIsUmbilic) {
  const CliRun r = run({"forms", "--fixture", "sphere", "--point", "0.2,-0.4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["principal"]["umbilic"], true);
  EXPECT_LE(std::abs(j["discriminant"].get<double>()), 1e-12);
}

TEST(Cli, FormsOnTheSingularSetOfXi) {
  const CliRun r = run({"forms", "example43", "--point", "0.3,0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["omega"]["delta_zero"], true);
  EXPECT_EQ(j["classical"]["defined"], false);
}

TEST(Cli, VerifyExitStatusAndDeterminism) {
  const CliRun a = run({"verify", "example43", "--points", "50"});
  EXPECT_EQ(a.code, 0) << a.out;
  const CliRun s = run({"verify", "skew", "--points", "50"});
  EXPECT_EQ(s.code, 0);
  const auto j = nlohmann::json::parse(s.out);
  for (const auto& id : j["identities"]) {
    if (id["name"] == "factorization_theorem") EXPECT_EQ(id["status"], "n/a");
  }
  const CliRun x = run({"verify", "parabolic", "--seed", "42", "--points", "30"});
  const CliRun y = run({"verify", "parabolic", "--seed", "42", "--points", "30"});
  EXPECT_EQ(x.out, y.out);
  const CliRun z = run({"verify", "parabolic", "--seed", "43", "--points", "30"});
  EXPECT_NE(x.out, z.out);
}

TEST(Cli, VerifyFailureGivesExitOne) {
  // a tolerance far below round-off cannot be met
  const CliRun r = run({"verify", "sphere", "--points", "20", "--tol", "1e-300"});
  EXPECT_EQ(r.code, 1);
}

TEST(Cli, LinesFromAParabolicSeed) {
  const CliRun r = run({"lines", "parabolic", "--kind", "principal", "--seed", "0.3,0.09"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_GT(rows.size(), 100u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"curve_id", "kind", "branch", "t", "u1", "u2", "x", "y", "z"}));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double u1 = std::stod(rows[i][4]), u2 = std::stod(rows[i][5]);
    EXPECT_NEAR(u2, u1 * u1, 1e-8);
    EXPECT_NEAR(std::stod(rows[i][8]), u1 * u1 * u2 + u2 * u2, 1e-12);
  }
}

TEST(Cli, LinesGridSeeding) {
  const CliRun r = run({"lines", "sphere", "--kind", "developable", "--grid", "10", "--step", "0.05"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("from 100 seeds"), std::string::npos) << r.err;
  const CliRun p = run({"lines", "example43", "--kind", "principal", "--grid", "10", "--step", "0.01"});
  EXPECT_EQ(p.code, 0);
  EXPECT_NE(p.err.find("from 100 seeds"), std::string::npos) << p.err;
  const CliRun c = run({"lines", "example43", "--kind", "curvature", "--grid", "10", "--step", "0.01"});
  EXPECT_EQ(c.code, 0);
  // the two families are traced along the same direction fields
  EXPECT_EQ(csv_rows(p.out).size(), csv_rows(c.out).size());
}

TEST(Cli, LinesSkipsBadSeeds) {
  const CliRun r = run({"lines", "sphere", "--kind", "principal", "--seed", "0.1,0.1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("skipped seed 0.1,0.1"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("skipped 1 seeds"), std::string::npos) << r.err;
}

TEST(Cli, SingularSets) {
  const CliRun r = run({"singular", "example43", "--also-discriminant", "principal"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = csv_rows(r.out);
  std::set<std::string> families;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    families.insert(rows[i][0]);
    if (rows[i][0] == "lambda") EXPECT_NEAR(std::stod(rows[i][3]), 0.0, 1e-10);
  }
  EXPECT_TRUE(families.count("lambda"));
  EXPECT_TRUE(families.count("delta"));
  EXPECT_TRUE(families.count("discriminant_principal"));

  const CliRun s = run({"singular", "sphere"});
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(csv_rows(s.out).size(), 1u);
  EXPECT_NE(s.err.find("no singular points"), std::string::npos);
}

TEST(Cli, MeshWithStriction) {
  const CliRun r = run({"mesh", "helicoid", "--u1", "t", "--u2", "0", "--t-range=-0.5,0.5", "--t-samples", "6",
                     "--w-samples", "3", "--striction"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string tag;
  int v = 0, f = 0, l = 0;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    ls >> tag;
    if (tag == "v") ++v;
    if (tag == "f") ++f;
    if (tag == "l") ++l;
    if (tag == "v" && v > 18) {
      double x, y;
      ls >> x >> y;
      EXPECT_NEAR(std::hypot(x, y), 0.0, 1e-10);
    }
  }
  EXPECT_EQ(v, 18 + 6);
  EXPECT_EQ(f, 5 * 2);
  EXPECT_EQ(l, 1);
}

TEST(Cli, StrictionCsvAndOutFile) {
  const std::string path = ::testing::TempDir() + "linecong_striction.csv";
  const CliRun r = run({"striction", "sphere", "--u1", "t", "--u2", "t/2", "--t-range=-0.5,0.5", "--out", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  const auto rows = csv_rows(ss.str());
  ASSERT_EQ(rows.size(), 51u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    for (int k = 4; k < 7; ++k) EXPECT_NEAR(std::stod(rows[i][k]), 0.0, 1e-8);
  }
  std::remove(path.c_str());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"forms", "parabolic"}).code, 2);                                  // missing --point
  EXPECT_EQ(run({"forms", "parabolic", "--point", "2,0"}).code, 2);                // outside domain
  EXPECT_EQ(run({"forms", "parabolic", "--point", "a,b"}).code, 2);
  EXPECT_EQ(run({"forms", "parabolic", "--fixture", "sphere", "--point", "0,0"}).code, 2);
  EXPECT_EQ(run({"forms", "no/such/file.cong", "--point", "0,0"}).code, 2);
  EXPECT_EQ(run({"forms", "parabolic", "--point", "0,0", "--format", "csv"}).code, 2);
  EXPECT_EQ(run({"lines", "parabolic"}).code, 2);                                  // no seeds
  EXPECT_EQ(run({"lines", "parabolic", "--seed", "0,0", "--kind", "asymptotic"}).code, 2);
  EXPECT_EQ(run({"singular", "example41"}).code, 3);                               // no omega
  EXPECT_EQ(run({"striction", "sphere", "--u1", "3*t", "--u2", "0", "--t-range=-0.5,0.5"}).code, 3);
}

TEST(Cli, ParseErrorsReportPosition) {
  const std::string path = ::testing::TempDir() + "linecong_bad.cong";
  {
    std::ofstream f(path);
    f << "x = (u1, u2, 0)\nxi = (0, bar, 1)\n";
  }
  const CliRun r = run({"forms", "--scene", path, "--point", "0,0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2, column 10"), std::string::npos) << r.err;
  std::remove(path.c_str());
}
