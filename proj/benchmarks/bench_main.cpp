#include <benchmark/benchmark.h>

#include <cmath>

#include "linecong/bde.hpp"
#include "linecong/contour.hpp"
#include "linecong/fixtures.hpp"
#include "linecong/kummer.hpp"
#include "linecong/parser.hpp"

using namespace linecong;

static void BM_ScalarJet(benchmark::State& state) {
  const ScalarExpr e = parse_scalar("sin(u1)*sqrt(u2^2 + 1) - u1*u2^3/(1 + u1^2)");
  Point2 q(0.3, -0.2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_jet(e, q));
    q[0] += 1e-9;
  }
}
BENCHMARK(BM_ScalarJet);

static void BM_ParseExample41(benchmark::State& state) {
  const std::string& src = fixture_source("example41");
  for (auto _ : state) benchmark::DoNotOptimize(parse_scene(src));
}
BENCHMARK(BM_ParseExample41);

static void BM_OmegaForms(benchmark::State& state) {
  const CongruenceScene s = fixture("example43");
  const Point2 q(0.3, 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(omega_forms(s, q));
}
BENCHMARK(BM_OmegaForms);

static void BM_PrincipalBde(benchmark::State& state) {
  const CongruenceScene s = fixture("parabolic");
  const Point2 q(0.3, 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(principal_bde(s, q));
}
BENCHMARK(BM_PrincipalBde);

static void BM_TracePrincipal(benchmark::State& state) {
  const CongruenceScene s = fixture("example43");
  TraceOptions opt;
  opt.step = 1e-3;
  opt.max_steps = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(trace(s, BdeKind::principal, Point2(0.1, 0.5), 1, opt));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TracePrincipal)->Arg(200)->Arg(1000);

static void BM_ZeroContours(benchmark::State& state) {
  const DomainRect d;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        zero_contours([](const Point2& p) { return std::sin(4 * p[0]) - p[1]; }, d, n));
  }
}
BENCHMARK(BM_ZeroContours)->Arg(64)->Arg(256);

static void BM_SingularSetExample43(benchmark::State& state) {
  const CongruenceScene s = fixture("example43");
  for (auto _ : state) benchmark::DoNotOptimize(singular_set(s.x, *s.omega, s.domain, 64));
}
BENCHMARK(BM_SingularSetExample43);

BENCHMARK_MAIN();
