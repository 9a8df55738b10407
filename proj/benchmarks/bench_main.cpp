#include <benchmark/benchmark.h>

#include <random>

#include "kobgeo/families.hpp"
#include "kobgeo/verifier.hpp"

namespace {

using namespace kobgeo;

void BM_PoincareDistance(benchmark::State& state) {
  const Cpx z(0.3, -0.4), w(-0.7, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(poincare_distance(z, w));
}
BENCHMARK(BM_PoincareDistance);

void BM_BallDistance(benchmark::State& state) {
  const CVec z = make_cvec({Cpx(0.3, -0.4), Cpx(0.1, 0.2)});
  const CVec w = make_cvec({Cpx(-0.5, 0.2), Cpx(0.0, -0.3)});
  for (auto _ : state) benchmark::DoNotOptimize(kobayashi_ball_distance(z, w));
}
BENCHMARK(BM_BallDistance);

HomPoly cubic(int dim) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  std::vector<PolyTerm> terms;
  for (int out = 0; out < dim; ++out) {
    for (int i = 0; i < dim; ++i) {
      for (int j = i; j < dim; ++j) {
        for (int k = j; k < dim; ++k) {
          std::vector<int> exps(dim, 0);
          ++exps[i];
          ++exps[j];
          ++exps[k];
          terms.push_back({out, exps, Cpx(g(rng), g(rng))});
        }
      }
    }
  }
  return HomPoly(dim, dim, 3, terms);
}

void BM_HomPolyEval(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const HomPoly p = cubic(dim);
  const CVec z = CVec::Constant(dim, Cpx(0.2, 0.1));
  for (auto _ : state) benchmark::DoNotOptimize(eval_hom_poly(p, z));
  state.SetLabel(std::to_string(p.terms().size()) + " terms");
}
BENCHMARK(BM_HomPolyEval)->Arg(2)->Arg(4)->Arg(8);

void BM_VerifyDiscPower(benchmark::State& state) {
  const HoloMap f = gp_disc_interior(Cpx(0.2, 0.1), Cpx(-0.3, 0.4), std::polar(0.9, 0.3), 3);
  SamplingConfig cfg;
  cfg.threads = static_cast<int>(state.range(0));
  const FamilySpec src = FamilySpec::disc(Cpx(0.2, 0.1)), dst = FamilySpec::disc(Cpx(-0.3, 0.4));
  for (auto _ : state) benchmark::DoNotOptimize(verify_preservation(f, src, dst, cfg).max_deviation);
}
BENCHMARK(BM_VerifyDiscPower)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_VerifyBallBoundary(benchmark::State& state) {
  const CVec e1 = make_cvec({1.0, 0.0});
  const HoloMap f = gp_ball_boundary(e1, e1, 1.5, PolyMap(1, 1, {{0, {0}, Cpx(0.1, 0.5)}}),
                                     PolyMap::identity(1).scaled(0.8));
  const FamilySpec fam = FamilySpec::ball(e1);
  for (auto _ : state) benchmark::DoNotOptimize(verify_preservation(f, fam, fam).max_deviation);
}
BENCHMARK(BM_VerifyBallBoundary)->Unit(benchmark::kMillisecond);

void BM_SiegelConstraintCheck(benchmark::State& state) {
  const PolyMap b(1, 1, {{0, {0}, Cpx(0.0, 0.5)}, {0, {1}, Cpx(0.2, 0.1)}});
  const PolyMap fp = PolyMap::identity(1).scaled(0.8);
  for (auto _ : state) benchmark::DoNotOptimize(check_siegel_constraint(1.5, b, fp).ok);
}
BENCHMARK(BM_SiegelConstraintCheck)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
