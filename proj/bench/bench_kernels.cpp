// Compares the OpenMP kernels against their serial reference
// implementations on representative workloads.

#include <benchmark/benchmark.h>

#include "asymbeta/realized_beta.hpp"
#include "asymbeta/rng.hpp"
#include "asymbeta/synth.hpp"
#include "asymbeta/tree_models.hpp"

using namespace asymbeta;

namespace {

std::vector<BetaKind> all_kinds() {
  return {kAllBetaKinds.begin(), kAllBetaKinds.end()};
}

const SynthData& panel_data() {
  static const SynthData data = [] {
    DgpConfig cfg;
    cfg.n_assets = 300;
    cfg.n_months = 60;
    cfg.seed = 1;
    return generate(cfg);
  }();
  return data;
}

const TrainingSet& forest_data() {
  static const TrainingSet ts = [] {
    Rng rng(2);
    TrainingSet t;
    t.X.resize(4000, 8);
    t.y.resize(4000);
    for (int i = 0; i < 4000; ++i) {
      for (int j = 0; j < 8; ++j) t.X(i, j) = rng.normal();
      t.y(i) = t.X(i, 0) - 0.4 * t.X(i, 3) + 0.2 * rng.normal();
    }
    return t;
  }();
  return ts;
}

void bm_beta_panel_serial(benchmark::State& state) {
  const ReturnPanel& rp = panel_data().returns;
  for (auto _ : state) {
    auto panel = compute_beta_panel_serial(rp, all_kinds(), {1, 3, 6, 12});
    benchmark::DoNotOptimize(panel);
  }
}

void bm_beta_panel_openmp(benchmark::State& state) {
  const ReturnPanel& rp = panel_data().returns;
  for (auto _ : state) {
    auto panel = compute_beta_panel(rp, all_kinds(), {1, 3, 6, 12});
    benchmark::DoNotOptimize(panel);
  }
}

void bm_rforest_serial(benchmark::State& state) {
  const TrainingSet& ts = forest_data();
  ForestOptions opt;
  opt.n_trees = 50;
  opt.depth = 10;
  opt.seed = 3;
  for (auto _ : state) {
    auto model = fit_rforest_serial(ts, opt);
    benchmark::DoNotOptimize(model);
  }
}

void bm_rforest_openmp(benchmark::State& state) {
  const TrainingSet& ts = forest_data();
  ForestOptions opt;
  opt.n_trees = 50;
  opt.depth = 10;
  opt.seed = 3;
  for (auto _ : state) {
    auto model = fit_rforest(ts, opt);
    benchmark::DoNotOptimize(model);
  }
}

}  // namespace

BENCHMARK(bm_beta_panel_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_beta_panel_openmp)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_rforest_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_rforest_openmp)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
