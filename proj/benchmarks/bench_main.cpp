#include <benchmark/benchmark.h>

#include <random>

#include "symprobe/metrics.hpp"
#include "symprobe/o3.hpp"
#include "symprobe/purify.hpp"
#include "symprobe/quadrature.hpp"
#include "symprobe/targets.hpp"
#include "symprobe/toy.hpp"

using namespace symprobe;

namespace {

const O3Grid& grid_for(int band) {
  static std::map<int, O3Grid> cache;
  auto it = cache.find(band);
  if (it == cache.end()) it = cache.emplace(band, build_o3_grid(band)).first;
  return it->second;
}

DecoratedPointCloud sample_cloud() {
  ConformerSpec spec;
  spec.count = 1;
  spec.seed = 3;
  return rattled_conformers(spec)[0].cloud;
}

}  // namespace

static void BM_WignerD(benchmark::State& state) {
  const IrrepLabel label(int(state.range(0)), -1);
  std::mt19937_64 rng(1);
  const auto g = random_group_element(rng, true);
  for (auto _ : state) benchmark::DoNotOptimize(wigner_d(label, g));
}
BENCHMARK(BM_WignerD)->DenseRange(1, 8, 1);

static void BM_WignerDBlocks(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto g = random_group_element(rng, false);
  for (auto _ : state) benchmark::DoNotOptimize(wigner_d_blocks(int(state.range(0)), g.rotation()));
}
BENCHMARK(BM_WignerDBlocks)->Arg(2)->Arg(4)->Arg(8);

static void BM_BuildGrid(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_o3_grid(int(state.range(0))));
  state.counters["nodes"] = double(build_o3_grid(int(state.range(0))).size());
}
BENCHMARK(BM_BuildGrid)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_SampleOrbit(benchmark::State& state) {
  const auto& grid = grid_for(int(state.range(0)));
  auto f = gyration_probe();
  const auto x = sample_cloud();
  for (auto _ : state) benchmark::DoNotOptimize(sample_orbit(f, "y", x, grid));
}
BENCHMARK(BM_SampleOrbit)->Arg(2)->Arg(4)->Unit(benchmark::kMicrosecond);

static void BM_CharacterProjection(benchmark::State& state) {
  const int band = int(state.range(0));
  const auto& grid = grid_for(band);
  auto f = oracle_probe(IrrepLabel(2, -1));
  const auto samples = sample_orbit(f, "y", sample_cloud(), grid);
  for (auto _ : state) benchmark::DoNotOptimize(character_projection(samples, grid, band));
}
BENCHMARK(BM_CharacterProjection)->Arg(2)->Arg(4)->Unit(benchmark::kMicrosecond);

static void BM_EquivarianceError(benchmark::State& state) {
  const auto& grid = grid_for(4);
  auto f = oracle_probe(IrrepLabel(2, -1));
  const auto samples = sample_orbit(f, "y", sample_cloud(), grid);
  for (auto _ : state) benchmark::DoNotOptimize(equivariance_error(samples, grid, IrrepLabel(2, -1)));
}
BENCHMARK(BM_EquivarianceError)->Unit(benchmark::kMicrosecond);

static ToyNet bench_net(int width) {
  ToyNetConfig cfg;
  cfg.hidden_width = width;
  cfg.depth = 3;
  cfg.species = {1, 6, 9, 17, 35};
  cfg.seed = 5;
  return ToyNet(cfg);
}

static void BM_ToyForward(benchmark::State& state) {
  const auto net = bench_net(int(state.range(0)));
  const auto x = sample_cloud();
  for (auto _ : state) benchmark::DoNotOptimize(net.forward(x, false));
}
BENCHMARK(BM_ToyForward)->Arg(8)->Arg(32)->Unit(benchmark::kMicrosecond);

static void BM_ToyLossAndGradient(benchmark::State& state) {
  const auto net = bench_net(int(state.range(0)));
  const auto x = sample_cloud();
  const std::map<std::string, Eigen::VectorXd> targets{{"y", Eigen::VectorXd::Constant(1, 1.0)}};
  Eigen::VectorXd grad = Eigen::VectorXd::Zero(net.parameters().size());
  for (auto _ : state) benchmark::DoNotOptimize(net.loss_and_gradient(x, targets, &grad));
}
BENCHMARK(BM_ToyLossAndGradient)->Arg(8)->Arg(32)->Unit(benchmark::kMicrosecond);

static void BM_SolveReadout(benchmark::State& state) {
  ContaminatedFixtureSpec spec;
  spec.count = 40;
  const auto fx = contaminated_fixture(spec);
  const auto& grid = grid_for(2);
  auto probe = fx.features;
  const auto samples = collect_samples(probe, "llf", fx.clouds, fx.targets, grid);
  ReadoutAccumulator acc(grid, int(samples[0].features.cols()), fx.blocking);
  for (const auto& s : samples) acc.add(s);
  for (auto _ : state) benchmark::DoNotOptimize(solve_readout(acc, 10.0));
}
BENCHMARK(BM_SolveReadout)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
