#include <benchmark/benchmark.h>

#include "hcav/eigensolve.hpp"
#include "hcav/oracle.hpp"
#include "hcav/specfun.hpp"

using namespace hcav;

static void BM_Kummer(benchmark::State& st) {
  const double z = static_cast<double>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(specfun::kummer_m(-2.3, 2.0, z));
}
BENCHMARK(BM_Kummer)->Arg(1)->Arg(20)->Arg(200);

static void BM_Shoot(benchmark::State& st) {
  oracle::IntegratorConfig cfg;
  cfg.step_count = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(oracle::shoot_schrodinger(-0.3, 1, 10.0, cfg));
}
BENCHMARK(BM_Shoot)->Arg(1000)->Arg(20000);

static void BM_ShootDirac(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(oracle::shoot_dirac(0.5, -1, 0.5, 10.0));
}
BENCHMARK(BM_ShootDirac);

static void BM_ScanLevels(benchmark::State& st) {
  CavityProblem p(UnitSystem::schrodinger(), Channel::schrodinger(0), BoundaryCondition::dirichlet(), 40.0);
  for (auto _ : st) benchmark::DoNotOptimize(eigen::scan_levels(p, {-0.6, 2.0}, 2));
}
BENCHMARK(BM_ScanLevels)->Unit(benchmark::kMillisecond);

static void BM_FindLevelRobin(benchmark::State& st) {
  CavityProblem p(UnitSystem::schrodinger(), Channel::schrodinger(2), BoundaryCondition::robin(1.0), 2.0);
  for (auto _ : st) benchmark::DoNotOptimize(eigen::find_level(p, 1, {-200.0, 2000.0}));
}
BENCHMARK(BM_FindLevelRobin)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
