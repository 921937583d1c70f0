// Microbenchmarks for the hot construction paths: exact operator identity,
// generator assembly, module construction, group-algebra convolution, and
// the end-to-end numeric solve.
#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "gaudin/bethe_config.hpp"
#include "gaudin/bethe_generators.hpp"
#include "gaudin/bethe_operators.hpp"
#include "gaudin/group_algebra.hpp"
#include "gaudin/irrep.hpp"
#include "gaudin/partition.hpp"
#include "gaudin/perm.hpp"
#include "gaudin/rat.hpp"
#include "gaudin/solve.hpp"

namespace {

std::vector<gaudin::Rat> sample_points(size_t n) {
  // Small distinct rationals; values chosen to exercise mixed magnitudes.
  static const long nums[] = {1, -3, 5, 2, -7, 4, 9, -1};
  static const long dens[] = {1, 2, 1, 3, 2, 1, 4, 1};
  std::vector<gaudin::Rat> z;
  for (size_t i = 0; i < n; ++i) {
    gaudin::Rat c(nums[i % 8], dens[i % 8]);
    c.canonicalize();
    z.push_back(c);
  }
  return z;
}

void BM_IdentityDefect(benchmark::State& state) {
  const size_t n = static_cast<size_t>(state.range(0));
  gaudin::BetheConfig cfg = gaudin::BetheConfig::from_exact(sample_points(n), 256);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gaudin::identity_defect(cfg).is_zero());
  }
}
BENCHMARK(BM_IdentityDefect)->Arg(2)->Arg(3);

void BM_GeneratorAssembly(benchmark::State& state) {
  const size_t n = static_cast<size_t>(state.range(0));
  gaudin::BetheConfig cfg = gaudin::BetheConfig::from_exact(sample_points(n), 256);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gaudin::bethe_generator<gaudin::Rat>(cfg, 1, 1, gaudin::Sign::minus));
  }
}
BENCHMARK(BM_GeneratorAssembly)->Arg(3)->Arg(4)->Arg(5);

void BM_IrrepModelBuild(benchmark::State& state) {
  const std::vector<gaudin::Partition> shapes{
      gaudin::Partition({2, 1}), gaudin::Partition({2, 2}), gaudin::Partition({3, 2})};
  const gaudin::Partition& shape = shapes[static_cast<size_t>(state.range(0))];
  for (auto _ : state) {
    gaudin::IrrepModel model(shape);
    benchmark::DoNotOptimize(model.dim());
  }
}
BENCHMARK(BM_IrrepModelBuild)->Arg(0)->Arg(1)->Arg(2);

void BM_GroupConvolution(benchmark::State& state) {
  const size_t n = static_cast<size_t>(state.range(0));
  const auto a =
      gaudin::set_symmetrizer<gaudin::Rat>(n, gaudin::full_mask(n), gaudin::Sign::minus);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * a);
  }
}
BENCHMARK(BM_GroupConvolution)->Arg(4)->Arg(5);

void BM_SolveInverseWronskian(benchmark::State& state) {
  const size_t n = static_cast<size_t>(state.range(0));
  gaudin::BetheConfig cfg = gaudin::BetheConfig::from_exact(sample_points(n), 256);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gaudin::solve_inverse_wronskian(cfg).total_multiplicity());
  }
}
BENCHMARK(BM_SolveInverseWronskian)->Arg(2)->Arg(3);

}  // namespace
