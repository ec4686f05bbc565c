#include <benchmark/benchmark.h>

#include <random>

#include "fermat/bsigma.hpp"
#include "fermat/cohomology.hpp"
#include "fermat/cyclotomic.hpp"
#include "fermat/homology.hpp"

using namespace fermat;

namespace {

GroupRingElement random_unit(std::uint32_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> coeff(0, n - 1);
  while (true) {
    auto a = GroupRingElement::zero(n, 1);
    for (std::size_t i = 0; i < a.size(); ++i) a.set_flat(i, coeff(rng));
    if (is_unit(a)) return a;
  }
}

}  // namespace

static void GroupRingMultiply(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  std::mt19937_64 rng(1);
  const auto a = random_unit(n, rng), b = random_unit(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(GroupRingMultiply)->DenseRange(3, 13, 2);

static void GroupRingInvert(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  std::mt19937_64 rng(2);
  const auto u = random_unit(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(invert(u));
}
BENCHMARK(GroupRingInvert)->Arg(3)->Arg(5)->Arg(6)->Arg(7)->Arg(9)->Arg(12);

static void GammaOracle(benchmark::State& state) {
  for (auto _ : state)
    for (int c1 = 0; c1 < 3; ++c1)
      for (int c2 = 0; c2 < 3; ++c2) benchmark::DoNotOptimize(gamma_oracle_p3(c1, c2));
}
BENCHMARK(GammaOracle);

static void HomologyRankComputation(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(homology_ranks(n));
}
BENCHMARK(HomologyRankComputation)->DenseRange(3, 12, 3);

static void CohomologyOfModule(benchmark::State& state) {
  const char* names[] = {"lambda1", "h1u", "h1x", "wedge"};
  const auto m = named_module(names[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(h_groups(m));
  state.SetLabel(names[state.range(0)]);
}
BENCHMARK(CohomologyOfModule)->DenseRange(0, 3);

static void CyclotomicIdentities(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_cyclotomic_identities(p));
}
BENCHMARK(CyclotomicIdentities)->Arg(5)->Arg(11)->Arg(23);

BENCHMARK_MAIN();
