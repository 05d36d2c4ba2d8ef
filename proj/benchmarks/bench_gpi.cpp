#include <random>

#include <benchmark/benchmark.h>

#include "gpi/constructions.hpp"
#include "gpi/exponent.hpp"
#include "gpi/pi.hpp"

using namespace gpi;

namespace {

Mat random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(-9, 9);
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Scalar(d(rng));
  return m;
}

void BM_RankExact(benchmark::State &st) {
  Mat m = random_matrix(static_cast<std::size_t>(st.range(0)), 1);
  for (auto _ : st) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankExact)->Arg(8)->Arg(16)->Arg(32);

void BM_RankModular(benchmark::State &st) {
  Mat m = random_matrix(static_cast<std::size_t>(st.range(0)), 1);
  RankOptions opt;
  opt.accelerate = true;
  for (auto _ : st) benchmark::DoNotOptimize(rank(m, opt));
}
BENCHMARK(BM_RankModular)->Arg(8)->Arg(16)->Arg(32);

void BM_Radical(benchmark::State &st) {
  auto a = m2_family(static_cast<std::size_t>(st.range(0)), {static_cast<std::size_t>(st.range(0))}, 1);
  for (auto _ : st) benchmark::DoNotOptimize(jacobson_radical(a).dim());
}
BENCHMARK(BM_Radical)->Arg(1)->Arg(3)->Arg(5);

void BM_GradedCodim(benchmark::State &st) {
  auto a = fixture("ut2-z2");
  CodimOptions opt;
  opt.threads = 1;
  for (auto _ : st) benchmark::DoNotOptimize(graded_codimension(a, static_cast<std::size_t>(st.range(0)), opt));
}
BENCHMARK(BM_GradedCodim)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_ZetaRoot(benchmark::State &st) {
  std::vector<int> g(static_cast<std::size_t>(st.range(0)), 0);
  g.front() = -1;
  g.back() = 1;
  g[g.size() - 2] = 1;
  for (auto _ : st) benchmark::DoNotOptimize(zeta_root(g).lo);
}
BENCHMARK(BM_ZetaRoot)->Arg(6)->Arg(24);

void BM_M2Exponent(benchmark::State &st) {
  auto a = m2_family(3, {2, 1}, 0);
  for (auto _ : st) benchmark::DoNotOptimize(m2_exponent(a).d);
}
BENCHMARK(BM_M2Exponent)->Unit(benchmark::kMillisecond);

void BM_HookDimensions(benchmark::State &st) {
  for (auto _ : st) {
    Integer s = 0;
    for (const auto &l : partitions(static_cast<std::size_t>(st.range(0)))) s += hook_dimension(l);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_HookDimensions)->Arg(10)->Arg(20);

} // namespace

BENCHMARK_MAIN();
