// Serial reference kernels against their OpenMP counterparts, plus one full
// CN step per policy. Set OMP_NUM_THREADS to compare thread counts.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "solsta/gpe.hpp"
#include "solsta/kernels.hpp"

using namespace solsta;

namespace {

std::vector<cplx> field(std::size_t n) {
  std::mt19937_64 rng(42);
  std::normal_distribution<double> d;
  std::vector<cplx> v(n);
  for (auto& z : v) z = {d(rng), d(rng)};
  return v;
}

template <ExecPolicy P>
void BM_density(benchmark::State& st) {
  const auto psi = field(st.range(0));
  std::vector<double> rho(psi.size());
  for (auto _ : st) {
    kernels::density(P, psi, rho);
    benchmark::DoNotOptimize(rho.data());
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

template <ExecPolicy P>
void BM_cn_explicit(benchmark::State& st) {
  const auto psi = field(st.range(0));
  const std::vector<double> h(psi.size(), 1.5);
  std::vector<cplx> out(psi.size());
  for (auto _ : st) {
    kernels::cn_explicit(P, psi, h, -0.5, 1e-4, out);
    benchmark::DoNotOptimize(out.data());
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

template <ExecPolicy P>
void BM_overlap(benchmark::State& st) {
  const auto a = field(st.range(0));
  const auto b = field(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::trapezoid_overlap(P, a, b, 0.01));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

template <ExecPolicy P>
void BM_moments(benchmark::State& st) {
  const auto a = field(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::moments(P, a, -40.0, 0.01));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

template <ExecPolicy P>
void BM_cn_step(benchmark::State& st) {
  const Grid1D g = build_grid(40.0, static_cast<std::size_t>(st.range(0)), 1e-4);
  auto psi = sech_state(0.3, 0.0, 1.0, g);
  CrankNicolson cn(g, PhysicalConfig{}, P);
  double t = 0.0;
  for (auto _ : st) {
    cn.step(psi, 3.0, 1e-4, t);
    t += 1e-4;
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

}  // namespace

#define SOLSTA_BENCH_PAIR(fn)                                                        \
  BENCHMARK(fn<ExecPolicy::serial>)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);    \
  BENCHMARK(fn<ExecPolicy::parallel>)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)

SOLSTA_BENCH_PAIR(BM_density);
SOLSTA_BENCH_PAIR(BM_cn_explicit);
SOLSTA_BENCH_PAIR(BM_overlap);
SOLSTA_BENCH_PAIR(BM_moments);
SOLSTA_BENCH_PAIR(BM_cn_step);

BENCHMARK_MAIN();
