#include <benchmark/benchmark.h>

#include "qfock/qhermite.hpp"
#include "qfock/quadrature.hpp"
#include "qfock/spaces.hpp"
#include "qfock/suites.hpp"
#include "qfock/transforms.hpp"

namespace {

const qfock::Quaternion kPoint{0.7, -0.4, 1.1, 0.3};

void BM_QHermiteDirect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qfock::qhermite_direct(n, n, kPoint));
}
BENCHMARK(BM_QHermiteDirect)->Arg(4)->Arg(12)->Arg(32);

void BM_QHermitePolar(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qfock::qhermite_polar(n, n, kPoint));
}
BENCHMARK(BM_QHermitePolar)->Arg(4)->Arg(12)->Arg(32);

void BM_QHermiteRecurrence(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qfock::qhermite_recurrence(n, n, kPoint));
}
BENCHMARK(BM_QHermiteRecurrence)->Arg(4)->Arg(12)->Arg(32);

void BM_QHermiteTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qfock::qhermite_table(n, n, {0.7, 1.2}));
}
BENCHMARK(BM_QHermiteTable)->Arg(8)->Arg(24);

void BM_GaussHermiteRule(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qfock::gauss_hermite(n));
}
BENCHMARK(BM_GaussHermiteRule)->Arg(20)->Arg(80)->Arg(128);

void BM_GaussLaguerreRule(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qfock::gauss_laguerre(n, 0.0));
}
BENCHMARK(BM_GaussLaguerreRule)->Arg(40)->Arg(128);

void BM_KernelClosed(benchmark::State& state) {
  const qfock::Quaternion qp{-0.2, 0.5, 0.0, 0.9};
  for (auto _ : state) benchmark::DoNotOptimize(qfock::kernel_closed(3, kPoint, qp));
}
BENCHMARK(BM_KernelClosed);

void BM_KernelSeries(benchmark::State& state) {
  const qfock::Quaternion qp{-0.2, 0.5, 0.0, 0.9};
  for (auto _ : state) benchmark::DoNotOptimize(qfock::kernel_series(3, kPoint, qp, 60));
}
BENCHMARK(BM_KernelSeries);

void BM_Projection(benchmark::State& state) {
  const qfock::SliceGaussianRule rule = qfock::slice_gaussian_rule();
  const auto f = [](const qfock::Quaternion& q) { return qfock::qhermite(3, 2, q); };
  for (auto _ : state) benchmark::DoNotOptimize(qfock::project(2, f, kPoint, rule));
}
BENCHMARK(BM_Projection)->Unit(benchmark::kMicrosecond);

void BM_BargmannTransform(benchmark::State& state) {
  const auto phi = qfock::RealLineFunction::hermite(4);
  for (auto _ : state) benchmark::DoNotOptimize(qfock::bargmann_transform(3, phi, kPoint));
}
BENCHMARK(BM_BargmannTransform)->Unit(benchmark::kMicrosecond);

void BM_FourierWigner(benchmark::State& state) {
  const auto f = qfock::RealLineFunction::hermite(3), g = qfock::RealLineFunction::hermite(5);
  for (auto _ : state) benchmark::DoNotOptimize(qfock::fourier_wigner(f, g, qfock::default_unit(), 0.4, -0.6));
}
BENCHMARK(BM_FourierWigner)->Unit(benchmark::kMicrosecond);

void BM_OrthogonalitySuite(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qfock::orthogonality_suite());
}
BENCHMARK(BM_OrthogonalitySuite)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
