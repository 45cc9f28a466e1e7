#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include <umbral/star.hpp>
#include <umbral/star_float.hpp>

namespace {

std::vector<umbral::approx::Real> random_real(std::size_t length) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<umbral::approx::Real> z(length);
  for (auto& v : z) v = dist(rng);
  return z;
}

umbral::LatticeSeq random_exact(std::size_t length) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-9, 9);
  std::vector<umbral::Rational> z(length);
  for (auto& v : z) {
    v = umbral::Rational(num(rng), 4);
    v.canonicalize();
  }
  return umbral::LatticeSeq(std::move(z));
}

void BM_FloatConvolution(benchmark::State& state) {
  const auto z = random_real(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(umbral::approx::star_power_convolution(z, 3));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FloatConvolution)->RangeMultiplier(2)->Range(32, 2048)->Complexity();

void BM_FloatKernel(benchmark::State& state) {
  const auto z = random_real(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(umbral::approx::star_power_kernel(z, 3));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FloatKernel)->RangeMultiplier(2)->Range(32, 256)->Complexity();

void BM_ExactConvolution(benchmark::State& state) {
  const auto z = random_exact(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(umbral::star_power(z, 3, umbral::StarPath::convolution));
}
BENCHMARK(BM_ExactConvolution)->RangeMultiplier(2)->Range(8, 64);

void BM_ExactKernel(benchmark::State& state) {
  const auto z = random_exact(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(umbral::star_power(z, 3, umbral::StarPath::kernel));
}
BENCHMARK(BM_ExactKernel)->RangeMultiplier(2)->Range(8, 32);

}  // namespace
BENCHMARK_MAIN();
