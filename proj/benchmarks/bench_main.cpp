#include <benchmark/benchmark.h>

#include <random>

#include <hcm/critical.hpp>
#include <hcm/densities.hpp>
#include <hcm/measure.hpp>
#include <hcm/oracle.hpp>
#include <hcm/thue_morse.hpp>

using namespace hcm;

namespace {

Params table_params(int alphabet) {
  return Params(alphabet, Rational(1, alphabet * alphabet));
}

void bm_lambda_prefix(benchmark::State& state) {
  auto terms = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tm::lambda_prefix(2, terms));
}
BENCHMARK(bm_lambda_prefix)->Arg(1 << 10)->Arg(1 << 16);

void bm_cdf_deep(benchmark::State& state) {
  Params p = table_params(3);
  Rational t(355, 1130);
  Rational tol(1, ipow(Int(10), state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(measure::cdf(t, p, tol));
}
BENCHMARK(bm_cdf_deep)->Arg(12)->Arg(30);

void bm_ball_cover(benchmark::State& state) {
  Params p = table_params(2);
  Rational x(4, 5);
  Rational r(1, 1000);
  int depth = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::ball_cover(x, r, depth, p));
}
BENCHMARK(bm_ball_cover)->Arg(16)->Arg(24);

void bm_density_report(benchmark::State& state) {
  Params p = table_params(2);
  std::mt19937_64 rng(42);
  std::vector<int> period;
  for (int i = 0; i < state.range(0); ++i) period.push_back(random_digit(rng, 2));
  Point x(Coding::periodic(Word(period)), p);
  for (auto _ : state) benchmark::DoNotOptimize(densities::report(x, p));
}
BENCHMARK(bm_density_report)->Arg(8)->Arg(64);

void bm_critical_pair(benchmark::State& state) {
  Params p = table_params(static_cast<int>(state.range(0)));
  Rational tol(1, ipow(Int(10), 12));
  for (auto _ : state) {
    benchmark::DoNotOptimize(critical::a_critical(p, tol));
    benchmark::DoNotOptimize(critical::b_critical(p, tol));
  }
}
BENCHMARK(bm_critical_pair)->Arg(2)->Arg(8);

void bm_lower_density_scan(benchmark::State& state) {
  Params p = table_params(2);
  Point x(Coding::periodic(Word::parse("10", 2)), p);
  for (auto _ : state)
    benchmark::DoNotOptimize(oracle::lower_density_scan(x, p, 4, 8, 8));
}
BENCHMARK(bm_lower_density_scan);

} // namespace

int main(int argc, char** argv) {
  Real::default_precision(bits_to_digits10(kDefaultPrecisionBits));
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  return 0;
}
