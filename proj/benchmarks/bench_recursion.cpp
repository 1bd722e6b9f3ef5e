#include <benchmark/benchmark.h>

#include "mmvp/adomian.hpp"
#include "mmvp/problems.hpp"

namespace {

void BM_ExponentialRecursion(benchmark::State& state) {
  auto problem = mmvp::traveling_wave_problem(1, -1);
  std::vector<mmvp::ExpPoly> seed{mmvp::decaying_seed(problem, mmvp::QuadCoeff(1, problem.s()), 1)};
  const auto k_max = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto series = mmvp::run_recursion(problem, seed, k_max);
    benchmark::DoNotOptimize(series.iterates.back());
  }
}
BENCHMARK(BM_ExponentialRecursion)->Arg(8)->Arg(20)->Arg(40);

void BM_PolynomialRecursion(benchmark::State& state) {
  auto problem = mmvp::shifted_polynomial_problem(1, 0, 0);
  std::vector<mmvp::ExpPoly> seed{mmvp::polynomial_seed(mmvp::make_rational(1224, 2500), mmvp::make_rational(-8748, 250000))};
  const auto k_max = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto series = mmvp::run_recursion(problem, seed, k_max);
    benchmark::DoNotOptimize(series.iterates.back());
  }
}
BENCHMARK(BM_PolynomialRecursion)->Arg(4)->Arg(8)->Arg(12);

// Both routes on the same partials; the definition route expands the full
// eps-polynomial, so it grows faster with k.
template <bool kDefinition>
void BM_Adomian(benchmark::State& state) {
  auto problem = mmvp::shifted_polynomial_problem(1, 0, 0);
  std::vector<mmvp::ExpPoly> seed{mmvp::polynomial_seed(0, 1)};
  const auto k_max = static_cast<unsigned>(state.range(0));
  auto series = mmvp::run_recursion(problem, seed, k_max);
  for (auto _ : state) {
    auto a = kDefinition ? mmvp::adomian_via_definition(problem.nonlinearity(), series.iterates, k_max)
                         : mmvp::adomian_via_convolution(problem.nonlinearity(), series.iterates, k_max);
    benchmark::DoNotOptimize(a.polys.back());
  }
}
BENCHMARK_TEMPLATE(BM_Adomian, true)->Arg(4)->Arg(8);
BENCHMARK_TEMPLATE(BM_Adomian, false)->Arg(4)->Arg(8);

}  // namespace
