#include <benchmark/benchmark.h>

#include "mmvp/closed_form.hpp"
#include "mmvp/elliptic.hpp"
#include "mmvp/precision.hpp"
#include "mmvp/wavefield.hpp"

namespace {

template <class T>
void BM_Jacobi(benchmark::State& state) {
  T u = 0.37, k = 0.8;
  for (auto _ : state) {
    auto v = mmvp::jacobi_sn_cn_dn<T>(u, k);
    benchmark::DoNotOptimize(v);
    u += T(1e-3);
  }
}
BENCHMARK_TEMPLATE(BM_Jacobi, double);
BENCHMARK_TEMPLATE(BM_Jacobi, mmvp::HighReal);

void BM_ClosedFormJet(benchmark::State& state) {
  const mmvp::ClosedForm forms[] = {mmvp::ClosedForm::exp_rational(1, -1, 1), mmvp::ClosedForm::sn2(1, 0, 0.3, 0.6)};
  const auto& cf = forms[state.range(0)];
  double xi = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mmvp::evaluate_jet(cf, xi));
    xi += 1e-4;
  }
}
BENCHMARK(BM_ClosedFormJet)->Arg(0)->Arg(1);

void BM_FieldSample(benchmark::State& state) {
  auto cfg = mmvp::figure_preset("fig3a");
  for (auto _ : state) {
    auto grid = mmvp::field_sample(cfg);
    benchmark::DoNotOptimize(grid.u.data());
  }
  state.SetItemsProcessed(state.iterations() * cfg.grid.axis_points * cfg.grid.t_points);
}
BENCHMARK(BM_FieldSample)->Unit(benchmark::kMillisecond);

void BM_PdeResidual(benchmark::State& state) {
  auto cfg = mmvp::figure_preset("fig2a");
  for (auto _ : state) benchmark::DoNotOptimize(mmvp::pde_residual(cfg, {1.3, 1.0, -2.1}, 5e-3));
}
BENCHMARK(BM_PdeResidual)->Unit(benchmark::kMicrosecond);

}  // namespace
