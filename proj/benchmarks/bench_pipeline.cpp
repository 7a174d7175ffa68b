// Microbenchmarks for the hot paths: adaptive quadrature, thermal
// coefficients across temperature regimes, state assembly plus spectral
// analysis, and the full per-temperature sweep record. The spinor-integral
// oracle is included to keep its cost visible (it is a validation route,
// not a production path).
//
// Copyright (c) 2026 fermi-parity contributors
// SPDX-License-Identifier: MIT

#include <benchmark/benchmark.h>

#include <fermipar/numerics.hpp>
#include <fermipar/qinfo.hpp>
#include <fermipar/sweep.hpp>
#include <fermipar/thermal.hpp>

#include <cmath>

namespace {

constexpr double kPi = 3.14159265358979323846;

void BM_integrate_pdf_norm(benchmark::State& state) {
  for (auto _ : state) {
    auto res = fermipar::numerics::integrate_semi_infinite(
        fermipar::thermal::fermi_dirac_pdf, 1e-13);
    benchmark::DoNotOptimize(res.value);
  }
}
BENCHMARK(BM_integrate_pdf_norm);

void BM_coefficients(benchmark::State& state) {
  const double t_m = std::pow(10.0, static_cast<double>(state.range(0)));
  for (auto _ : state) {
    auto tc = fermipar::thermal::coefficients(1, t_m);
    benchmark::DoNotOptimize(tc.m_pm);
  }
}
BENCHMARK(BM_coefficients)->Arg(-6)->Arg(-2)->Arg(0)->Arg(2)->Arg(5);

void BM_assemble_and_spectra(benchmark::State& state) {
  const auto tc = fermipar::thermal::coefficients(1, 1.0);
  const fermipar::qinfo::ModelParams params{1, 1.0, kPi / 4, 0.0};
  for (auto _ : state) {
    const auto d = fermipar::qinfo::assemble_rho12(params, tc);
    const auto eigs = fermipar::qinfo::spectral_data(d.rho);
    benchmark::DoNotOptimize(eigs.entropy_nats);
  }
}
BENCHMARK(BM_assemble_and_spectra);

void BM_mutual_information(benchmark::State& state) {
  const auto tc = fermipar::thermal::coefficients(1, 1.0);
  const fermipar::qinfo::ModelParams params{1, 1.0, kPi / 4, 0.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(fermipar::qinfo::mutual_information(params, tc));
  }
}
BENCHMARK(BM_mutual_information);

void BM_evaluate_point(benchmark::State& state) {
  for (auto _ : state) {
    auto rec = fermipar::sweep::evaluate_point(1, 1.0, kPi / 4, 0.0);
    benchmark::DoNotOptimize(rec.mutual_info);
  }
}
BENCHMARK(BM_evaluate_point);

void BM_spinor_integral_oracle(benchmark::State& state) {
  const fermipar::qinfo::ModelParams params{1, 1.0, kPi / 4, 0.0};
  for (auto _ : state) {
    auto rho = fermipar::qinfo::rho12_from_spinor_integral(params);
    benchmark::DoNotOptimize(rho(0, 0));
  }
}
BENCHMARK(BM_spinor_integral_oracle);

void BM_angular_average(benchmark::State& state) {
  for (auto _ : state) {
    auto m = fermipar::dirac::angular_average(
        fermipar::dirac::AvgKind::plus_minus, kPi / 8, kPi / 2);
    benchmark::DoNotOptimize(m(0, 0));
  }
}
BENCHMARK(BM_angular_average);

}  // namespace

BENCHMARK_MAIN();
