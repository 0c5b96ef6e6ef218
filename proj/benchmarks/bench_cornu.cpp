#include <benchmark/benchmark.h>

#include "cornu/darboux.hpp"
#include "cornu/fresnel.hpp"
#include "cornu/riccati.hpp"
#include "cornu/spiral.hpp"

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Series branch (|z| <= 1.6).
void BM_FresnelSmall(benchmark::State& state) {
  double z = 0.8;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cornu::fresnel_cs(z));
  }
}
BENCHMARK(BM_FresnelSmall);

// Auxiliary-function branch.
void BM_FresnelLarge(benchmark::State& state) {
  double z = 25.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cornu::fresnel_cs(z));
  }
}
BENCHMARK(BM_FresnelLarge);

void BM_FresnelShifted(benchmark::State& state) {
  double z = 1.3;
  double phi = kPi / 4.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cornu::fresnel_shifted(z, phi));
  }
}
BENCHMARK(BM_FresnelShifted);

// The cross-check integrator, far slower than the table route by design.
void BM_QuadratureOracle(benchmark::State& state) {
  cornu::QuadratureSpec spec;
  spec.integrand = cornu::IntegrandId::cos_half_pi_s2;
  spec.upper_limit = 2.0;
  spec.abs_tol = 1e-10;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cornu::quadrature_oracle(spec));
  }
}
BENCHMARK(BM_QuadratureOracle);

void BM_RiccatiGeneral(benchmark::State& state) {
  double z = 1.7;
  cornu::Complex theta{2.0, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(cornu::riccati_general(z, theta));
  }
}
BENCHMARK(BM_RiccatiGeneral);

void BM_DeformedPoint(benchmark::State& state) {
  auto p = cornu::DeformationParameter::from_theta(2.0, -1.0);
  double z = 1.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cornu::deformed_point(z, p));
  }
}
BENCHMARK(BM_DeformedPoint);

void BM_Curvature(benchmark::State& state) {
  auto p = cornu::DeformationParameter::from_theta(3.0, 0.0);
  double z = 1.4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cornu::curvature(p, z));
  }
}
BENCHMARK(BM_Curvature);

void BM_Distortion(benchmark::State& state) {
  double z = 1.3;
  double phi = kPi / 4.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cornu::darboux_distortion(z, phi));
  }
}
BENCHMARK(BM_Distortion);

void BM_PartnerPsi(benchmark::State& state) {
  double z = 1.3;
  double phi = kPi / 4.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cornu::partner_psi(z, phi, 2.0, 0.0));
  }
}
BENCHMARK(BM_PartnerPsi);

// Full figure-sized sweep including pole detection and gap insertion.
void BM_SampleDistortion(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(cornu::sample_distortion(0.0, 0.05, 3.2, 1001));
  }
}
BENCHMARK(BM_SampleDistortion);

void BM_SampleSpiral(benchmark::State& state) {
  auto p = cornu::DeformationParameter::from_theta(1.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cornu::sample_spiral(p, -5.0, 5.0, 1001));
  }
}
BENCHMARK(BM_SampleSpiral);

}  // namespace

BENCHMARK_MAIN();
