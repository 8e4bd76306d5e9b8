// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "qig/audit.hpp"
#include "qig/kernels.hpp"
#include "qig/random.hpp"

namespace {

using namespace qig;

struct Instance {
  DensityState rho;
  DensityState rho1;
  Matrix x_eig;
};

Instance make_instance(Index n) {
  InstanceRng rng(7, static_cast<std::uint64_t>(n));
  DensityState rho = random_state(n, rng);
  DensityState rho1 = random_state(n, rng);
  const HermitianOperator x = random_hermitian(n, rng);
  Matrix xe = rho.spectrum().to_eigenbasis(x.matrix());
  return Instance{std::move(rho), std::move(rho1), std::move(xe)};
}

template <bool Parallel>
void BM_ArakiScan(benchmark::State& state) {
  const Instance in = make_instance(state.range(0));
  const auto ts = linspace(-0.5, 0.5, 10001);
  const RealVector ll = in.rho.log_eigenvalues();
  for (auto _ : state) {
    double v = Parallel ? kernels::omp::conjugation_norm_max(in.x_eig, ll, ts)
                        : kernels::serial::conjugation_norm_max(in.x_eig, ll, ts);
    benchmark::DoNotOptimize(v);
  }
}

template <bool Parallel>
void BM_CocycleEnvelope(benchmark::State& state) {
  const Instance in = make_instance(state.range(0));
  const auto ts = linspace(-0.5, 0.5, 1001);
  for (auto _ : state) {
    double v = Parallel
                   ? kernels::omp::cocycle_envelope(in.rho.spectrum(), in.rho1.spectrum(), ts)
                   : kernels::serial::cocycle_envelope(in.rho.spectrum(), in.rho1.spectrum(), ts);
    benchmark::DoNotOptimize(v);
  }
}

template <bool Parallel>
void BM_LogMeanKernel(benchmark::State& state) {
  const Instance in = make_instance(state.range(0));
  const RealVector& l = in.rho.spectrum().eigenvalues;
  for (auto _ : state) {
    Eigen::MatrixXd k =
        Parallel ? kernels::omp::log_mean_kernel(l) : kernels::serial::log_mean_kernel(l);
    benchmark::DoNotOptimize(k.data());
  }
}

template <bool Parallel>
void BM_AuditEnsemble(benchmark::State& state) {
  AuditConfig config;
  config.instances = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    AuditReport r = Parallel ? run_audit(config) : run_audit_serial(config);
    benchmark::DoNotOptimize(r.records.data());
  }
}

}  // namespace

BENCHMARK(BM_ArakiScan<false>)->Arg(4)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ArakiScan<true>)->Arg(4)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CocycleEnvelope<false>)->Arg(8)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CocycleEnvelope<true>)->Arg(8)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LogMeanKernel<false>)->Arg(64)->Arg(512)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_LogMeanKernel<true>)->Arg(64)->Arg(512)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_AuditEnsemble<false>)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AuditEnsemble<true>)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
