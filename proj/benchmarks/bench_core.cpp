#include <benchmark/benchmark.h>

#include <random>

#include "resex/evolution.hpp"
#include "resex/metrics.hpp"
#include "resex/noise.hpp"

using namespace resex;

namespace {

Operator random_hermitian(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Operator m(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) m(r, c) = Complex(g(rng), g(rng));
  return 0.5 * (m + m.adjoint()).eval();
}

void BM_expm_hermitian(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const Operator h = random_hermitian(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(expm_hermitian(h, 0.37));
}
BENCHMARK(BM_expm_hermitian)->Arg(16)->Arg(64)->Arg(128)->Arg(256);

void BM_pauli_decompose(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const Operator u = expm_hermitian(random_hermitian(static_cast<int>(state.range(0)), rng), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(pauli_decompose(u));
}
BENCHMARK(BM_pauli_decompose)->Arg(16)->Arg(64);

void BM_ptm(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const Operator u = expm_hermitian(random_hermitian(4, rng), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(ptm(u));
}
BENCHMARK(BM_ptm);

void BM_propagate_lab(benchmark::State& state) {
  DqdParams p;
  p.bzL = 20e9;
  p.bzR = 20.2e9;
  p.by2R = 2e6;
  p.j = 0.2e6;
  p.set_resonant();
  PropagationConfig cfg;
  const double t = static_cast<double>(state.range(0)) * 1e-9;
  for (auto _ : state) benchmark::DoNotOptimize(propagate_lab(p, t, cfg));
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(t * 20.2e9 / cfg.max_phase_per_step));
}
BENCHMARK(BM_propagate_lab)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_mc_zx(benchmark::State& state) {
  const Schedule s = schedule_zx(1e6, 0, 0);
  NoiseSpec noise{0.01, static_cast<int>(state.range(0)), 5, false};
  for (auto _ : state) benchmark::DoNotOptimize(mc_infidelity(s, s.target, noise));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_mc_zx)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_chain_trace_scan(benchmark::State& state) {
  ChainParams p = ChainParams::uniform(7, 20e9, 0.2e9, 1e6);
  for (int i = 0; i < 7; ++i) p.by1[i] = 10e6;
  const Operator h = chain_rwa_hamiltonian(p);
  const Operator y7 = pauli_matrix("YYYYYYY");
  for (auto _ : state) {
    Eigen::SelfAdjointEigenSolver<Operator> es(h);
    const Eigen::VectorXcd w =
        (es.eigenvectors().adjoint() * y7.adjoint() * es.eigenvectors()).diagonal();
    double best = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double t = 0.4e-6 + 0.5e-6 * i / 999.0;
      Complex acc = 0.0;
      for (Eigen::Index q = 0; q < w.size(); ++q)
        acc += w(q) * std::exp(Complex(0.0, -es.eigenvalues()(q) * t));
      best = std::max(best, std::abs(acc));
    }
    benchmark::DoNotOptimize(best);
  }
}
BENCHMARK(BM_chain_trace_scan)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
