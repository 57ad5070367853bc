#include <benchmark/benchmark.h>

#include "witnesskit/bell.hpp"
#include "witnesskit/criteria.hpp"
#include "witnesskit/multiparty.hpp"
#include "witnesskit/random.hpp"
#include "witnesskit/states.hpp"
#include "witnesskit/tensor.hpp"
#include "witnesskit/witness.hpp"

using namespace witnesskit;

namespace {

DensityMatrix qubits_state(int n, std::uint64_t seed) {
  Rng rng(seed);
  return random_density_matrix(Dims(std::vector<int>(static_cast<std::size_t>(n), 2)), rng);
}

void BM_PartialTranspose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  DensityMatrix rho = qubits_state(n, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(partial_transpose(rho.matrix, rho.layout, {n - 1}));
  }
}
BENCHMARK(BM_PartialTranspose)->DenseRange(2, 5);

void BM_PartialTrace(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  DensityMatrix rho = qubits_state(n, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(partial_trace(rho.matrix, rho.layout, {0}));
  }
}
BENCHMARK(BM_PartialTrace)->DenseRange(2, 5);

void BM_HermitianEig(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  DensityMatrix rho = qubits_state(n, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermitian_eig(rho.matrix));
  }
}
BENCHMARK(BM_HermitianEig)->DenseRange(2, 5);

void BM_PptCheck(benchmark::State& state) {
  DensityMatrix rho = isotropic(3, 0.7);
  Bipartition cut = Bipartition::make({0}, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ppt_check(rho, cut));
  }
}
BENCHMARK(BM_PptCheck);

void BM_CriteriaBattery(benchmark::State& state) {
  DensityMatrix rho = shifts_state();
  for (auto _ : state) {
    benchmark::DoNotOptimize(cut_report(rho));
  }
}
BENCHMARK(BM_CriteriaBattery);

void BM_ProductInfimum(benchmark::State& state) {
  Mat proj = Mat::Zero(8, 8);
  for (const auto& v : shifts_upb()) proj += v.amplitudes * v.amplitudes.adjoint();
  const int restarts = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(product_infimum(proj, Dims({2, 2, 2}), restarts, 7));
  }
}
BENCHMARK(BM_ProductInfimum)->Arg(10)->Arg(50);

void BM_BellOptimize(benchmark::State& state) {
  DensityMatrix rho = ghz(3).projector();
  for (auto _ : state) {
    benchmark::DoNotOptimize(bell_optimize(rho, 2, 11));
  }
}
BENCHMARK(BM_BellOptimize);

void BM_PauliDecompose(benchmark::State& state) {
  Rng rng(13);
  Mat g = Mat::Random(16, 16);
  Mat h = (g + g.adjoint()) / 2.0;
  Witness w{h, Dims({2, 2, 2, 2}), Bipartition::make({0}, 4), WitnessKind::Decomposable, ""};
  for (auto _ : state) {
    benchmark::DoNotOptimize(pauli_decompose(w));
  }
}
BENCHMARK(BM_PauliDecompose);

}  // namespace

BENCHMARK_MAIN();
