// Parallel kernels against their serial references, plus whole-protocol runs.
// Arguments are qubit counts; the matrices are 2^n x 2^n.

#include <random>

#include <benchmark/benchmark.h>

#include "qnet/dynamics.hpp"
#include "qnet/kernels.hpp"
#include "qnet/runner.hpp"

namespace {

using qnet::Complex;
using qnet::ComplexMatrix;

ComplexMatrix random_matrix(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  ComplexMatrix m(dim);
  for (auto& z : m.data()) z = Complex(g(rng), g(rng));
  return m;
}

std::size_t dim_of(const benchmark::State& state) { return std::size_t{1} << state.range(0); }

template <ComplexMatrix (*Fn)(const ComplexMatrix&, const ComplexMatrix&)>
void BM_Binary(benchmark::State& state) {
  const auto a = random_matrix(dim_of(state), 1);
  const auto b = random_matrix(dim_of(state), 2);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(a, b));
}

template <ComplexMatrix (*Fn)(const ComplexMatrix&, const ComplexMatrix&)>
void BM_Kron(benchmark::State& state) {
  // half the qubits on each side
  const auto half = std::size_t{1} << (state.range(0) / 2);
  const auto a = random_matrix(half, 1);
  const auto b = random_matrix(dim_of(state) / half, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(a, b));
}

template <ComplexMatrix (*Fn)(const ComplexMatrix&, std::size_t, std::size_t)>
void BM_PartialTrace(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto rho = random_matrix(dim_of(state), 3);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(rho, n, std::size_t{1}));  // drop qubit 0
}

void BM_Protocol(benchmark::State& state) {
  auto cfg = qnet::preset("fig6").protocol;
  cfg.mode = static_cast<qnet::ProtocolMode>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qnet::run_protocol(cfg));
  state.SetLabel(std::string(qnet::to_string(cfg.mode)) + ", 220 steps");
}

namespace k = qnet::kernels;
namespace ref = qnet::kernels::reference;

BENCHMARK(BM_Binary<k::matmul>)->Name("matmul/parallel")->DenseRange(4, 8, 2);
BENCHMARK(BM_Binary<ref::matmul>)->Name("matmul/reference")->DenseRange(4, 8, 2);
BENCHMARK(BM_Binary<k::conjugate>)->Name("conjugate/parallel")->DenseRange(4, 8, 2);
BENCHMARK(BM_Binary<ref::conjugate>)->Name("conjugate/reference")->DenseRange(4, 8, 2);
BENCHMARK(BM_Kron<k::kron>)->Name("kron/parallel")->DenseRange(4, 10, 2);
BENCHMARK(BM_Kron<ref::kron>)->Name("kron/reference")->DenseRange(4, 10, 2);
BENCHMARK(BM_PartialTrace<k::partial_trace>)->Name("partial_trace/parallel")->DenseRange(4, 10, 2);
BENCHMARK(BM_PartialTrace<ref::partial_trace>)->Name("partial_trace/reference")->DenseRange(4, 10, 2);
BENCHMARK(BM_Protocol)->Name("run_protocol/fig6")->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
