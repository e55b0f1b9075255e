#include <benchmark/benchmark.h>

#include "symcone/chain.hpp"
#include "symcone/cone.hpp"
#include "symcone/hilbert.hpp"
#include "symcone/orbit.hpp"

using namespace symcone;

namespace {

const ChainSpec kEx33{3, {QVector{-2, -1, 4}, QVector{-3, 1, 3}}};
const ChainSpec kA2{2, {QVector{-1, 2}}};

void BM_OrbitEnumeration(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto o = orbit(QVector{-2, -1, 4}, n);
    benchmark::DoNotOptimize(o);
  }
}
BENCHMARK(BM_OrbitEnumeration)->Arg(6)->Arg(8)->Arg(10);

void BM_DualOfOrbitCone(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    Cone d = dual(local_cone(kEx33, n));
    benchmark::DoNotOptimize(d.rays().size());
  }
}
BENCHMARK(BM_DualOfOrbitCone)->Arg(4)->Arg(5)->Arg(6)
    ->Unit(benchmark::kMillisecond);

void BM_HilbertBasisFamily(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    HilbertBasis hb = hilbert_basis(local_cone(kA2, n));
    benchmark::DoNotOptimize(hb.elements.size());
  }
}
BENCHMARK(BM_HilbertBasisFamily)->Arg(3)->Arg(4)->Arg(5)
    ->Unit(benchmark::kMillisecond);

void BM_EquivariantTransfer(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto fn = equivariant_dual_generators(kEx33, n);
    benchmark::DoNotOptimize(fn.size());
  }
}
BENCHMARK(BM_EquivariantTransfer)->Arg(7)->Arg(8)
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
