#include <benchmark/benchmark.h>

#include "su3st/invariants.hpp"
#include "su3st/matexp.hpp"
#include "su3st/ninerep.hpp"

namespace {

using namespace su3st;

void BM_ExactCommutator6(benchmark::State& state) {
  const GeneratorSet<ExactScalar> six = six_rep<ExactScalar>(Branch::Plus);
  for (auto _ : state) {
    benchmark::DoNotOptimize(commutator(six.J(1), six.K(2)));
  }
}
BENCHMARK(BM_ExactCommutator6);

void BM_FloatCommutator9(benchmark::State& state) {
  const auto j9 = j9_generators<Complex>();
  for (auto _ : state) {
    benchmark::DoNotOptimize(commutator(j9[0], j9[1]));
  }
}
BENCHMARK(BM_FloatCommutator9);

void BM_MatrixExp9(benchmark::State& state) {
  TransformParams p;
  p.theta = {0.3, -0.2, 0.1, 0.4, -0.5, 0.2, 0.0, 0.7};
  p.phi = {0.1, 0.2, -0.3, 0.0, 0.5, -0.1, 0.2, 0.4};
  for (auto _ : state) {
    benchmark::DoNotOptimize(lorentz9(p));
  }
}
BENCHMARK(BM_MatrixExp9);

void BM_StructureExtractionExact(benchmark::State& state) {
  const GeneratorSet<ExactScalar> g3 = gellmann();
  for (auto _ : state) {
    benchmark::DoNotOptimize(extract_structure(g3));
  }
}
BENCHMARK(BM_StructureExtractionExact);

void BM_FdIdentitiesFloat(benchmark::State& state) {
  const auto& sc = canonical_structure_float();
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_fd_identities(sc));
  }
}
BENCHMARK(BM_FdIdentitiesFloat);

void BM_AdjointExtraction(benchmark::State& state) {
  const MomentumSet<Complex> p = momentum_matrices<Complex>(Branch::Plus, Complex(1.0));
  const GeneratorSet<Complex> six = six_rep<Complex>(Branch::Plus);
  for (auto _ : state) {
    benchmark::DoNotOptimize(extract_adjoint_action(p, six.K(3)));
  }
}
BENCHMARK(BM_AdjointExtraction);

void BM_CubicInvariant(benchmark::State& state) {
  NineVector x;
  for (int mu = 1; mu <= 9; ++mu) x.comp(mu) = 0.1 * mu;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cubic_invariant(x, Branch::Plus));
  }
}
BENCHMARK(BM_CubicInvariant);

}  // namespace

BENCHMARK_MAIN();
