#include <benchmark/benchmark.h>

#include "gpk/bwb.hpp"
#include "gpk/grassmann.hpp"
#include "gpk/motivic.hpp"
#include "gpk/traces.hpp"

using namespace gpk;

namespace {

const std::string kFixture = std::string(GPK_FIXTURE_DIR) + "/appendixB.txt";

// One Groebner run on the x01 chart of the shipped fixture.
void BM_CertifyPatch(benchmark::State& state) {
  const PrimeField F(103);
  const auto inst = GPK3Instance::standard(read_matrix_file(kFixture, F));
  const auto chart = patch_parametrization(pluecker_ring(F), 0, 1);
  for (auto _ : state) benchmark::DoNotOptimize(certify_patch(inst, chart, {}));
}
BENCHMARK(BM_CertifyPatch)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_NormalForm(benchmark::State& state) {
  const PrimeField F(103);
  const auto ring = pluecker_ring(F);
  const auto pf = pfaffian_ideal(ring);
  const auto gb = groebner_basis(pf);
  Polynomial f = Polynomial::constant(ring, 1);
  for (std::size_t i = 0; i < kPlueckerDim; ++i) f = f * (Polynomial::variable(ring, i) + Polynomial::constant(ring, i + 1));
  for (auto _ : state) benchmark::DoNotOptimize(gb.reduce(f));
}
BENCHMARK(BM_NormalForm)->Unit(benchmark::kMicrosecond);

void BM_CohomologyClaims(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_cohomology_claims());
}
BENCHMARK(BM_CohomologyClaims)->Unit(benchmark::kMillisecond);

void BM_BottSingle(benchmark::State& state) {
  const auto spec = BundleSpec::make(5, 2, {3, -1}, {2, 0, -4});
  for (auto _ : state) benchmark::DoNotOptimize(bott_cohomology(spec));
}
BENCHMARK(BM_BottSingle);

void BM_TraceTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(allowed_involution_traces());
}
BENCHMARK(BM_TraceTable);

void BM_PointCount(benchmark::State& state) {
  const PrimeField F(static_cast<std::uint32_t>(state.range(0)));
  RandomState rng(1);
  const auto g = MatrixFF::random_invertible(F, 10, rng);
  for (auto _ : state) benchmark::DoNotOptimize(count_and_compare(F, g, state.range(0) == 2));
}
BENCHMARK(BM_PointCount)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
