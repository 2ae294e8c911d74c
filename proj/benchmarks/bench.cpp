#include <benchmark/benchmark.h>

#include <qfold/family.hpp>
#include <qfold/pell.hpp>
#include <qfold/solutions.hpp>

using namespace qfold;

namespace {

void BM_IdentityExpansion(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(identity_residual().is_zero());
  }
}
BENCHMARK(BM_IdentityExpansion);

void BM_GenericCoefficients(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_appendix().size());
  }
}
BENCHMARK(BM_GenericCoefficients);

void BM_PolyMul(benchmark::State& state) {
  auto T = VarTable::make({"t", "u", "v"});
  const ParamCurve curve = ParamCurve::symbolic();
  const Poly p = pow(curve.forms()[1], 3);
  const Poly q = pow(curve.forms()[4], 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize((p * q).term_count());
  }
}
BENCHMARK(BM_PolyMul);

void BM_PellSteps(benchmark::State& state) {
  const long steps = state.range(0);
  for (auto _ : state) {
    PellOrbit orbit = make_orbit(make_params(3));
    for (long i = 0; i < steps; ++i) orbit = step(orbit);
    benchmark::DoNotOptimize(orbit.U);
  }
  state.SetItemsProcessed(state.iterations() * steps);
}
BENCHMARK(BM_PellSteps)->Arg(10)->Arg(50)->Arg(200);

void BM_BoxSearch(benchmark::State& state) {
  const GtInstance inst = gt_instance(3, true);
  const long bound = state.range(0);
  const unsigned threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(box_search(inst, bound, bound, threads).solutions.size());
  }
  state.SetItemsProcessed(state.iterations() * (2 * bound + 1) * (2 * bound + 1));
}
BENCHMARK(BM_BoxSearch)
    ->Args({50, 1})
    ->Args({150, 1})
    ->Args({300, 1})
    ->Args({600, 1})
    ->Args({600, 2});

void BM_GridStream(benchmark::State& state) {
  const std::uint64_t limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    std::uint64_t nontrivial = 0;
    vpoint_stream(2, VPointSource::grid, limit,
                  [&](const SolutionRecord& r) { nontrivial += r.nontrivial; });
    benchmark::DoNotOptimize(nontrivial);
  }
  state.SetItemsProcessed(state.iterations() * limit);
}
BENCHMARK(BM_GridStream)->Arg(64)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
