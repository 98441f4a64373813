// Parallel kernels against their serial twins.
#include "qgauss/qgroup.hpp"
#include "qgauss/qlinalg.hpp"

#include <benchmark/benchmark.h>

using namespace qgauss;

namespace {

const std::vector<std::string> kGroups{"gl3", "sp2", "gl2|1"};

std::shared_ptr<const QuantumGroup> group_arg(const benchmark::State& state) {
  return preset(kGroups.at(static_cast<std::size_t>(state.range(0))));
}

template <ScalarMatrix (*Fn)(const RMatrixSpec&)>
void BM_YangBaxter(benchmark::State& state) {
  const auto g = group_arg(state);
  state.SetLabel(g->name());
  for (auto _ : state) benchmark::DoNotOptimize(Fn(g->rmatrix()));
}

template <ScalarMatrix (*Fn)(const ScalarMatrix&, const ScalarMatrix&)>
void BM_Multiply(benchmark::State& state) {
  const auto g = group_arg(state);
  state.SetLabel(g->name());
  const auto& r = g->rmatrix();
  const ScalarMatrix big = graded_tensor(r.entries, r.entries, tensor_parity(r.grading, r.grading),
                                         tensor_parity(r.grading, r.grading));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(big, big));
}

template <std::vector<CriticalPair> (*Fn)(const RewriteSystem&, std::size_t, std::uint64_t)>
void BM_Confluence(benchmark::State& state) {
  const auto g = group_arg(state);
  state.SetLabel(g->name());
  for (auto _ : state) benchmark::DoNotOptimize(Fn(*g->system(), 4, kDefaultStepBudget));
}

template <std::vector<NCPolynomial> (*Fn)(const Algebra&, const std::vector<NCPolynomial>&)>
void BM_CanonAll(benchmark::State& state) {
  const auto g = group_arg(state);
  state.SetLabel(g->name());
  const Algebra alg = g->algebra();
  const std::size_t n = alg.alphabet().size();
  std::vector<NCPolynomial> ps;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      ps.push_back(NCPolynomial::word(Word{static_cast<Symbol>(n - 1 - i), static_cast<Symbol>(n - 1 - j),
                                           static_cast<Symbol>(i), static_cast<Symbol>(j)}));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(alg, ps));
}

} // namespace

BENCHMARK(BM_YangBaxter<yang_baxter_residual>)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_YangBaxter<yang_baxter_residual_serial>)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Multiply<multiply>)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Multiply<multiply_serial>)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Confluence<check_confluence>)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Confluence<check_confluence_serial>)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CanonAll<canon_all>)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CanonAll<canon_all_serial>)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
