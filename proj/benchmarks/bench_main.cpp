#include <benchmark/benchmark.h>

#include "oto/enumerate.hpp"
#include "oto/hierarchy.hpp"
#include "oto/normalize.hpp"
#include "oto/order.hpp"
#include "oto/prover.hpp"
#include "oto/syntax.hpp"

namespace {

const std::vector<oto::Term>& norm4() {
  static const auto t = oto::terms_up_to_norm(4);
  return t;
}

void BM_ComparePairs(benchmark::State& state) {
  const auto& ts = norm4();
  for (auto _ : state) {
    int less = 0;
    for (const auto& a : ts) {
      for (const auto& b : ts) less += oto::less(a, b);
    }
    benchmark::DoNotOptimize(less);
  }
  state.SetItemsProcessed(state.iterations() * ts.size() * ts.size());
}
BENCHMARK(BM_ComparePairs);

void BM_Add(benchmark::State& state) {
  const auto& ts = norm4();
  for (auto _ : state) {
    for (const auto& a : ts) {
      for (const auto& b : ts) benchmark::DoNotOptimize(oto::add(a, b));
    }
  }
  state.SetItemsProcessed(state.iterations() * ts.size() * ts.size());
}
BENCHMARK(BM_Add);

void BM_Enumerate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(oto::terms_up_to_norm(state.range(0)));
}
BENCHMARK(BM_Enumerate)->DenseRange(4, 7);

void BM_EnumerateBelow(benchmark::State& state) {
  const auto bound = oto::parse_term("w^(w^1)");
  for (auto _ : state) benchmark::DoNotOptimize(oto::terms_up_to_norm(state.range(0), bound));
}
BENCHMARK(BM_EnumerateBelow)->Arg(20)->Arg(60);

void BM_EvalSucOmega(benchmark::State& state) {
  const auto w = oto::parse_term("w^1");
  for (auto _ : state) {
    benchmark::DoNotOptimize(oto::eval_hierarchy(oto::suc_base(), w, state.range(0)));
  }
}
BENCHMARK(BM_EvalSucOmega)->DenseRange(2, 10, 4);

void BM_EvalLinFinite(benchmark::State& state) {
  const auto a = oto::Term::natural(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oto::eval_hierarchy(oto::lin_base(), a, 6));
}
BENCHMARK(BM_EvalLinFinite)->DenseRange(2, 8, 3);

void BM_ProveLe(benchmark::State& state) {
  const auto s = oto::parse_ext("S^(1)^(2)[w^1](E(0))");
  const auto t = oto::ExtTerm::canon(oto::dominant_oto(s));
  for (auto _ : state) benchmark::DoNotOptimize(oto::prove_le(s, t));
}
BENCHMARK(BM_ProveLe);

}  // namespace
BENCHMARK_MAIN();
