#include <benchmark/benchmark.h>

#include "lqshell/constructors.hpp"
#include "lqshell/linear_quotients.hpp"
#include "lqshell/multicomplex.hpp"
#include "lqshell/polymatroid.hpp"

using namespace lqshell;

namespace {

// m^d in n variables: the densest equigenerated instance at a given size.
MonomialIdeal dense(int n, int d) {
  return power(MonomialIdeal::maximal_ideal(n), d);
}

// A layered Borel ideal with minimal generators spread over several degrees.
// Each layer raises the generator strictly past the shadow of the previous
// one, so the layers all contribute.
MonomialIdeal spread(int n, int top) {
  std::vector<MonomialIdeal> layers;
  std::vector<Exp> e(static_cast<size_t>(n), 0);
  e[static_cast<size_t>(n / 2)] = 1;
  for (int d = 1; d <= top; ++d) {
    layers.push_back(principal_borel(Monomial(e)));
    e[static_cast<size_t>(n - 1)] += 1;
    for (int i = 0; i + 1 < n; ++i)
      if (e[static_cast<size_t>(i)] > 0) {
        e[static_cast<size_t>(i)] -= 1;
        e[static_cast<size_t>(i + 1)] += 1;
        break;
      }
  }
  return layered_sum(layers, /*validate=*/false);
}

void BM_componentwise_check(benchmark::State& state) {
  MonomialIdeal ideal = spread(static_cast<int>(state.range(0)),
                               static_cast<int>(state.range(1)));
  for (auto _ : state)
    benchmark::DoNotOptimize(is_componentwise_polymatroidal(ideal).holds);
}
BENCHMARK(BM_componentwise_check)->Args({3, 3})->Args({4, 4})->Args({5, 5});

void BM_exchange_dense(benchmark::State& state) {
  MonomialIdeal ideal = dense(static_cast<int>(state.range(0)),
                              static_cast<int>(state.range(1)));
  for (auto _ : state)
    benchmark::DoNotOptimize(is_polymatroidal(ideal).holds);
}
BENCHMARK(BM_exchange_dense)->Args({4, 3})->Args({4, 5})->Args({5, 5});

void BM_synthesize(benchmark::State& state) {
  MonomialIdeal ideal = spread(static_cast<int>(state.range(0)),
                               static_cast<int>(state.range(1)));
  for (auto _ : state) {
    auto order = synthesize_order(ideal);
    benchmark::DoNotOptimize(order.data());
  }
}
BENCHMARK(BM_synthesize)->Args({3, 3})->Args({4, 4})->Args({5, 5});

void BM_verify_order(benchmark::State& state) {
  MonomialIdeal ideal = spread(static_cast<int>(state.range(0)),
                               static_cast<int>(state.range(1)));
  std::vector<Monomial> order = synthesize_order(ideal);
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_linear_quotients(ideal, order).valid);
}
BENCHMARK(BM_verify_order)->Args({3, 3})->Args({4, 4})->Args({5, 5});

void BM_search(benchmark::State& state) {
  MonomialIdeal ideal = dense(static_cast<int>(state.range(0)),
                              static_cast<int>(state.range(1)));
  for (auto _ : state)
    benchmark::DoNotOptimize(search_lq_order(ideal).status);
}
BENCHMARK(BM_search)->Args({3, 3})->Args({4, 3})->Args({4, 4});

void BM_bounded_exchange(benchmark::State& state) {
  MonomialIdeal ideal = spread(static_cast<int>(state.range(0)),
                               static_cast<int>(state.range(1)));
  int cap = degree_range(ideal).top + 2;
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_exchange_condition_bounded(ideal, cap).holds);
}
BENCHMARK(BM_bounded_exchange)->Args({3, 3})->Args({4, 4});

void BM_truncation_routes(benchmark::State& state) {
  SupportRestriction restricted = restrict_to_support(
      spread(static_cast<int>(state.range(0)), static_cast<int>(state.range(1))));
  Multicomplex mc = ideal_to_multicomplex(restricted.ideal);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        is_componentwise_discrete_polymatroid(
            mc, PolymatroidRoute::exchange_on_union)
            .holds);
}
BENCHMARK(BM_truncation_routes)->Args({3, 3})->Args({4, 4});

}  // namespace

BENCHMARK_MAIN();
