#include <benchmark/benchmark.h>

#include <random>

#include "green/greenring.hpp"

using namespace green;

namespace {

RingElement random_element(std::mt19937& rng, int n, const CycField& F) {
  std::uniform_int_distribution<int> nterms(2, 5), coef(-9, 9), xe(0, 2 * n),
      ye(0, 3 * n), kind(0, 3), ze(1, 2), wm(1, 2);
  RingElement e;
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    Monomial m;
    m.xe = xe(rng);
    m.ye = ye(rng);
    switch (kind(rng)) {
      case 0: break;
      case 1: m.zp = ze(rng); break;
      case 2: m.zm = ze(rng); break;
      default: m.w[{wm(rng), EtaParam::infinity()}] = 1; break;
    }
    e.add_term(m, coef(rng) == 0 ? 1 : coef(rng));
  }
  return e;
}

void BM_NormalForm(benchmark::State& state) {
  int n = (int)state.range(0);
  CycField F(n);
  Presentation P(n);
  std::mt19937 rng(42);
  std::vector<RingElement> pool;
  for (int i = 0; i < 64; ++i) pool.push_back(random_element(rng, n, F));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(P.normal_form(pool[i++ % pool.size()]));
  }
}
BENCHMARK(BM_NormalForm)->Arg(3)->Arg(4);

void BM_Product(benchmark::State& state) {
  int n = (int)state.range(0);
  CycField F(n);
  Presentation P(n);
  std::mt19937 rng(43);
  std::vector<RingElement> pool;
  for (int i = 0; i < 64; ++i) pool.push_back(random_element(rng, n, F));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        P.multiply(pool[i % pool.size()], pool[(i + 1) % pool.size()]));
    ++i;
  }
}
BENCHMARK(BM_Product)->Arg(3)->Arg(4);

void BM_TensorSplit(benchmark::State& state) {
  CycField F(3);
  HopfAlgebra H(F);
  for (auto _ : state) {
    ModCat cat(H);  // fresh cache each round so the split is measured
    benchmark::DoNotOptimize(
        cat.decompose_tensor(cat.simple(3, 1), cat.simple(3, 0)));
  }
}
BENCHMARK(BM_TensorSplit)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
