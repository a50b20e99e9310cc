#include <benchmark/benchmark.h>

#include "wb/satake.hpp"
#include "wb/verify.hpp"

using namespace wb;

namespace {

void BM_AdmissibleSet(benchmark::State& state) {
  AffineWeyl W(build_datum("Sp4"));
  const Cocharacter mu = {static_cast<Int>(state.range(0)),
                          static_cast<Int>(state.range(0))};
  for (auto _ : state) {
    AffineWeyl fresh(build_datum("Sp4"));  // cold caches each round
    benchmark::DoNotOptimize(fresh.admissible_set(mu));
  }
}
BENCHMARK(BM_AdmissibleSet)->Arg(1)->Arg(2);

void BM_AdmissibleSetCached(benchmark::State& state) {
  AffineWeyl W(build_datum("Sp4"));
  const Cocharacter mu = {static_cast<Int>(state.range(0)),
                          static_cast<Int>(state.range(0))};
  W.admissible_set(mu);
  for (auto _ : state) benchmark::DoNotOptimize(W.admissible_set(mu));
}
BENCHMARK(BM_AdmissibleSetCached)->Arg(1)->Arg(2);

void BM_HeckeCentralProduct(benchmark::State& state) {
  AffineWeyl W(build_datum("SL3"));
  HeckeAlgebra<PrimeField> H(W, PrimeField(3, 0));
  const Cocharacter mu = {static_cast<Int>(state.range(0)),
                          static_cast<Int>(state.range(0))};
  auto z = H.z_mu(mu);
  auto k = H.one_K();
  for (auto _ : state) benchmark::DoNotOptimize(H.mul(z, k));
}
BENCHMARK(BM_HeckeCentralProduct)->Arg(1)->Arg(2);

void BM_ZmuSquare(benchmark::State& state) {
  AffineWeyl W(build_datum("SL2"));
  HeckeAlgebra<PrimeField> H(W, PrimeField(3, 0));
  auto z = H.z_mu({state.range(0)});
  for (auto _ : state) benchmark::DoNotOptimize(H.mul(z, z));
}
BENCHMARK(BM_ZmuSquare)->Arg(2)->Arg(4);

void BM_BruhatBallComparisons(benchmark::State& state) {
  AffineWeyl W(build_datum("SL3"));
  std::vector<ExtAffine> ball = waff_ball(W, state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    for (const ExtAffine& x : ball)
      for (const ExtAffine& y : ball)
        if (W.bruhat_leq(x, y)) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_BruhatBallComparisons)->Arg(3)->Arg(5);

void BM_ReducedWords(benchmark::State& state) {
  for (auto _ : state) {
    AffineWeyl W(build_datum("G2"));
    for (const Cocharacter& mu : dominant_cocharacters(W.datum(), state.range(0)))
      benchmark::DoNotOptimize(W.reduced_word(W.translation(mu)));
  }
}
BENCHMARK(BM_ReducedWords)->Arg(6)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
