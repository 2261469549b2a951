#include <benchmark/benchmark.h>

#include "fthresh/frobenius.hpp"
#include "fthresh/fsing.hpp"
#include "fthresh/graded.hpp"
#include "fthresh/groebner.hpp"
#include "fthresh/ideal.hpp"

using namespace fthresh;

namespace {

RingPtr blowup() { return QuotientRing::create(2, {"x", "y", "z", "w"}, {"x*y - z^2*w"}); }

void BM_GroebnerCyclic4(benchmark::State& state) {
  auto s = QuotientRing::create(static_cast<std::uint32_t>(state.range(0)), {"a", "b", "c", "d"});
  std::vector<Polynomial> gens{s->parse("a + b + c + d"), s->parse("a*b + b*c + c*d + d*a"),
                               s->parse("a*b*c + b*c*d + c*d*a + d*a*b"), s->parse("a*b*c*d - 1")};
  for (auto _ : state) benchmark::DoNotOptimize(reduced_groebner_basis(s->ambient(), gens));
}
BENCHMARK(BM_GroebnerCyclic4)->Arg(7)->Arg(32003);

void BM_BracketPowerGroebner(benchmark::State& state) {
  auto r = blowup();
  const auto q = frobenius_power(2, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    Ideal target = bracket(Ideal::maximal(r), q);
    benchmark::DoNotOptimize(target.groebner_basis());
  }
}
BENCHMARK(BM_BracketPowerGroebner)->DenseRange(1, 4);

void BM_NuBlowup(benchmark::State& state) {
  auto r = blowup();
  Ideal m = Ideal::maximal(r);
  const auto e = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nu(m, m, e));
}
BENCHMARK(BM_NuBlowup)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_NuRegular(benchmark::State& state) {
  auto r = QuotientRing::create(3, {"x", "y", "z"});
  Ideal m = Ideal::maximal(r);
  const auto e = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nu(m, m, e));
}
BENCHMARK(BM_NuRegular)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_GrPresentation(benchmark::State& state) {
  auto r = QuotientRing::create(2, {"a", "b", "c", "d", "e", "f"},
                                {"a*e - b*d + a*b*c*d*e*f", "a*f - c*d", "b*f - c*e"});
  const auto D = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gr_presentation(r, D));
}
BENCHMARK(BM_GrPresentation)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_SplittingColon(benchmark::State& state) {
  auto r = QuotientRing::create(3, {"x", "y", "z"}, {"x*y", "x*z"});
  for (auto _ : state) benchmark::DoNotOptimize(splitting_colon(r, 3));
}
BENCHMARK(BM_SplittingColon)->Unit(benchmark::kMillisecond);

}  // namespace

// The packaged benchmark_main archive carries LTO bytecode from another
// compiler release, so the entry point lives here.
BENCHMARK_MAIN();
