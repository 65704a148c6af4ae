#include "latdyn/cf.hpp"
#include "latdyn/cubic.hpp"
#include "latdyn/dioph.hpp"
#include "latdyn/groups.hpp"
#include "latdyn/lattice2.hpp"
#include "latdyn/rng.hpp"
#include "latdyn/section.hpp"
#include "latdyn/walk.hpp"

#include <benchmark/benchmark.h>

using namespace latdyn;

namespace {

void BM_ReduceFundamental(benchmark::State& state) {
  Xoshiro256 rng(1);
  std::vector<Complex> zs(1024);
  for (auto& z : zs) z = {20 * uniform01(rng) - 10, std::exp(-8 * uniform01(rng))};
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(reduce_fundamental(zs[i++ & 1023]));
}
BENCHMARK(BM_ReduceFundamental);

template <class T>
void BM_Shape(benchmark::State& state) {
  Xoshiro256 rng(2);
  std::vector<Lattice2<T>> ls;
  while (ls.size() < 256) {
    Vec3<T> u, w;
    for (std::size_t k = 0; k < 3; ++k) {
      u[k] = convert<T>(std::round(1000 * uniform01(rng)) - 500);
      w[k] = convert<T>(std::round(1000 * uniform01(rng)) - 500);
    }
    if (!is_zero(wedge2(u, w))) ls.emplace_back(u, w);
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(shape(ls[i++ & 255]));
}
BENCHMARK(BM_Shape<double>);
BENCHMARK(BM_Shape<Rational>);

// Walk steps per second; the range is the step count.
void BM_Walk(benchmark::State& state) {
  const MeasureSpec mu = builtin_measure("I");
  const auto steps = static_cast<std::uint64_t>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(run_walk(mu, Lattice2<double>(), steps, seed++, WalkOptions{1000, {10.0}}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Walk)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_Lyapunov(benchmark::State& state) {
  const MeasureSpec mu = builtin_measure("II-a");
  for (auto _ : state) benchmark::DoNotOptimize(estimate_lyapunov(mu, 10000, 4, 1, 1));
  state.SetItemsProcessed(state.iterations() * 40000);
}
BENCHMARK(BM_Lyapunov)->Unit(benchmark::kMillisecond);

void BM_Equivariance(benchmark::State& state) {
  Xoshiro256 rng(3);
  std::vector<ProjPoint<Rational>> ts;
  for (int i = 0; i < 256; ++i) {
    Rational v(static_cast<long>(uniform_index(rng, 2000001)) - 1000000, static_cast<long>(uniform_index(rng, 1000000) + 1));
    v.canonicalize();
    ts.push_back(ProjPoint<Rational>::finite(v));
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(equivariance_check(ts[i++ & 255], Side::Plus));
}
BENCHMARK(BM_Equivariance);

// Exact SO(Q) word products; entries grow with the length.
void BM_SOQWord(benchmark::State& state) {
  const MeasureSpec mu = builtin_measure("gamma0k");
  Xoshiro256 rng(4);
  for (auto _ : state) {
    const WordSample w = sample_word(mu, rng, static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(check_SOQ(w.product));
  }
}
BENCHMARK(BM_SOQWord)->Arg(25)->Arg(200);

void BM_CfSurd(benchmark::State& state) {
  const QuadraticSurd s{3, 1009, 7};
  for (auto _ : state) benchmark::DoNotOptimize(cf_expand(s, 100));
}
BENCHMARK(BM_CfSurd);

void BM_CfInterval(benchmark::State& state) {
  const RealSource pi = parse_real("pi");
  for (auto _ : state) benchmark::DoNotOptimize(cf_expand(pi, 100));
}
BENCHMARK(BM_CfInterval);

void BM_AOrbitScan(benchmark::State& state) {
  const auto preset = furstenberg_presets().front();
  std::array<RealSource, 3> r{parse_real(preset.ratios[0]), parse_real(preset.ratios[1]), parse_real(preset.ratios[2])};
  const auto n = static_cast<std::size_t>(state.range(0));
  if (state.range(1)) {
    const Lattice2<BigFloat> l = furstenberg_lattice_big(r);
    for (auto _ : state) benchmark::DoNotOptimize(a_orbit_scan(l, 8, 8, n, n, 1));
  } else {
    const Lattice2<double> l = furstenberg_lattice(r);
    for (auto _ : state) benchmark::DoNotOptimize(a_orbit_scan(l, 8, 8, n, n, 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_AOrbitScan)->Args({41, 0})->Args({41, 1})->Unit(benchmark::kMillisecond);

void BM_UnitSearch(benchmark::State& state) {
  const CubicFieldSpec k = cubic_field(parse_cubic("x^3-3x-1"));
  for (auto _ : state) benchmark::DoNotOptimize(unit_search(k, state.range(0)));
}
BENCHMARK(BM_UnitSearch)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
