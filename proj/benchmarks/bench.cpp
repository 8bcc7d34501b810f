#include <benchmark/benchmark.h>

#include <random>

#include "stabwit/catalog.hpp"
#include "stabwit/lp.hpp"
#include "stabwit/oracle.hpp"
#include "stabwit/region.hpp"
#include "stabwit/witness.hpp"

namespace {

using namespace stabwit;

WitnessCandidate sample_candidate(const FeasibleRegionModel& r,
                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  WitnessCandidate w;
  w.a0 = 1.0;
  for (const auto& c : r.coordinates) w.terms[c.label] = coeff(rng);
  w.family = r.family;
  w.variant = r.variant;
  w.n = r.n;
  w.m = r.m;
  return w;
}

void BM_BuildRegionGhzEven(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_region(Family::GHZ, RegionVariant::Even, n));
  }
}
BENCHMARK(BM_BuildRegionGhzEven)->Arg(4)->Arg(6)->Arg(8);

void BM_SimplexMin(benchmark::State& state) {
  const auto r = build_region(Family::GHZ, RegionVariant::Even,
                              static_cast<int>(state.range(0)));
  const auto w = sample_candidate(r, 17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(simplex_min(w, r));
  }
}
BENCHMARK(BM_SimplexMin)->Arg(4)->Arg(6);

void BM_VertexMin(benchmark::State& state) {
  const auto r = build_region(Family::GHZ, RegionVariant::Even,
                              static_cast<int>(state.range(0)));
  const auto w = sample_candidate(r, 17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(vertex_min(w, r));
  }
}
BENCHMARK(BM_VertexMin)->Arg(4)->Arg(6);

void BM_Spectrum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto gens = generators(Family::GHZ, n);
  PauliCombo w(n);
  w.add(PauliString(n, 0, 0), 1.0);
  for (std::size_t i = 0; i < gens.size(); ++i)
    w.add(gens[i], 0.1 * static_cast<double>(i + 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectrum(w));
  }
}
BENCHMARK(BM_Spectrum)->Arg(4)->Arg(6)->Arg(9);

void BM_OracleMaximize(benchmark::State& state) {
  const auto r = build_region(Family::GHZ, RegionVariant::Even, 4);
  const auto w = r.halfspace_combo(r.halfspaces.front());
  OracleOptions opts;
  opts.restarts = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(maximize_abs(w, opts));
  }
}
BENCHMARK(BM_OracleMaximize)->Arg(8)->Arg(64);

void BM_OrbitExpand(benchmark::State& state) {
  const auto r = build_region(Family::GHZ, RegionVariant::Even, 4);
  const auto gs = generating_set(r);
  for (auto _ : state) {
    benchmark::DoNotOptimize(orbit_expand(gs.seeds, gs.moves));
  }
}
BENCHMARK(BM_OrbitExpand);

}  // namespace

BENCHMARK_MAIN();
