#include <doctest.h>

#include <random>

#include "stabwit/lp.hpp"

using namespace stabwit;

namespace {

WitnessCandidate random_candidate(const FeasibleRegionModel& r,
                                  std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::uniform_real_distribution<double> offset(0.0, 2.0);
  WitnessCandidate w;
  w.a0 = offset(rng);
  for (const auto& c : r.coordinates) w.terms[c.label] = coeff(rng);
  w.family = r.family;
  w.variant = r.variant;
  w.n = r.n;
  w.m = r.m;
  return w;
}

}  // namespace

TEST_CASE("simplex minimum equals the vertex minimum") {
  std::mt19937_64 rng(23);
  for (const auto& r :
       {build_region(Family::GHZ, RegionVariant::Even, 4),
        build_region(Family::Cluster, RegionVariant::Odd, 5, 1),
        build_region(Family::FiveQubit, RegionVariant::Exceptional, 5)}) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto w = random_candidate(r, rng);
      CHECK(simplex_min(w, r).min ==
            doctest::Approx(vertex_min(w, r).min).epsilon(1e-9));
    }
  }
}

TEST_CASE("duplicated constraints do not change the minimum") {
  std::mt19937_64 rng(29);
  auto r = build_region(Family::GHZ, RegionVariant::Even, 3);
  const auto w = random_candidate(r, rng);
  const double base = simplex_min(w, r).min;
  r.halfspaces.push_back(r.halfspaces.front());
  CHECK(simplex_min(w, r).min == doctest::Approx(base).epsilon(1e-10));
}

TEST_CASE("the minimum scales linearly with the candidate") {
  std::mt19937_64 rng(31);
  const auto r = build_region(Family::GHZ, RegionVariant::Even, 3);
  auto w = random_candidate(r, rng);
  const double base = simplex_min(w, r).min;
  w.a0 *= 2.5;
  for (auto& [label, coeff] : w.terms) coeff *= 2.5;
  CHECK(simplex_min(w, r).min == doctest::Approx(2.5 * base).epsilon(1e-10));
}

TEST_CASE("the LP argmin satisfies every half-space") {
  std::mt19937_64 rng(37);
  const auto r = build_region(Family::GHZ, RegionVariant::Even, 4);
  const auto w = random_candidate(r, rng);
  const auto res = simplex_min(w, r);
  for (const auto& hs : r.halfspaces) {
    const double value = r.halfspace_row(hs).dot(res.argmin);
    CHECK(value <= hs.bound + 1e-9);
    if (hs.two_sided) CHECK(value >= -hs.bound - 1e-9);
  }
}

TEST_CASE("parameter conditions agree with the LP verdict") {
  for (const auto& r :
       {build_region(Family::GHZ, RegionVariant::Even, 3),
        build_region(Family::Cluster, RegionVariant::Even, 4, 2)}) {
    const auto rep = conditions_equiv_check(r, 50);
    CHECK(rep.ok);
    CHECK(rep.counterexamples == 0);
  }
}
