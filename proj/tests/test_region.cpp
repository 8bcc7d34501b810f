#include <doctest.h>

#include <set>

#include "stabwit/region.hpp"

using namespace stabwit;

TEST_CASE("exact models pass the consistency check") {
  const std::vector<FeasibleRegionModel> models = {
      build_region(Family::GHZ, RegionVariant::Even, 4),
      build_region(Family::GHZ, RegionVariant::Odd, 5),
      build_region(Family::Cluster, RegionVariant::Even, 4, 2),
      build_region(Family::Cluster, RegionVariant::Odd, 3, 1),
      build_region(Family::FiveQubit, RegionVariant::Exceptional, 5),
  };
  for (const auto& r : models) {
    const auto rep = check_region_consistency(r);
    INFO(family_name(r.family) << " n=" << r.n);
    if (!rep.violations.empty()) { INFO(rep.violations[0]); }
    CHECK(rep.ok);
    CHECK(rep.max_constructor_error < 1e-10);
    CHECK(rep.unsupported_halfspaces == 0);
  }
}

TEST_CASE("approximate models contain their product clouds") {
  for (const auto& r :
       {build_region_approx(Family::GHZ, RegionVariant::Even, 4, "S1S3"),
        build_region_approx(Family::Cluster, RegionVariant::Odd, 5, "S1S2")}) {
    const auto rep = check_region_consistency(r, 500);
    if (!rep.violations.empty()) { INFO(rep.violations[0]); }
    CHECK(rep.ok);
    CHECK(rep.max_point_violation < 1e-9);
  }
}

TEST_CASE("unsupported approximate sizes are refused") {
  CHECK_THROWS(build_region_approx(Family::GHZ, RegionVariant::Even, 6, "S1S3"));
  CHECK_THROWS(build_region_approx(Family::Cluster, RegionVariant::Odd, 7, "S1S2"));
}

TEST_CASE("4-qubit GHZ boundary has 48 operators generated by 5 seeds") {
  const auto r = build_region(Family::GHZ, RegionVariant::Even, 4);
  const auto ops = halfspace_operators(r);
  CHECK(ops.size() == 48);
  const auto gs = generating_set(r);
  CHECK(gs.seeds.size() == 5);
  CHECK(gs.moves.size() == 12);
  const auto orbit = orbit_expand(gs.seeds, gs.moves);
  std::set<std::string> want, got;
  for (const auto& op : ops) want.insert(op.canonical_key());
  for (const auto& op : orbit) got.insert(op.canonical_key());
  CHECK(want == got);
}

TEST_CASE("vertex states reproduce their coordinate rows") {
  const auto r = build_region(Family::Cluster, RegionVariant::Odd, 5, 2);
  REQUIRE(!r.vertices.empty());
  const Vector psi = vertex_state(r, 0);
  CHECK(std::abs(psi.norm() - 1.0) < 1e-12);
}
