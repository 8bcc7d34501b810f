#include <doctest.h>

#include <cmath>

#include "stabwit/json_io.hpp"

using namespace stabwit;

TEST_CASE("combos round-trip through JSON") {
  PauliCombo w(3);
  w.add(PauliString::parse("XYZ"), 0.125);
  w.add(PauliString::parse("-ZZI"), 1.0 / 3.0);
  const PauliCombo back = combo_from_json(to_json(w));
  CHECK(back == w);
}

TEST_CASE("clifford circuits round-trip through JSON") {
  CliffordOp op = CliffordOp::identity(4);
  op.then(GateKind::H, 1).then(GateKind::CN, 2, 4).then(GateKind::Mdg, 3);
  const CliffordOp back = clifford_from_json(to_json(op));
  REQUIRE(back.circuit.size() == op.circuit.size());
  const PauliString probe = PauliString::parse("XZYX");
  CHECK(conjugate(back, probe) == conjugate(op, probe));
}

TEST_CASE("witness candidates round-trip through JSON") {
  WitnessCandidate w;
  w.a0 = 0.75;
  w.terms = {{"P1", -1.0}, {"P1,2", 0.5}};
  w.family = Family::GHZ;
  w.variant = RegionVariant::Even;
  w.n = 4;
  const WitnessCandidate back = witness_from_json(to_json(w));
  CHECK(back.a0 == w.a0);
  CHECK(back.terms == w.terms);
  CHECK(back.family == w.family);
  CHECK(back.n == w.n);
}

TEST_CASE("regions rebuild from their parameters") {
  const auto r = build_region(Family::Cluster, RegionVariant::Even, 4, 2);
  const auto back = region_from_json(to_json(r));
  CHECK(back.n == r.n);
  CHECK(back.m == r.m);
  CHECK(back.vertices.size() == r.vertices.size());
  CHECK(back.halfspaces.size() == r.halfspaces.size());

  const auto a = build_region_approx(Family::GHZ, RegionVariant::Even, 4, "S1S3");
  const auto aback = region_from_json(to_json(a));
  CHECK(aback.approximate);
  CHECK(aback.mu == doctest::Approx(a.mu));
  CHECK(aback.vertices.size() == a.vertices.size());
}

TEST_CASE("densities round-trip and re-validate") {
  const auto d = build_stabilizer_density(
      Family::Cluster, 4,
      {{0, 1.0 / 16}, {2, 1.0 / 32}, {3, 1.0 / 32}, {6, 1.0 / 32},
       {7, -1.0 / 32}});
  const auto back = density_from_json(to_json(d));
  CHECK(back.b == d.b);
  CHECK(back.combo == d.combo);
}

TEST_CASE("known constants get symbolic tags") {
  CHECK(symbolic_tag((1.0 + std::sqrt(2.0)) / 2.0).value() == "(1+sqrt2)/2");
  CHECK(symbolic_tag(2.0 / std::sqrt(3.0)).value() == "2/sqrt3");
  CHECK_FALSE(symbolic_tag(0.1234).has_value());
  const Json j = number_with_symbol(2.0 / std::sqrt(3.0));
  CHECK(j.at("symbol") == "2/sqrt3");
}

TEST_CASE("config defaults survive partial JSON") {
  const RunConfig cfg = config_from_json(Json{{"seed", 99}});
  CHECK(cfg.seed == 99);
  CHECK(cfg.restarts == 64);
  CHECK(cfg.tol_lp == 1e-9);
}
