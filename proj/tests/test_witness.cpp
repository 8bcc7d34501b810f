#include <doctest.h>

#include <random>

#include "stabwit/catalog.hpp"
#include "stabwit/dense.hpp"
#include "stabwit/witness.hpp"

using namespace stabwit;

TEST_CASE("sign-formula spectra match dense eigensolves") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  const auto gens = generators(Family::Cluster, 3);
  for (int trial = 0; trial < 20; ++trial) {
    PauliCombo w(3);
    w.add(PauliString(3, 0, 0), coeff(rng));
    for (const auto& g : gens) w.add(g, coeff(rng));
    w.add(multiply(gens[0], gens[1]), coeff(rng));
    const auto rec = spectrum(w);
    CHECK(rec.method == "sign-formula");
    const Eigen::VectorXd dense = eigenvalues_dense(to_dense(w));
    for (int i = 0; i < dense.size(); ++i)
      CHECK(rec.eigenvalues[i] == doctest::Approx(dense[i]).epsilon(1e-10));
  }
}

TEST_CASE("non-commuting combos fall back to the dense path") {
  PauliCombo w(2);
  w.add(PauliString::parse("XI"), 1.0);
  w.add(PauliString::parse("ZI"), 1.0);
  const auto rec = spectrum(w);
  CHECK(rec.method == "dense");
  CHECK(rec.min() == doctest::Approx(-std::sqrt(2.0)));
}

TEST_CASE("densities build, pair and detect consistently") {
  const auto rho = build_stabilizer_density(
      Family::GHZ, 4,
      {{0, 1.0 / 16}, {1, -1.0 / 32}, {3, -1.0 / 32}, {9, -1.0 / 32},
       {11, 1.0 / 32}});
  CHECK_FALSE(is_separable_by_bound(rho));
  for (const auto& [subset, value] : ppt_check(rho)) CHECK(value >= -1e-10);

  const auto gens = generators(Family::GHZ, 4);
  PauliCombo w(4);
  w.add(PauliString(4, 0, 0), 1.0);
  w.add(gens[0], 1.0);
  w.add(gens[1], 1.0);
  w.add(multiply(gens[0], gens[1]), 1.0);
  w.add(multiply(gens[0], gens[3]), 1.0);
  CHECK(detect(w, rho) == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("positivity violations are rejected") {
  CHECK_THROWS(build_stabilizer_density(Family::GHZ, 2,
                                        {{0, 0.25}, {1, 0.5}}));
  CHECK_THROWS(build_stabilizer_density(Family::GHZ, 2,
                                        {{0, 0.3}, {1, 0.1}}));
}

TEST_CASE("optimality sign test") {
  const auto gens = generators(Family::GHZ, 3);
  PauliCombo optimal(3), nonopt(3);
  optimal.add(PauliString(3, 0, 0), 1.0);
  optimal.add(gens[0], -1.0);
  optimal.add(gens[1], -1.0);
  optimal.add(multiply(gens[0], gens[1]), -1.0);
  CHECK(is_optimal_form(optimal).verdict == Optimality::Optimal);
  nonopt.add(PauliString(3, 0, 0), 1.0);
  nonopt.add(gens[0], -1.0);
  nonopt.add(gens[2], -1.0);
  nonopt.add(multiply(gens[0], gens[1]), -1.0);
  CHECK(is_optimal_form(nonopt).verdict == Optimality::NonOptimal);

  PauliCombo interior(3);
  interior.add(PauliString(3, 0, 0), 1.0);
  interior.add(gens[0], -0.5);
  CHECK(is_optimal_form(interior).verdict == Optimality::NotApplicable);
}

TEST_CASE("decomposability certificates") {
  const auto gens = generators(Family::GHZ, 3);
  PauliCombo w(3);
  w.add(PauliString(3, 0, 0), 1.0);
  w.add(gens[0], -1.0);
  w.add(gens[1], -1.0);
  w.add(multiply(gens[0], gens[1]), -1.0);
  const auto ev = decomposability_evidence(w, 3);
  CHECK(ev.verdict == Decomposability::Decomposable);
  CHECK(!ev.pt_subset.empty());
}

TEST_CASE("locally commuting operators are never witnesses") {
  PauliCombo w(3);
  w.add(PauliString(3, 0, 0), 0.5);
  w.add(PauliString::parse("ZZI"), -0.7);
  w.add(PauliString::parse("IZZ"), 0.3);
  const auto check = locally_commuting_no_witness_check(w);
  CHECK(check.applicable);
  CHECK(check.ok);
  CHECK(check.witness_excluded);
  CHECK(check.min_product == doctest::Approx(check.min_eigenvalue));
}
