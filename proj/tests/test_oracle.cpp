#include <doctest.h>

#include <random>

#include "stabwit/dense.hpp"
#include "stabwit/oracle.hpp"

using namespace stabwit;

namespace {

Vector bloch_ket(const Eigen::Vector3d& b) {
  // |psi><psi| = (I + b.sigma)/2; ket up to phase.
  const double theta = std::acos(std::clamp(b.z(), -1.0, 1.0));
  const double phi = std::atan2(b.y(), b.x());
  Vector v(2);
  v << std::cos(theta / 2.0),
      std::exp(std::complex<double>(0, phi)) * std::sin(theta / 2.0);
  return v;
}

}  // namespace

TEST_CASE("expectation matches the dense value on random product states") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> normal;
  const int n = 3;
  PauliCombo w(n);
  w.add(PauliString::parse("XYZ"), 0.7);
  w.add(PauliString::parse("ZZI"), -0.4);
  w.add(PauliString::parse("IXX"), 0.2);
  for (int trial = 0; trial < 20; ++trial) {
    ProductState s;
    Vector psi = Vector::Ones(1);
    for (int site = 0; site < n; ++site) {
      Eigen::Vector3d b(normal(rng), normal(rng), normal(rng));
      b.normalize();
      s.bloch.push_back(b);
      psi = kron(psi, bloch_ket(b));
    }
    const double dense = (psi.adjoint() * to_dense(w) * psi)(0).real();
    CHECK(expectation(w, s) == doctest::Approx(dense).epsilon(1e-10));
  }
}

TEST_CASE("oracle reaches known product maxima") {
  PauliCombo zz(2);
  zz.add(PauliString::parse("ZZ"), 1.0);
  CHECK(maximize_abs(zz).value == doctest::Approx(1.0));

  // |<XX> + <ZZ>| caps at 1 on product states.
  PauliCombo bell(2);
  bell.add(PauliString::parse("XX"), 1.0);
  bell.add(PauliString::parse("ZZ"), 1.0);
  const auto res = verify_halfspace(bell, 1.0);
  CHECK(res.ok);
  CHECK(res.max_abs == doctest::Approx(1.0).epsilon(1e-6));

  PauliCombo shifted(2);
  shifted.add(PauliString(2, 0, 0), 2.0);
  shifted.add(PauliString::parse("ZI"), 1.0);
  CHECK(min_over_products(shifted).value == doctest::Approx(1.0));
}
