#include <doctest.h>

#include <random>

#include "stabwit/clifford.hpp"
#include "stabwit/dense.hpp"

using namespace stabwit;

TEST_CASE("elementary conjugation goldens") {
  CHECK(conjugate(CliffordOp::identity(1).then(GateKind::H, 1),
                  PauliString::parse("X")) == PauliString::parse("Z"));
  CHECK(conjugate(CliffordOp::identity(1).then(GateKind::H, 1),
                  PauliString::parse("Y")) == PauliString::parse("-Y"));
  CHECK(conjugate(CliffordOp::identity(1).then(GateKind::M, 1),
                  PauliString::parse("X")) == PauliString::parse("Y"));
  CHECK(conjugate(CliffordOp::identity(1).then(GateKind::Mdg, 1),
                  PauliString::parse("Y")) == PauliString::parse("X"));
  CHECK(conjugate(CliffordOp::identity(2).then(GateKind::CN, 1, 2),
                  PauliString::parse("YY")) == PauliString::parse("-XZ"));
  CHECK(conjugate(CliffordOp::identity(2).then(GateKind::SW, 1, 2),
                  PauliString::parse("XZ")) == PauliString::parse("ZX"));
}

TEST_CASE("tableau conjugation matches the dense unitary on random circuits") {
  std::mt19937_64 rng(7);
  const int n = 3;
  for (int trial = 0; trial < 25; ++trial) {
    CliffordOp op = CliffordOp::identity(n);
    for (int g = 0; g < 6; ++g) {
      const int kind = static_cast<int>(rng() % 5);
      const int s1 = 1 + static_cast<int>(rng() % n);
      int s2 = 1 + static_cast<int>(rng() % n);
      while (s2 == s1) s2 = 1 + static_cast<int>(rng() % n);
      switch (kind) {
        case 0: op.then(GateKind::H, s1); break;
        case 1: op.then(GateKind::M, s1); break;
        case 2: op.then(GateKind::Mdg, s1); break;
        case 3: op.then(GateKind::CN, s1, s2); break;
        default: op.then(GateKind::SW, s1, s2); break;
      }
    }
    const std::uint32_t x = static_cast<std::uint32_t>(rng() % 8);
    const std::uint32_t z = static_cast<std::uint32_t>(rng() % 8);
    const PauliString p(n, x, z);
    const Matrix u = dense_unitary(op);
    const Matrix expected = u * to_dense(p) * u.adjoint();
    CHECK((to_dense(conjugate(op, p)) - expected).cwiseAbs().maxCoeff() <
          1e-12);
  }
}

TEST_CASE("orbit expansion closes and deduplicates") {
  PauliCombo seed(1);
  seed.add(PauliString::parse("X"), 1.0);
  const std::vector<CliffordOp> moves = {
      CliffordOp::identity(1).then(GateKind::Z, 1)};
  const auto orbit = orbit_expand({seed}, moves);
  CHECK(orbit.size() == 2);  // +X and -X
}
