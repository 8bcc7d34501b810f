#include <doctest.h>

#include "stabwit/dense.hpp"
#include "stabwit/pauli.hpp"

using namespace stabwit;

TEST_CASE("parse and print round-trip") {
  for (const char* text : {"XIZY", "-YY", "XX", "ZZZZZ", "IIIII"}) {
    CHECK(PauliString::parse(text).str() == text);
  }
  CHECK(PauliString::parse("+XZ").str() == "XZ");
  CHECK_THROWS(PauliString::parse("XQ"));
  CHECK_THROWS(PauliString::parse("XZ", 3));
}

TEST_CASE("single-qubit products carry the right phase") {
  const auto X = PauliString::parse("X");
  const auto Y = PauliString::parse("Y");
  const auto Z = PauliString::parse("Z");
  CHECK(multiply(X, Y) == Z.with_phase_exp(1));   // XY = iZ
  CHECK(multiply(Y, X) == Z.with_phase_exp(3));   // YX = -iZ
  CHECK(multiply(X, Z) == Y.with_phase_exp(3));   // XZ = -iY
  CHECK(multiply(X, X).is_identity_pattern());
  CHECK(multiply(X, X).phase_exp() == 0);
}

TEST_CASE("products agree with dense matrices") {
  const auto p = PauliString::parse("XYZI");
  const auto q = PauliString::parse("-YYXZ");
  const Matrix lhs = to_dense(multiply(p, q));
  const Matrix rhs = to_dense(p) * to_dense(q);
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("commutation predicates") {
  const auto xx = PauliString::parse("XX");
  const auto zz = PauliString::parse("ZZ");
  const auto zi = PauliString::parse("ZI");
  CHECK(commutes(xx, zz));
  CHECK_FALSE(locally_commutes(xx, zz));
  CHECK_FALSE(commutes(xx, zi));
  CHECK(locally_commutes(zz, zi));
}

TEST_CASE("partial transpose flips one sign per Y in the subset") {
  const auto p = PauliString::parse("YYX");
  CHECK(partial_transpose(p, {1}) == p.negated());
  CHECK(partial_transpose(p, {1, 2}) == p);
  CHECK(partial_transpose(p, {3}) == p);
  const Matrix dense =
      partial_transpose_dense(to_dense(p), 3, {1});
  CHECK((dense - to_dense(p.negated())).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("Hilbert-Schmidt pairing") {
  const auto p = PauliString::parse("XZ");
  CHECK(hs_inner(p, p) == doctest::Approx(4.0));
  CHECK(hs_inner(p, p.negated()) == doctest::Approx(-4.0));
  CHECK(hs_inner(p, PauliString::parse("XX")) == doctest::Approx(0.0));
}

TEST_CASE("combos normalize phases into coefficients") {
  PauliCombo w(2);
  w.add(PauliString::parse("-XZ"), 0.5);
  w.add(PauliString::parse("XZ"), 0.25);
  CHECK(w.coeff(PauliString::parse("XZ")) == doctest::Approx(-0.25));
  w.add(PauliString::parse("XZ"), 0.25);
  CHECK(w.empty());
}

TEST_CASE("canonical keys give set semantics") {
  PauliCombo a(2), b(2);
  a.add(PauliString::parse("XX"), 1.0);
  a.add(PauliString::parse("ZZ"), -1.0);
  b.add(PauliString::parse("ZZ"), -1.0);
  b.add(PauliString::parse("XX"), 1.0);
  CHECK(a.canonical_key() == b.canonical_key());
  CHECK(a == b);
}
