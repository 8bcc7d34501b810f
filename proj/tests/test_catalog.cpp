#include <doctest.h>

#include "stabwit/catalog.hpp"
#include "stabwit/dense.hpp"

using namespace stabwit;

namespace {

void check_stabilized(Family f, int n, const std::string& labels) {
  const Vector psi = basis_state(f, n, labels);
  CHECK(std::abs(psi.norm() - 1.0) < 1e-12);
  for (const auto& g : generators(f, n)) {
    // Labeled basis states are +-1 eigenstates with label-determined signs.
    const Vector mapped = to_dense(g) * psi;
    const double err = std::min((mapped - psi).cwiseAbs().maxCoeff(),
                                (mapped + psi).cwiseAbs().maxCoeff());
    CHECK(err < 1e-10);
  }
}

}  // namespace

TEST_CASE("generator counts match the code dimension") {
  for (const auto& [f, n] :
       std::vector<std::pair<Family, int>>{{Family::GHZ, 4},
                                           {Family::Cluster, 5},
                                           {Family::FiveQubit, 5},
                                           {Family::SevenQubit, 7},
                                           {Family::EightQubit, 8},
                                           {Family::NineQubit, 9},
                                           {Family::Phi, 4}}) {
    const int k = family_code_dimension_k(f, n);
    CHECK(static_cast<int>(generators(f, n).size()) == n - k);
  }
}

TEST_CASE("group enumeration is duplicate-free and closed") {
  const auto gens = generators(Family::FiveQubit, 5);
  const auto group = enumerate_group(gens);
  CHECK(group.size() == 16);
  CHECK(group[0].is_identity_pattern());
}

TEST_CASE("basis states are stabilized") {
  check_stabilized(Family::GHZ, 4, "");
  check_stabilized(Family::GHZ, 4, "1");
  check_stabilized(Family::Cluster, 5, "");
  check_stabilized(Family::FiveQubit, 5, "0");
  check_stabilized(Family::FiveQubit, 5, "1");
  check_stabilized(Family::SevenQubit, 7, "ev");
  check_stabilized(Family::SevenQubit, 7, "od");
  check_stabilized(Family::EightQubit, 8, "101");
  check_stabilized(Family::NineQubit, 9, "+");
  check_stabilized(Family::NineQubit, 9, "-");
  check_stabilized(Family::Phi, 4, "1100");
}

TEST_CASE("projector equals the group average") {
  const Matrix p = stabilized_projector(Family::GHZ, 3);
  CHECK((p * p - p).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(std::abs(p.trace().real() - 1.0) < 1e-12);  // rank 2^k with k = 0
}

TEST_CASE("GHZ standard form is the star graph") {
  GraphForm gf = stabilizer_matrix(generators(Family::GHZ, 3));
  complete_gamma(gf);
  standard_form(gf);
  CHECK(gf.adjacency == std::vector<std::uint32_t>{0b110, 0b001, 0b001});
  CHECK(gf.qubit_perm == std::vector<int>{0, 1, 2});
}

TEST_CASE("standard form is idempotent") {
  GraphForm gf = stabilizer_matrix(generators(Family::Cluster, 4));
  complete_gamma(gf);
  standard_form(gf);
  const auto adjacency = gf.adjacency;
  // Re-run on the reduced [I|A] rows.
  GraphForm again;
  again.n = gf.n;
  again.gamma_x = gf.gamma_x;
  again.gamma_z = gf.gamma_z;
  standard_form(again);
  CHECK(again.adjacency == adjacency);
}
