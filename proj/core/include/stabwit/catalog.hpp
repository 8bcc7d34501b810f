#pragma once

#include <string>
#include <vector>

#include "stabwit/dense.hpp"
#include "stabwit/pauli.hpp"

namespace stabwit {

enum class Family { GHZ, Cluster, FiveQubit, SevenQubit, EightQubit,
                    NineQubit, Phi };

Family family_from_name(const std::string& name);
std::string family_name(Family f);

/// Fixed qubit count for the exceptional families; 0 for free-n families.
int family_fixed_n(Family f);

/// Dimension exponent k of the stabilized code space (2^k states).
int family_code_dimension_k(Family f, int n);

/// Generator list for (family, n). Throws on an unsupported pair.
std::vector<PauliString> generators(Family f, int n);

/// All 2^m products of the generators, identity first, then ascending by
/// bit pattern. Throws if the generators are dependent (duplicate element).
std::vector<PauliString> enumerate_group(
    const std::vector<PauliString>& gens);

/// (1/2^{n-k}) * sum of the group as a dense matrix.
Matrix stabilized_projector(Family f, int n);

/// Dense stabilized basis state selected by the family's label convention:
/// GHZ: bit labels i1..im (m <= n, padded with 0): (sz)^{i1} x (sx)^{i2} ...
/// Cluster: empty label -> |C_n>; FiveQubit: one bit; SevenQubit: "ev"/"od";
/// EightQubit: three bits (logical X1^a X2^b X3^c); NineQubit: "+"/"-";
/// Phi: even-parity bit label of length n.
Vector basis_state(Family f, int n, const std::string& labels);

struct GraphForm {
  // (n-k) x 2n binary stabilizer matrix [X|Z], one row per generator.
  std::vector<std::uint32_t> x_rows;
  std::vector<std::uint32_t> z_rows;
  // n x 2n completion (rows independent over GF(2)).
  std::vector<std::uint32_t> gamma_x;
  std::vector<std::uint32_t> gamma_z;
  // n x n adjacency of the reduced standard form [I|A].
  std::vector<std::uint32_t> adjacency;
  // Qubit permutation applied during reduction: column pair perm[i] of the
  // input occupies position i of the standard form (0-based).
  std::vector<int> qubit_perm;
  int n = 0;
};

/// Encodes generators as the binary [X|Z] stabilizer matrix.
GraphForm stabilizer_matrix(const std::vector<PauliString>& gens);

/// Completes [X|Z] to a full-rank n x 2n Gamma by appending the
/// lexicographically smallest independent rows.
void complete_gamma(GraphForm& gf);

/// Reduces Gamma to the standard form [I|A] by GF(2) row operations,
/// qubit-pair column permutations (densest-column pivoting) and
/// X<->Z Hadamard column swaps; fills adjacency and qubit_perm.
void standard_form(GraphForm& gf);

}  // namespace stabwit
