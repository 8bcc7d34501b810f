#pragma once

#include <vector>

#include "stabwit/dense.hpp"
#include "stabwit/pauli.hpp"

namespace stabwit {

enum class GateKind { H, M, Mdg, CN, SW, X, Y, Z };

struct Gate {
  GateKind kind;
  int s1 = 0;  // 1-based site (control for CN)
  int s2 = 0;  // target for CN / second site for SW
};

/// An ordered Clifford circuit on n qubits; the first listed gate acts first
/// on states, so the circuit's unitary is U = G_last ... G_first.
struct CliffordOp {
  int n = 0;
  std::vector<Gate> circuit;

  static CliffordOp identity(int n) { return CliffordOp{n, {}}; }
  CliffordOp& then(GateKind kind, int s1, int s2 = 0);
};

/// Conjugation U p U^dagger via tableau rules with exact sign tracking.
PauliString conjugate(const CliffordOp& op, const PauliString& p);

/// Term-wise conjugation; sign flips are absorbed into coefficients.
PauliCombo conjugate_combo(const CliffordOp& op, const PauliCombo& w);

/// Dense unitary of the circuit (first gate rightmost in the product).
Matrix dense_unitary(const CliffordOp& op);

/// Closure of the seeds under conjugation by every listed move, deduplicated
/// by canonical term ordering. Throws if the closure exceeds `cap`.
std::vector<PauliCombo> orbit_expand(const std::vector<PauliCombo>& seeds,
                                     const std::vector<CliffordOp>& moves,
                                     std::size_t cap = 10000);

}  // namespace stabwit
