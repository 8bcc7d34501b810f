#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

#include "stabwit/pauli.hpp"

namespace stabwit {

/// A pure product state given by one Bloch unit vector per site.
struct ProductState {
  std::vector<Eigen::Vector3d> bloch;

  int n() const { return static_cast<int>(bloch.size()); }
};

struct OracleOptions {
  std::uint64_t seed = 12345;
  int restarts = 64;
  int max_sweeps = 200;
  double tol = 1e-9;
};

struct OracleResult {
  double value = 0.0;
  ProductState state;
  int restarts_used = 0;
};

/// <W> on a pure product state: each term contributes its coefficient times
/// the product of per-site Bloch components selected by the term's letters.
double expectation(const PauliCombo& w, const ProductState& s);

/// <W> on a convex mixture of product states (weights need not be
/// normalized; the raw weighted sum is returned).
double mixture_expectation(
    const PauliCombo& w,
    const std::vector<std::pair<double, ProductState>>& mixture);

/// max |<W>| over pure product states via seeded random restarts of
/// alternating single-site optimization. Exact on convergence of every
/// restart to the same basin; a lower bound in general.
OracleResult maximize_abs(const PauliCombo& w, OracleOptions opts = {});

/// min <W> over pure product states (same alternating scheme).
OracleResult min_over_products(const PauliCombo& w, OracleOptions opts = {});

struct HalfspaceCheck {
  bool ok = false;       // max |<W>| <= bound + tol
  double max_abs = 0.0;  // best value found
  double bound = 0.0;
  ProductState argmax;
};

/// Numerically verifies that |<W>| <= bound over product states.
HalfspaceCheck verify_halfspace(
    const PauliCombo& w, double bound,
    OracleOptions opts = {.seed = 12345, .restarts = 256, .tol = 1e-6});

}  // namespace stabwit
