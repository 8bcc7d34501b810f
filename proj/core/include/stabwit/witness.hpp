#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "stabwit/dense.hpp"
#include "stabwit/lp.hpp"
#include "stabwit/pauli.hpp"
#include "stabwit/region.hpp"

namespace stabwit {

struct SpectrumRecord {
  std::vector<double> eigenvalues;  // ascending, with multiplicity
  std::string method;               // "sign-formula" or "dense"

  double min() const { return eigenvalues.front(); }
};

/// Eigenvalues of a Hermitian combo. When all terms pairwise commute the
/// joint sign patterns over an independent generating set of the terms'
/// span give the spectrum exactly (multiplicity 2^{n-g} per pattern);
/// otherwise a dense eigendecomposition is used.
SpectrumRecord spectrum(const PauliCombo& w);

enum class Optimality { Optimal, NonOptimal, Inconclusive, NotApplicable };
enum class Decomposability { Decomposable, NonDecomposable, Inconclusive };

std::string optimality_name(Optimality o);
std::string decomposability_name(Decomposability d);

struct OptimalityVerdict {
  Optimality verdict = Optimality::NotApplicable;
  std::string detail;
};

/// Sign-pattern test for boundary-form candidates a0(I + c1 Q1 + c2 Q2 +
/// c3 Q3), |ci| = 1: optimal when one term's pattern is the product of the
/// other two with product sign phi and c_prod * phi == -c_a * c_b;
/// non-optimal when the sign mismatches or no product relation exists.
/// Non-boundary input yields NotApplicable.
OptimalityVerdict is_optimal_form(const PauliCombo& w);
OptimalityVerdict is_optimal_form(const WitnessCandidate& w,
                                  const FeasibleRegionModel& region);

/// Term-wise Pauli partial transpose over a 1-based site subset.
PauliCombo partial_transpose_combo(const PauliCombo& w,
                                   const std::set<int>& subset);

struct LocalCommuteCheck {
  bool applicable = false;  // all non-identity term pairs locally commute
  double min_product = 0.0;     // exact min over product states
  double min_eigenvalue = 0.0;  // spectrum minimum
  bool witness_excluded = true;  // never classified as a witness
  bool ok = true;               // assertion result
};

/// Locally commuting term sets share an eigenbasis of product states, so
/// the operator's minimum equals an exact 2^n axis-sign scan and a witness
/// verdict is impossible. Returns the checked assertion.
LocalCommuteCheck locally_commuting_no_witness_check(const PauliCombo& w);

/// Stabilizer-diagonal density rho = sum_J b_J S^J over generator exponent
/// masks J (bit i = generator i+1); b_0 must be 1/2^n.
struct StabilizerDensity {
  Family family{};
  int n = 0;
  std::map<std::uint32_t, double> b;  // exponent mask -> coefficient
  PauliCombo combo{0};
};

/// Builds and positivity-checks the density (sign-formula spectrum plus
/// dense cross-check); throws on trace or positivity violations.
StabilizerDensity build_stabilizer_density(
    Family f, int n, const std::map<std::uint32_t, double>& b);

/// Sufficient separability bound: sum_{J != 0} |b_J| <= 1/2^n.
bool is_separable_by_bound(const StabilizerDensity& d);

/// Min eigenvalue of rho^{T_K} for every nonempty subset up to complement
/// equivalence; key bit i = 1-based site i+1.
std::map<std::uint32_t, double> ppt_check(const StabilizerDensity& d);

/// Tr(W rho) via Hilbert-Schmidt pairing of matching Pauli patterns,
/// cross-checked against the dense trace.
double detect(const PauliCombo& w, const StabilizerDensity& d);

struct DecompEvidence {
  Decomposability verdict = Decomposability::Inconclusive;
  std::string detail;
  std::set<int> pt_subset;  // PT-positive subset when decomposable
};

/// Decomposability search: PT-positivity over all subsets (decomposable
/// certificate), else detection of a shipped PPT density (non-decomposable
/// certificate), else inconclusive.
DecompEvidence decomposability_evidence(const PauliCombo& w, int n);

/// The shipped PPT density library for a given qubit count (rho+- and the
/// approximate-cluster density at n = 4).
std::vector<StabilizerDensity> ppt_density_library(int n);

struct ClassificationReport {
  bool is_positive = false;
  bool is_pre_witness = false;
  bool is_witness = false;
  double min_eigenvalue = 0.0;
  double region_min = 0.0;
  Optimality optimality = Optimality::NotApplicable;
  std::string optimality_detail;
  Decomposability decomposability = Decomposability::Inconclusive;
  std::string decomposability_detail;
};

/// Positivity / pre-witness / witness verdicts; with full=true also the
/// optimality and decomposability analyses.
ClassificationReport classify(const WitnessCandidate& w,
                              const FeasibleRegionModel& region,
                              bool full = true);

}  // namespace stabwit
