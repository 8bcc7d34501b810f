#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "stabwit/region.hpp"

namespace stabwit {

/// W = a0 * I + sum over coordinate labels of a_label * element.
struct WitnessCandidate {
  double a0 = 1.0;
  std::map<std::string, double> terms;  // coordinate label -> coefficient
  Family family{};
  RegionVariant variant{};
  int n = 0;
  int m = 0;

  /// a0*I + sum a*element as a Hermitian combo over the region's elements.
  PauliCombo to_combo(const FeasibleRegionModel& region) const;
  /// Objective row in coordinate order (throws on unknown labels).
  Eigen::VectorXd objective_row(const FeasibleRegionModel& region) const;
};

struct LpResult {
  double min = 0.0;             // a0 + min over the polytope of sum a*P
  Eigen::VectorXd argmin;       // coordinate vector at the minimum
  std::vector<int> binding_rows;  // expanded one-sided row indices at bound
};

/// Global minimum of the affine objective over the region polytope via a
/// bespoke primal simplex (free variables split x = u - v, slack start,
/// Bland's anti-cycling rule, tolerance 1e-11).
LpResult simplex_min(const WitnessCandidate& objective,
                     const FeasibleRegionModel& region);

struct VertexMinResult {
  double min = 0.0;
  std::size_t vertex_index = 0;
};

/// Brute minimum over the explicit vertex list.
VertexMinResult vertex_min(const WitnessCandidate& objective,
                           const FeasibleRegionModel& region);

/// One row of the parameter-condition system. Absolute rows encode
/// a0 >= sum_l weight_l * |a_l|; signed rows encode a0 + sum_l w_l a_l >= 0.
struct ConditionRow {
  bool absolute = true;
  std::map<std::string, double> weights;
};

struct ParameterConditionSet {
  Family family{};
  RegionVariant variant{};
  int n = 0;
  int m = 0;
  std::vector<ConditionRow> rows;
};

/// Condition system generated from the region's vertex classes: vertices
/// grouped by coordinate-magnitude pattern; sign-complete classes fold to a
/// single absolute row, others stay as signed rows. Equivalent by
/// construction to nonnegativity of the objective over the polytope.
ParameterConditionSet parameter_conditions(const FeasibleRegionModel& region);

/// Convenience overload building the region first.
ParameterConditionSet parameter_conditions(Family f, RegionVariant variant,
                                           int n, int m = 0);

bool condition_row_holds(const ConditionRow& row,
                         const WitnessCandidate& candidate,
                         double tol = 1e-9);

bool conditions_hold(const ParameterConditionSet& set,
                     const WitnessCandidate& candidate, double tol = 1e-9);

struct EquivReport {
  int samples = 0;
  int counterexamples = 0;
  bool ok = true;
};

/// For `samples` random coefficient vectors: (simplex_min >= -1e-9) must
/// coincide with all condition rows holding within 1e-9.
EquivReport conditions_equiv_check(const FeasibleRegionModel& region,
                                   int samples, std::uint64_t seed = 12345);

}  // namespace stabwit
