#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>
#include <vector>

#include "stabwit/catalog.hpp"
#include "stabwit/clifford.hpp"
#include "stabwit/oracle.hpp"
#include "stabwit/pauli.hpp"

namespace stabwit {

enum class RegionVariant { Even, Odd, Exceptional };

RegionVariant variant_from_name(const std::string& name);
std::string variant_name(RegionVariant v);

/// One expectation coordinate P_label = <element> on the region.
struct ExpectationCoordinate {
  std::string label;     // "P1", "P2", ..., "P1,2", "P1,2,3", ...
  PauliString element;   // stabilizer-group element (sign included)
};

/// Two-sided |sum c_label P_label| <= bound, or one-sided when two_sided
/// is false.
struct HalfSpace {
  std::map<std::string, double> coeffs;
  double bound = 1.0;
  bool two_sided = true;
};

/// A vertex row: coordinates plus (when available) the generating
/// product-state constructor (base kets + Clifford circuit).
struct VertexRow {
  Eigen::VectorXd coords;
  bool has_constructor = false;
  std::vector<std::string> base;  // per-site kets: "x+","x-","z+","z-"
  CliffordOp circuit;
};

struct FeasibleRegionModel {
  Family family{};
  RegionVariant variant{};
  int n = 0;
  int m = 0;  // cluster block index (0 when unused)
  int l = 0;  // approximate GHZ extra-term index (0 when unused)
  bool approximate = false;
  double mu = 1.0;  // half-space bound of the non-box rows
  std::string extra_term;  // approximate models: added element, e.g. "S1S3"

  std::vector<ExpectationCoordinate> coordinates;
  std::vector<VertexRow> vertices;
  std::vector<HalfSpace> halfspaces;
  // Approximate models only: pure product points known to lie inside.
  std::vector<VertexRow> product_points;

  int dim() const { return static_cast<int>(coordinates.size()); }
  int coord_index(const std::string& label) const;  // throws if absent
  /// Dense coefficient row of a half-space in coordinate order.
  Eigen::VectorXd halfspace_row(const HalfSpace& h) const;
  /// sum_label coeffs[label] * element as a Hermitian combo (no identity).
  PauliCombo halfspace_combo(const HalfSpace& h) const;
};

/// Exact region models. GHZ: variant selects the product-term family
/// (even: S1 S_{2k}, odd: S1 S_{2k+1}); m is the cluster block index and is
/// ignored for other families. Exceptional families use their fixed n.
FeasibleRegionModel build_region(Family f, RegionVariant variant, int n,
                                 int m = 0);

/// Approximate (shifted) models; extra_term names the added group element:
/// GHZ even "S1S{2l+1}" with bound (1+sqrt2)/2, Cluster odd "S{2m-1}S{2m}"
/// with bound 2/sqrt3. Vertices are the shifted-polytope vertices (no
/// product constructors); product_points carries the pure product rows.
FeasibleRegionModel build_region_approx(Family f, RegionVariant variant,
                                        int n, const std::string& extra_term);

/// Dense state of a constructive vertex (throws when no constructor).
Vector vertex_state(const FeasibleRegionModel& r, std::size_t vertex_index);

/// Boundary operators mu*I +- (half-space combo), two per two-sided row,
/// in row order.
std::vector<PauliCombo> halfspace_operators(const FeasibleRegionModel& r);

struct ConsistencyReport {
  bool ok = true;
  double max_constructor_error = 0.0;   // vertex reconstruction |delta|
  double max_vertex_violation = 0.0;    // halfspace slack violations
  double max_point_violation = 0.0;     // product points / sampled cloud
  int unsupported_halfspaces = 0;       // rows with no vertex at equality
  std::vector<std::string> violations;
};

/// Exact case: constructor reproduction (1e-10), vertex-in-halfspace,
/// half-space support. Approximate case: product points and a sampled
/// product-state cloud lie inside the shifted system.
ConsistencyReport check_region_consistency(const FeasibleRegionModel& r,
                                           int cloud_samples = 10000,
                                           std::uint64_t seed = 12345);

struct GeneratingSet {
  std::vector<PauliCombo> seeds;
  std::vector<CliffordOp> moves;
};

/// Seed operators + single-site Pauli moves whose orbit closure equals the
/// full half-space operator set. Exceptional families return the full list
/// with no moves.
GeneratingSet generating_set(const FeasibleRegionModel& r);

}  // namespace stabwit
