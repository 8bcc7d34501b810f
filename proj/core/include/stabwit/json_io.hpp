#pragma once

// JSON serialization for all public data types, plus the run configuration
// shared by the CLI and the reproduction harness.

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "stabwit/catalog.hpp"
#include "stabwit/clifford.hpp"
#include "stabwit/lp.hpp"
#include "stabwit/oracle.hpp"
#include "stabwit/pauli.hpp"
#include "stabwit/region.hpp"
#include "stabwit/witness.hpp"

namespace stabwit {

using Json = nlohmann::json;

// Global run configuration.  The CLI reads this from a config file and/or
// flags; STABWIT_SEED in the environment overrides `seed`.
struct RunConfig {
  unsigned seed = 12345;
  double tol_dense = 1e-10;
  double tol_lp = 1e-9;
  double tol_oracle = 1e-6;
  int restarts = 64;
  std::string output_dir = ".";
  std::string format = "json";
};

// If `value` matches a well-known algebraic constant (up to 1e-12), returns
// its symbolic spelling, e.g. "(1+sqrt2)/2".  Used to annotate reports.
std::optional<std::string> symbolic_tag(double value);

// Numbers are emitted with 17 significant digits so round-trips are exact.
Json number_with_symbol(double value);

Json to_json(const PauliString& p);
Json to_json(const PauliCombo& c);
Json to_json(const Gate& g);
Json to_json(const CliffordOp& op);
Json to_json(const ExpectationCoordinate& c);
Json to_json(const HalfSpace& h);
Json to_json(const VertexRow& v);
Json to_json(const FeasibleRegionModel& r);
Json to_json(const WitnessCandidate& w);
Json to_json(const ProductState& s);
Json to_json(const OracleResult& r);
Json to_json(const HalfspaceCheck& c);
Json to_json(const LpResult& r);
Json to_json(const VertexMinResult& r);
Json to_json(const ConditionRow& row);
Json to_json(const ParameterConditionSet& s);
Json to_json(const EquivReport& r);
Json to_json(const SpectrumRecord& s);
Json to_json(const OptimalityVerdict& v);
Json to_json(const DecompEvidence& e);
Json to_json(const ClassificationReport& r);
Json to_json(const ConsistencyReport& r);
Json to_json(const GeneratingSet& g);
Json to_json(const StabilizerDensity& d);
Json to_json(const LocalCommuteCheck& c);
Json to_json(const RunConfig& c);

PauliString pauli_from_json(const Json& j, int n);
PauliCombo combo_from_json(const Json& j);
CliffordOp clifford_from_json(const Json& j);
WitnessCandidate witness_from_json(const Json& j);
StabilizerDensity density_from_json(const Json& j);
RunConfig config_from_json(const Json& j);

// Regions are rebuilt from their constructor parameters (family, variant,
// n, m, approximate, extra_term) rather than trusting serialized geometry.
FeasibleRegionModel region_from_json(const Json& j);

}  // namespace stabwit
