#pragma once

#include <string>
#include <vector>

#include "stabwit/json_io.hpp"

namespace stabwit {

/// One verified claim in the reproduction run.
struct ReproEntry {
  int criterion = 0;          // 1..16
  std::string claim_id;       // stable slug, e.g. "ghz-even-table"
  std::string location;       // what was checked, human readable
  double expected = 0.0;
  double computed = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

struct ReproductionReport {
  std::vector<ReproEntry> entries;
  bool all_pass = true;
  unsigned seed = 12345;

  bool criterion_pass(int criterion) const;
};

/// Runs the full acceptance battery (criteria 1-16) and returns the ledger
/// of checks. Deterministic for a fixed config seed.
ReproductionReport run_acceptance(const RunConfig& config);

Json to_json(const ReproEntry& e);
Json to_json(const ReproductionReport& r);

}  // namespace stabwit
