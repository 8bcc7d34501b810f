// Acceptance battery: one line per criterion, exit 0 only when all pass.

#include <cstdio>
#include <cstdlib>

#include "stabwit/reproduce.hpp"

int main() {
  stabwit::RunConfig cfg;
  if (const char* env = std::getenv("STABWIT_SEED"))
    cfg.seed = static_cast<unsigned>(std::stoul(env));
  const stabwit::ReproductionReport report = stabwit::run_acceptance(cfg);
  for (int criterion = 1; criterion <= 16; ++criterion) {
    std::printf("criterion %2d: %s\n", criterion,
                report.criterion_pass(criterion) ? "pass" : "FAIL");
  }
  for (const auto& e : report.entries) {
    if (!e.pass) {
      std::printf("  [%d] %s (%s): expected %.12g computed %.12g tol %g %s\n",
                  e.criterion, e.claim_id.c_str(), e.location.c_str(),
                  e.expected, e.computed, e.tolerance, e.note.c_str());
    }
  }
  return report.all_pass ? 0 : 1;
}
