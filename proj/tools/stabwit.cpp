// stabwit: construct, classify and certify stabilizer entanglement
// witnesses from the command line.
//
// Exit codes: 0 success, 1 acceptance/verification failure, 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stabwit/catalog.hpp"
#include "stabwit/clifford.hpp"
#include "stabwit/json_io.hpp"
#include "stabwit/lp.hpp"
#include "stabwit/oracle.hpp"
#include "stabwit/region.hpp"
#include "stabwit/reproduce.hpp"
#include "stabwit/witness.hpp"

namespace {

using stabwit::Json;

struct Common {
  std::string config_path;
  std::string output_path;
};

stabwit::RunConfig load_config(const Common& common) {
  stabwit::RunConfig cfg;
  if (!common.config_path.empty()) {
    std::ifstream in(common.config_path);
    if (!in) throw CLI::ValidationError("config", "cannot open config file");
    Json j;
    in >> j;
    cfg = stabwit::config_from_json(j);
  }
  if (const char* env = std::getenv("STABWIT_SEED")) {
    cfg.seed = static_cast<unsigned>(std::stoul(env));
  }
  return cfg;
}

void emit(const Common& common, const Json& j) {
  if (common.output_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(common.output_path);
    out << j.dump(2) << "\n";
  }
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("input", "cannot open " + path);
  Json j;
  in >> j;
  return j;
}

std::map<std::string, double> parse_terms(
    const std::vector<std::string>& specs) {
  std::map<std::string, double> out;
  for (const auto& spec : specs) {
    const auto eq = spec.rfind('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("term", "expected LABEL=VALUE: " + spec);
    out[spec.substr(0, eq)] = std::stod(spec.substr(eq + 1));
  }
  return out;
}

stabwit::WitnessCandidate candidate_from_flags(
    const stabwit::FeasibleRegionModel& region, double a0,
    const std::vector<std::string>& term_specs,
    const std::string& witness_path) {
  if (!witness_path.empty()) return stabwit::witness_from_json(load_json(witness_path));
  stabwit::WitnessCandidate w;
  w.a0 = a0;
  w.terms = parse_terms(term_specs);
  w.family = region.family;
  w.variant = region.variant;
  w.n = region.n;
  w.m = region.m;
  return w;
}

struct RegionArgs {
  std::string family = "GHZ";
  std::string variant = "even";
  int n = 4;
  int m = 0;
  bool approx = false;
  std::string extra_term;

  void attach(CLI::App* cmd) {
    cmd->add_option("--family", family, "family name (GHZ, Cluster, ...)");
    cmd->add_option("--variant", variant, "even, odd or exceptional");
    cmd->add_option("--n", n, "qubit count");
    cmd->add_option("--m", m, "cluster block index");
    cmd->add_flag("--approx", approx, "shifted (approximate) model");
    cmd->add_option("--extra-term", extra_term,
                    "added group element of the approximate model");
  }

  stabwit::FeasibleRegionModel build() const {
    const stabwit::Family f = stabwit::family_from_name(family);
    const stabwit::RegionVariant v = stabwit::variant_from_name(variant);
    if (approx) return stabwit::build_region_approx(f, v, n, extra_term);
    return stabwit::build_region(f, v, n, m);
  }
};

int cmd_catalog(const Common& common, const RegionArgs& args) {
  const stabwit::Family f = stabwit::family_from_name(args.family);
  const auto gens = stabwit::generators(f, args.n);
  Json jgens = Json::array();
  for (const auto& g : gens) jgens.push_back(g.str());
  stabwit::GraphForm gf = stabwit::stabilizer_matrix(gens);
  stabwit::complete_gamma(gf);
  stabwit::standard_form(gf);
  Json adjacency = Json::array();
  for (int r = 0; r < gf.n; ++r) {
    std::vector<int> row(gf.n);
    for (int c = 0; c < gf.n; ++c) row[c] = (gf.adjacency[r] >> c) & 1;
    adjacency.push_back(row);
  }
  emit(common, Json{{"family", stabwit::family_name(f)},
                    {"n", args.n},
                    {"code_dimension_k",
                     stabwit::family_code_dimension_k(f, args.n)},
                    {"generators", jgens},
                    {"group_order", 1 << gens.size()},
                    {"graph_adjacency", adjacency},
                    {"qubit_perm", gf.qubit_perm}});
  return 0;
}

int cmd_region(const Common& common, const RegionArgs& args, bool check,
               int cloud_samples) {
  const auto region = args.build();
  Json out = to_json(region);
  bool ok = true;
  if (check) {
    const stabwit::RunConfig cfg = load_config(common);
    const auto rep =
        stabwit::check_region_consistency(region, cloud_samples, cfg.seed);
    out["consistency"] = to_json(rep);
    ok = rep.ok;
  }
  emit(common, out);
  return ok ? 0 : 1;
}

int cmd_optimize(const Common& common, const RegionArgs& args, double a0,
                 const std::vector<std::string>& terms,
                 const std::string& witness_path) {
  const auto region = args.build();
  const auto cand = candidate_from_flags(region, a0, terms, witness_path);
  const auto lp = stabwit::simplex_min(cand, region);
  const auto vm = stabwit::vertex_min(cand, region);
  Json out{{"candidate", to_json(cand)},
           {"lp", to_json(lp)},
           {"vertex_min", to_json(vm)}};
  if (!region.approximate)
    out["conditions"] = to_json(stabwit::parameter_conditions(region));
  emit(common, out);
  return 0;
}

int cmd_classify(const Common& common, const RegionArgs& args, double a0,
                 const std::vector<std::string>& terms,
                 const std::string& witness_path) {
  const auto region = args.build();
  const auto cand = candidate_from_flags(region, a0, terms, witness_path);
  const auto report = stabwit::classify(cand, region);
  Json out{{"candidate", to_json(cand)}, {"classification", to_json(report)}};
  emit(common, out);
  return 0;
}

int cmd_oracle(const Common& common, const RegionArgs& args, double a0,
               const std::vector<std::string>& terms,
               const std::string& witness_path, bool minimize, int restarts) {
  const auto region = args.build();
  const auto cand = candidate_from_flags(region, a0, terms, witness_path);
  const stabwit::RunConfig cfg = load_config(common);
  stabwit::OracleOptions opts;
  opts.seed = cfg.seed;
  opts.restarts = restarts > 0 ? restarts : cfg.restarts;
  const auto combo = cand.to_combo(region);
  const auto res = minimize ? stabwit::min_over_products(combo, opts)
                            : stabwit::maximize_abs(combo, opts);
  emit(common, Json{{"candidate", to_json(cand)},
                    {"goal", minimize ? "min" : "max-abs"},
                    {"result", to_json(res)}});
  return 0;
}

int cmd_detect(const Common& common, const RegionArgs& args, double a0,
               const std::vector<std::string>& terms,
               const std::string& witness_path,
               const std::string& density_path) {
  const auto region = args.build();
  const auto cand = candidate_from_flags(region, a0, terms, witness_path);
  const auto density = stabwit::density_from_json(load_json(density_path));
  const double value = stabwit::detect(cand.to_combo(region), density);
  Json ppt = Json::object();
  for (const auto& [subset, min_eig] : stabwit::ppt_check(density))
    ppt[std::to_string(subset)] = min_eig;
  emit(common, Json{{"candidate", to_json(cand)},
                    {"density", to_json(density)},
                    {"value", stabwit::number_with_symbol(value)},
                    {"detected", value < -1e-9},
                    {"density_pt_min_eigenvalues", ppt}});
  return 0;
}

int cmd_orbit(const Common& common, const RegionArgs& args) {
  const auto region = args.build();
  const auto gs = stabwit::generating_set(region);
  const auto ops = stabwit::halfspace_operators(region);
  bool closure_ok = true;
  if (!gs.moves.empty()) {
    const auto orbit = stabwit::orbit_expand(gs.seeds, gs.moves);
    std::set<std::string> want, got;
    for (const auto& op : ops) want.insert(op.canonical_key());
    for (const auto& op : orbit) got.insert(op.canonical_key());
    closure_ok = want == got;
  }
  emit(common, Json{{"generating_set", to_json(gs)},
                    {"operator_count", ops.size()},
                    {"closure_ok", closure_ok}});
  return closure_ok ? 0 : 1;
}

int cmd_reproduce(const Common& common) {
  const stabwit::RunConfig cfg = load_config(common);
  const auto report = stabwit::run_acceptance(cfg);
  for (int criterion = 1; criterion <= 16; ++criterion) {
    std::printf("criterion %2d: %s\n", criterion,
                report.criterion_pass(criterion) ? "pass" : "FAIL");
  }
  if (!common.output_path.empty()) {
    std::ofstream out(common.output_path);
    out << to_json(report).dump(2) << "\n";
  }
  return report.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stabilizer entanglement witness toolkit"};
  app.require_subcommand(1);

  Common common;
  app.add_option("--config", common.config_path, "run configuration (JSON)");
  app.add_option("--output", common.output_path, "write the report here");

  RegionArgs region_args;
  double a0 = 1.0;
  std::vector<std::string> terms;
  std::string witness_path, density_path;
  bool region_check = false, oracle_min = false;
  int cloud_samples = 10000, restarts = 0;

  auto* catalog = app.add_subcommand("catalog", "family generators and graph form");
  auto* region = app.add_subcommand("region", "feasible-region model");
  auto* optimize = app.add_subcommand("optimize", "LP minimum of a candidate");
  auto* classify = app.add_subcommand("classify", "full witness classification");
  auto* oracle = app.add_subcommand("oracle", "product-state optimization");
  auto* detect = app.add_subcommand("detect", "expectation against a density");
  auto* orbit = app.add_subcommand("orbit", "generating set of the boundary ops");
  auto* reproduce = app.add_subcommand("reproduce", "run the acceptance battery");
  (void)reproduce;

  for (CLI::App* cmd : {catalog, region, optimize, classify, oracle, detect,
                        orbit})
    region_args.attach(cmd);
  for (CLI::App* cmd : {optimize, classify, oracle, detect}) {
    cmd->add_option("--a0", a0, "identity coefficient");
    cmd->add_option("--term", terms, "coordinate coefficient LABEL=VALUE");
    cmd->add_option("--witness", witness_path, "candidate JSON file");
  }
  region->add_flag("--check", region_check, "run the consistency check");
  region->add_option("--cloud-samples", cloud_samples,
                     "product cloud size for approximate models");
  oracle->add_flag("--min", oracle_min, "minimize instead of max |<W>|");
  oracle->add_option("--restarts", restarts, "random restarts (0 = config)");
  detect->add_option("--density", density_path, "density JSON file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (catalog->parsed()) return cmd_catalog(common, region_args);
    if (region->parsed())
      return cmd_region(common, region_args, region_check, cloud_samples);
    if (optimize->parsed())
      return cmd_optimize(common, region_args, a0, terms, witness_path);
    if (classify->parsed())
      return cmd_classify(common, region_args, a0, terms, witness_path);
    if (oracle->parsed())
      return cmd_oracle(common, region_args, a0, terms, witness_path,
                        oracle_min, restarts);
    if (detect->parsed())
      return cmd_detect(common, region_args, a0, terms, witness_path,
                        density_path);
    if (orbit->parsed()) return cmd_orbit(common, region_args);
    return cmd_reproduce(common);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
