#include "stabwit/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace stabwit {

namespace {

std::string gate_name(GateKind k) {
  switch (k) {
    case GateKind::H: return "H";
    case GateKind::M: return "M";
    case GateKind::Mdg: return "Mdg";
    case GateKind::CN: return "CN";
    case GateKind::SW: return "SW";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
  }
  throw std::logic_error("unknown gate kind");
}

GateKind gate_from_name(const std::string& s) {
  if (s == "H") return GateKind::H;
  if (s == "M") return GateKind::M;
  if (s == "Mdg") return GateKind::Mdg;
  if (s == "CN") return GateKind::CN;
  if (s == "SW") return GateKind::SW;
  if (s == "X") return GateKind::X;
  if (s == "Y") return GateKind::Y;
  if (s == "Z") return GateKind::Z;
  throw std::invalid_argument("unknown gate name: " + s);
}

std::string number_text(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

Json coeff_map_to_json(const std::map<std::string, double>& m) {
  Json out = Json::object();
  for (const auto& [k, v] : m) out[k] = v;
  return out;
}

std::map<std::string, double> coeff_map_from_json(const Json& j) {
  std::map<std::string, double> out;
  for (auto it = j.begin(); it != j.end(); ++it)
    out[it.key()] = it.value().get<double>();
  return out;
}

}  // namespace

std::optional<std::string> symbolic_tag(double value) {
  static const std::vector<std::pair<double, std::string>> known = {
      {(1.0 + std::sqrt(2.0)) / 2.0, "(1+sqrt2)/2"},
      {2.0 / std::sqrt(3.0), "2/sqrt3"},
      {(std::sqrt(2.0) - 1.0) / 2.0, "(sqrt2-1)/2"},
      {2.0 / std::sqrt(3.0) - 1.0, "2/sqrt3-1"},
      {-(2.0 - std::sqrt(2.0)) / 2.0, "-(2-sqrt2)/2"},
      {2.0 / std::sqrt(3.0) - 1.5, "2/sqrt3-3/2"},
      {std::sqrt(2.0), "sqrt2"},
      {1.0 / std::sqrt(2.0), "1/sqrt2"},
  };
  for (const auto& [v, s] : known)
    if (std::abs(value - v) < 1e-12) return s;
  return std::nullopt;
}

Json number_with_symbol(double value) {
  if (auto tag = symbolic_tag(value)) {
    return Json{{"value", value}, {"text", number_text(value)},
                {"symbol", *tag}};
  }
  return Json{{"value", value}, {"text", number_text(value)}};
}

Json to_json(const PauliString& p) { return Json(p.str()); }

Json to_json(const PauliCombo& c) {
  Json terms = Json::array();
  for (const auto& [pattern, coeff] : c.terms())
    terms.push_back(Json{{"pauli", pattern.str()}, {"coeff", coeff}});
  return Json{{"n", c.n()}, {"terms", terms}};
}

Json to_json(const Gate& g) {
  Json out{{"gate", gate_name(g.kind)}, {"s1", g.s1}};
  if (g.s2 != 0) out["s2"] = g.s2;
  return out;
}

Json to_json(const CliffordOp& op) {
  Json circuit = Json::array();
  for (const auto& g : op.circuit) circuit.push_back(to_json(g));
  return Json{{"n", op.n}, {"circuit", circuit}};
}

Json to_json(const ExpectationCoordinate& c) {
  return Json{{"label", c.label}, {"element", c.element.str()}};
}

Json to_json(const HalfSpace& h) {
  return Json{{"coeffs", coeff_map_to_json(h.coeffs)},
              {"bound", number_with_symbol(h.bound)},
              {"two_sided", h.two_sided}};
}

Json to_json(const VertexRow& v) {
  Json coords = Json::array();
  for (int i = 0; i < v.coords.size(); ++i) coords.push_back(v.coords[i]);
  Json out{{"coords", coords}};
  if (v.has_constructor) {
    out["constructor"] = Json{{"base", v.base}, {"circuit", to_json(v.circuit)}};
  }
  return out;
}

Json to_json(const FeasibleRegionModel& r) {
  Json coords = Json::array();
  for (const auto& c : r.coordinates) coords.push_back(to_json(c));
  Json vertices = Json::array();
  for (const auto& v : r.vertices) vertices.push_back(to_json(v));
  Json halfspaces = Json::array();
  for (const auto& h : r.halfspaces) halfspaces.push_back(to_json(h));
  Json out{{"family", family_name(r.family)},
           {"variant", variant_name(r.variant)},
           {"n", r.n},
           {"m", r.m},
           {"approximate", r.approximate},
           {"coordinates", coords},
           {"vertices", vertices},
           {"halfspaces", halfspaces}};
  if (r.approximate) {
    out["mu"] = number_with_symbol(r.mu);
    out["extra_term"] = r.extra_term;
    Json pts = Json::array();
    for (const auto& p : r.product_points) pts.push_back(to_json(p));
    out["product_points"] = pts;
  }
  return out;
}

Json to_json(const WitnessCandidate& w) {
  return Json{{"a0", w.a0},
              {"terms", coeff_map_to_json(w.terms)},
              {"family", family_name(w.family)},
              {"variant", variant_name(w.variant)},
              {"n", w.n},
              {"m", w.m}};
}

Json to_json(const ProductState& s) {
  Json bloch = Json::array();
  for (const auto& b : s.bloch) bloch.push_back(Json{b.x(), b.y(), b.z()});
  return Json{{"bloch", bloch}};
}

Json to_json(const OracleResult& r) {
  return Json{{"value", number_with_symbol(r.value)},
              {"state", to_json(r.state)},
              {"restarts_used", r.restarts_used}};
}

Json to_json(const HalfspaceCheck& c) {
  return Json{{"ok", c.ok},
              {"max_abs", c.max_abs},
              {"bound", number_with_symbol(c.bound)},
              {"argmax", to_json(c.argmax)}};
}

Json to_json(const LpResult& r) {
  Json argmin = Json::array();
  for (int i = 0; i < r.argmin.size(); ++i) argmin.push_back(r.argmin[i]);
  return Json{{"min", r.min},
              {"argmin", argmin},
              {"binding_rows", r.binding_rows}};
}

Json to_json(const VertexMinResult& r) {
  return Json{{"min", r.min}, {"vertex_index", r.vertex_index}};
}

Json to_json(const ConditionRow& row) {
  return Json{{"absolute", row.absolute},
              {"weights", coeff_map_to_json(row.weights)}};
}

Json to_json(const ParameterConditionSet& s) {
  Json rows = Json::array();
  for (const auto& r : s.rows) rows.push_back(to_json(r));
  return Json{{"family", family_name(s.family)},
              {"variant", variant_name(s.variant)},
              {"n", s.n},
              {"m", s.m},
              {"rows", rows}};
}

Json to_json(const EquivReport& r) {
  return Json{{"samples", r.samples},
              {"counterexamples", r.counterexamples},
              {"ok", r.ok}};
}

Json to_json(const SpectrumRecord& s) {
  return Json{{"eigenvalues", s.eigenvalues},
              {"method", s.method},
              {"min", s.min()}};
}

Json to_json(const OptimalityVerdict& v) {
  return Json{{"verdict", optimality_name(v.verdict)}, {"detail", v.detail}};
}

Json to_json(const DecompEvidence& e) {
  Json out{{"verdict", decomposability_name(e.verdict)},
           {"detail", e.detail}};
  if (!e.pt_subset.empty())
    out["pt_subset"] = std::vector<int>(e.pt_subset.begin(), e.pt_subset.end());
  return out;
}

Json to_json(const ClassificationReport& r) {
  return Json{{"is_positive", r.is_positive},
              {"is_pre_witness", r.is_pre_witness},
              {"is_witness", r.is_witness},
              {"min_eigenvalue", r.min_eigenvalue},
              {"region_min", r.region_min},
              {"optimality", optimality_name(r.optimality)},
              {"optimality_detail", r.optimality_detail},
              {"decomposability", decomposability_name(r.decomposability)},
              {"decomposability_detail", r.decomposability_detail}};
}

Json to_json(const ConsistencyReport& r) {
  return Json{{"ok", r.ok},
              {"max_constructor_error", r.max_constructor_error},
              {"max_vertex_violation", r.max_vertex_violation},
              {"max_point_violation", r.max_point_violation},
              {"unsupported_halfspaces", r.unsupported_halfspaces},
              {"violations", r.violations}};
}

Json to_json(const GeneratingSet& g) {
  Json seeds = Json::array();
  for (const auto& s : g.seeds) seeds.push_back(to_json(s));
  Json moves = Json::array();
  for (const auto& m : g.moves) moves.push_back(to_json(m));
  return Json{{"seeds", seeds}, {"moves", moves}};
}

Json to_json(const StabilizerDensity& d) {
  Json b = Json::object();
  for (const auto& [mask, coeff] : d.b) b[std::to_string(mask)] = coeff;
  return Json{{"family", family_name(d.family)},
              {"n", d.n},
              {"b", b},
              {"combo", to_json(d.combo)}};
}

Json to_json(const LocalCommuteCheck& c) {
  return Json{{"applicable", c.applicable},
              {"min_product", c.min_product},
              {"min_eigenvalue", c.min_eigenvalue},
              {"witness_excluded", c.witness_excluded},
              {"ok", c.ok}};
}

Json to_json(const RunConfig& c) {
  return Json{{"seed", c.seed},
              {"tol_dense", c.tol_dense},
              {"tol_lp", c.tol_lp},
              {"tol_oracle", c.tol_oracle},
              {"restarts", c.restarts},
              {"output_dir", c.output_dir},
              {"format", c.format}};
}

PauliString pauli_from_json(const Json& j, int n) {
  return PauliString::parse(j.get<std::string>(), n);
}

PauliCombo combo_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  PauliCombo out(n);
  for (const auto& term : j.at("terms")) {
    out.add(PauliString::parse(term.at("pauli").get<std::string>(), n),
            term.at("coeff").get<double>());
  }
  return out;
}

CliffordOp clifford_from_json(const Json& j) {
  CliffordOp op = CliffordOp::identity(j.at("n").get<int>());
  for (const auto& g : j.at("circuit")) {
    op.then(gate_from_name(g.at("gate").get<std::string>()),
            g.at("s1").get<int>(), g.value("s2", 0));
  }
  return op;
}

WitnessCandidate witness_from_json(const Json& j) {
  WitnessCandidate w;
  w.a0 = j.at("a0").get<double>();
  w.terms = coeff_map_from_json(j.at("terms"));
  w.family = family_from_name(j.at("family").get<std::string>());
  w.variant = variant_from_name(j.at("variant").get<std::string>());
  w.n = j.at("n").get<int>();
  w.m = j.value("m", 0);
  return w;
}

StabilizerDensity density_from_json(const Json& j) {
  std::map<std::uint32_t, double> b;
  const Json& jb = j.at("b");
  for (auto it = jb.begin(); it != jb.end(); ++it)
    b[static_cast<std::uint32_t>(std::stoul(it.key()))] =
        it.value().get<double>();
  return build_stabilizer_density(
      family_from_name(j.at("family").get<std::string>()),
      j.at("n").get<int>(), b);
}

RunConfig config_from_json(const Json& j) {
  RunConfig c;
  c.seed = j.value("seed", c.seed);
  c.tol_dense = j.value("tol_dense", c.tol_dense);
  c.tol_lp = j.value("tol_lp", c.tol_lp);
  c.tol_oracle = j.value("tol_oracle", c.tol_oracle);
  c.restarts = j.value("restarts", c.restarts);
  c.output_dir = j.value("output_dir", c.output_dir);
  c.format = j.value("format", c.format);
  return c;
}

FeasibleRegionModel region_from_json(const Json& j) {
  const Family f = family_from_name(j.at("family").get<std::string>());
  const RegionVariant v =
      variant_from_name(j.at("variant").get<std::string>());
  const int n = j.at("n").get<int>();
  const int m = j.value("m", 0);
  if (j.value("approximate", false))
    return build_region_approx(f, v, n, j.at("extra_term").get<std::string>());
  return build_region(f, v, n, m);
}

}  // namespace stabwit
