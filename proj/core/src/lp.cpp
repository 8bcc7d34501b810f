#include "stabwit/lp.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

namespace stabwit {

namespace {

constexpr double kLpTol = 1e-11;

// Expanded one-sided system A x <= b (two rows per two-sided half-space).
void expand_rows(const FeasibleRegionModel& region,
                 std::vector<Eigen::VectorXd>& rows,
                 std::vector<double>& rhs) {
  for (const auto& h : region.halfspaces) {
    const Eigen::VectorXd r = region.halfspace_row(h);
    rows.push_back(r);
    rhs.push_back(h.bound);
    if (h.two_sided) {
      rows.push_back(-r);
      rhs.push_back(h.bound);
    }
  }
}

}  // namespace

PauliCombo WitnessCandidate::to_combo(
    const FeasibleRegionModel& region) const {
  PauliCombo combo(region.n);
  combo.add(PauliString(region.n, 0, 0, 0), a0);
  for (const auto& [label, coeff] : terms)
    combo.add(region.coordinates[region.coord_index(label)].element, coeff);
  return combo;
}

Eigen::VectorXd WitnessCandidate::objective_row(
    const FeasibleRegionModel& region) const {
  Eigen::VectorXd c = Eigen::VectorXd::Zero(region.dim());
  for (const auto& [label, coeff] : terms)
    c(region.coord_index(label)) = coeff;
  return c;
}

LpResult simplex_min(const WitnessCandidate& objective,
                     const FeasibleRegionModel& region) {
  std::vector<Eigen::VectorXd> rows;
  std::vector<double> rhs;
  expand_rows(region, rows, rhs);
  const int d = region.dim();
  const int m = static_cast<int>(rows.size());
  const Eigen::VectorXd c = objective.objective_row(region);

  // Free variables split x = u - v; slack start (all bounds positive).
  const int nvar = 2 * d + m;
  Eigen::MatrixXd tab(m, nvar + 1);
  tab.setZero();
  for (int i = 0; i < m; ++i) {
    tab.block(i, 0, 1, d) = rows[i].transpose();
    tab.block(i, d, 1, d) = -rows[i].transpose();
    tab(i, 2 * d + i) = 1.0;
    tab(i, nvar) = rhs[i];
    if (rhs[i] < 0.0)
      throw std::logic_error("model row with negative bound");
  }
  Eigen::RowVectorXd cost(nvar + 1);
  cost.setZero();
  cost.segment(0, d) = c.transpose();
  cost.segment(d, d) = -c.transpose();
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = 2 * d + i;

  for (;;) {
    int enter = -1;  // Bland: smallest improving index
    for (int j = 0; j < nvar; ++j) {
      if (cost(j) < -kLpTol) { enter = j; break; }
    }
    if (enter < 0) break;
    int leave = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < m; ++i) {
      if (tab(i, enter) > kLpTol) {
        const double ratio = tab(i, nvar) / tab(i, enter);
        if (leave < 0 || ratio < best_ratio - kLpTol ||
            (ratio < best_ratio + kLpTol && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
    }
    if (leave < 0)
      throw std::logic_error("unbounded objective on a bounded model");
    tab.row(leave) /= tab(leave, enter);
    for (int i = 0; i < m; ++i) {
      if (i != leave && std::abs(tab(i, enter)) > 0.0)
        tab.row(i) -= tab(i, enter) * tab.row(leave);
    }
    cost -= cost(enter) * tab.row(leave);
    basis[leave] = enter;
  }

  Eigen::VectorXd u = Eigen::VectorXd::Zero(d), v = Eigen::VectorXd::Zero(d);
  for (int i = 0; i < m; ++i) {
    if (basis[i] < d) u(basis[i]) = tab(i, nvar);
    else if (basis[i] < 2 * d) v(basis[i] - d) = tab(i, nvar);
  }
  LpResult result;
  result.argmin = u - v;
  result.min = objective.a0 + c.dot(result.argmin);
  for (int i = 0; i < m; ++i)
    if (std::abs(rows[i].dot(result.argmin) - rhs[i]) <= 1e-9)
      result.binding_rows.push_back(i);
  return result;
}

VertexMinResult vertex_min(const WitnessCandidate& objective,
                           const FeasibleRegionModel& region) {
  if (region.vertices.empty())
    throw std::invalid_argument("region has no vertex list");
  const Eigen::VectorXd c = objective.objective_row(region);
  VertexMinResult result;
  double best = 0.0;
  for (std::size_t i = 0; i < region.vertices.size(); ++i) {
    const double val = c.dot(region.vertices[i].coords);
    if (i == 0 || val < best) {
      best = val;
      result.vertex_index = i;
    }
  }
  result.min = objective.a0 + best;
  return result;
}

ParameterConditionSet parameter_conditions(
    const FeasibleRegionModel& region) {
  ParameterConditionSet set;
  set.family = region.family;
  set.variant = region.variant;
  set.n = region.n;
  set.m = region.m;

  auto round9 = [](double x) { return std::round(x * 1e9) / 1e9; };
  // Group vertices by coordinate-magnitude pattern.
  std::map<std::string, std::vector<const VertexRow*>> classes;
  for (const auto& row : region.vertices) {
    std::ostringstream key;
    for (int i = 0; i < region.dim(); ++i)
      key << round9(std::abs(row.coords(i))) << ";";
    classes[key.str()].push_back(&row);
  }
  std::set<std::string> seen;
  for (const auto& [key, members] : classes) {
    const Eigen::VectorXd& first = members.front()->coords;
    std::vector<int> support;
    for (int i = 0; i < region.dim(); ++i)
      if (std::abs(first(i)) > 1e-9) support.push_back(i);
    // Sign-complete class <=> every sign pattern over the support occurs.
    std::set<std::uint32_t> patterns;
    for (const auto* row : members) {
      std::uint32_t pat = 0;
      for (std::size_t k = 0; k < support.size(); ++k)
        if (row->coords(support[k]) < 0.0) pat |= 1u << k;
      patterns.insert(pat);
    }
    if (patterns.size() == (std::size_t(1) << support.size())) {
      ConditionRow row;
      row.absolute = true;
      for (int i : support)
        row.weights[region.coordinates[i].label] = std::abs(first(i));
      std::ostringstream dedup;
      for (const auto& [l, w] : row.weights) dedup << l << "=" << round9(w) << ";";
      if (seen.insert(dedup.str()).second) set.rows.push_back(std::move(row));
    } else {
      for (const auto* member : members) {
        ConditionRow row;
        row.absolute = false;
        for (int i : support)
          row.weights[region.coordinates[i].label] = member->coords(i);
        std::ostringstream dedup;
        dedup << "s:";
        for (const auto& [l, w] : row.weights)
          dedup << l << "=" << round9(w) << ";";
        if (seen.insert(dedup.str()).second)
          set.rows.push_back(std::move(row));
      }
    }
  }
  return set;
}

ParameterConditionSet parameter_conditions(Family f, RegionVariant variant,
                                           int n, int m) {
  return parameter_conditions(build_region(f, variant, n, m));
}

bool condition_row_holds(const ConditionRow& row,
                         const WitnessCandidate& candidate, double tol) {
  double sum = 0.0;
  for (const auto& [label, w] : row.weights) {
    const auto it = candidate.terms.find(label);
    const double a = it == candidate.terms.end() ? 0.0 : it->second;
    sum += row.absolute ? w * std::abs(a) : -w * a;
  }
  return candidate.a0 >= sum - tol;
}

bool conditions_hold(const ParameterConditionSet& set,
                     const WitnessCandidate& candidate, double tol) {
  for (const auto& row : set.rows)
    if (!condition_row_holds(row, candidate, tol)) return false;
  return true;
}

EquivReport conditions_equiv_check(const FeasibleRegionModel& region,
                                   int samples, std::uint64_t seed) {
  const ParameterConditionSet set = parameter_conditions(region);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::uniform_real_distribution<double> a0dist(0.0, 2.0);
  EquivReport report;
  report.samples = samples;
  for (int t = 0; t < samples; ++t) {
    WitnessCandidate w;
    w.family = region.family;
    w.variant = region.variant;
    w.n = region.n;
    w.m = region.m;
    w.a0 = a0dist(rng);
    for (const auto& c : region.coordinates) w.terms[c.label] = coeff(rng);
    const bool lp_ok = simplex_min(w, region).min >= -1e-9;
    const bool rows_ok = conditions_hold(set, w, 1e-9);
    if (lp_ok != rows_ok) ++report.counterexamples;
  }
  report.ok = report.counterexamples == 0;
  return report;
}

}  // namespace stabwit
