#include "stabwit/oracle.hpp"

#include <cmath>
#include <random>

namespace stabwit {

namespace {

// Component of the Bloch vector selected by a site letter ('I' -> 1).
double site_factor(char letter, const Eigen::Vector3d& b) {
  switch (letter) {
    case 'I': return 1.0;
    case 'X': return b.x();
    case 'Y': return b.y();
    case 'Z': return b.z();
  }
  return 0.0;
}

Eigen::Vector3d random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (;;) {
    Eigen::Vector3d v(gauss(rng), gauss(rng), gauss(rng));
    const double norm = v.norm();
    if (norm > 1e-6) return v / norm;
  }
}

// Splits <W> = d + v . b_site as a function of one site's Bloch vector.
void site_affine(const PauliCombo& w, const ProductState& s, int site,
                 double& d, Eigen::Vector3d& v) {
  d = 0.0;
  v.setZero();
  for (const auto& [p, coeff] : w.terms()) {
    double rest = coeff;
    for (int k = 1; k <= s.n(); ++k) {
      if (k == site) continue;
      rest *= site_factor(p.letter(k), s.bloch[k - 1]);
    }
    switch (p.letter(site)) {
      case 'I': d += rest; break;
      case 'X': v.x() += rest; break;
      case 'Y': v.y() += rest; break;
      case 'Z': v.z() += rest; break;
    }
  }
}

enum class Goal { MaxAbs, Min };

// One alternating-optimization run from the given start state.
double run_sweeps(const PauliCombo& w, ProductState& s, Goal goal,
                  const OracleOptions& opts) {
  auto score = [&](double e) { return goal == Goal::MaxAbs ? std::abs(e) : -e; };
  double best = score(expectation(w, s));
  for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
    const double before = best;
    for (int site = 1; site <= s.n(); ++site) {
      double d;
      Eigen::Vector3d v;
      site_affine(w, s, site, d, v);
      const double vn = v.norm();
      if (vn <= opts.tol) continue;  // degenerate site: keep previous vector
      if (goal == Goal::MaxAbs) {
        // |d + v.b| is maximized at b = sign(d) v/|v| (either sign if d=0).
        s.bloch[site - 1] = (d >= 0.0 ? 1.0 : -1.0) * (v / vn);
      } else {
        s.bloch[site - 1] = -(v / vn);
      }
    }
    best = score(expectation(w, s));
    if (best - before <= opts.tol) break;
  }
  return best;
}

OracleResult optimize(const PauliCombo& w, Goal goal,
                      const OracleOptions& opts) {
  if (w.n() < 1) throw std::invalid_argument("oracle needs n >= 1");
  std::mt19937_64 rng(opts.seed);
  OracleResult result;
  result.restarts_used = opts.restarts;
  double best = -1.0;
  for (int r = 0; r < opts.restarts; ++r) {
    ProductState s;
    s.bloch.reserve(w.n());
    for (int k = 0; k < w.n(); ++k) s.bloch.push_back(random_unit(rng));
    const double value = run_sweeps(w, s, goal, opts);
    if (r == 0 || value > best) {
      best = value;
      result.state = s;
    }
  }
  result.value =
      goal == Goal::MaxAbs ? best : expectation(w, result.state);
  return result;
}

}  // namespace

double expectation(const PauliCombo& w, const ProductState& s) {
  if (s.n() != w.n())
    throw std::invalid_argument("product state size does not match combo");
  double total = 0.0;
  for (const auto& [p, coeff] : w.terms()) {
    double term = coeff;
    for (int k = 1; k <= s.n(); ++k)
      term *= site_factor(p.letter(k), s.bloch[k - 1]);
    total += term;
  }
  return total;
}

double mixture_expectation(
    const PauliCombo& w,
    const std::vector<std::pair<double, ProductState>>& mixture) {
  double total = 0.0;
  for (const auto& [weight, state] : mixture)
    total += weight * expectation(w, state);
  return total;
}

OracleResult maximize_abs(const PauliCombo& w, OracleOptions opts) {
  return optimize(w, Goal::MaxAbs, opts);
}

OracleResult min_over_products(const PauliCombo& w, OracleOptions opts) {
  return optimize(w, Goal::Min, opts);
}

HalfspaceCheck verify_halfspace(const PauliCombo& w, double bound,
                                OracleOptions opts) {
  OracleResult r = maximize_abs(w, opts);
  HalfspaceCheck check;
  check.max_abs = r.value;
  check.bound = bound;
  check.argmax = r.state;
  check.ok = r.value <= bound + opts.tol;
  return check;
}

}  // namespace stabwit
