#include "stabwit/witness.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "stabwit/catalog.hpp"

namespace stabwit {

std::string optimality_name(Optimality o) {
  switch (o) {
    case Optimality::Optimal: return "optimal";
    case Optimality::NonOptimal: return "non-optimal";
    case Optimality::Inconclusive: return "inconclusive";
    case Optimality::NotApplicable: return "not-applicable";
  }
  return "?";
}

std::string decomposability_name(Decomposability d) {
  switch (d) {
    case Decomposability::Decomposable: return "decomposable";
    case Decomposability::NonDecomposable: return "non-decomposable";
    case Decomposability::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

std::uint64_t pack_pattern(const PauliString& p) {
  return (static_cast<std::uint64_t>(p.x_bits()) << 32) | p.z_bits();
}

}  // namespace

SpectrumRecord spectrum(const PauliCombo& w) {
  const int n = w.n();
  double a0 = 0.0;
  std::vector<PauliString> patterns;
  std::vector<double> coeffs;
  for (const auto& [p, c] : w.terms()) {
    if (p.is_identity_pattern()) a0 = c;
    else {
      patterns.push_back(p);
      coeffs.push_back(c);
    }
  }
  bool commuting = true;
  for (std::size_t i = 0; i < patterns.size() && commuting; ++i)
    for (std::size_t j = i + 1; j < patterns.size(); ++j)
      if (!commutes(patterns[i], patterns[j])) { commuting = false; break; }

  SpectrumRecord rec;
  if (!commuting) {
    if (n > kDenseMaxQubits)
      throw std::length_error("non-commuting combo exceeds dense guard");
    const Eigen::VectorXd ev = eigenvalues_dense(to_dense(w));
    rec.method = "dense";
    rec.eigenvalues.assign(ev.data(), ev.data() + ev.size());
    return rec;
  }
  // Independent generating set of the term patterns over GF(2); each term
  // becomes a signed product of basis elements.
  std::vector<PauliString> basis;  // phase-normalized independent patterns
  struct Reduced { std::uint64_t bits; std::uint64_t mask; };
  std::vector<Reduced> reduced;  // row echelon with basis-combination masks
  std::vector<std::uint64_t> exponents(patterns.size());
  for (std::size_t t = 0; t < patterns.size(); ++t) {
    std::uint64_t v = pack_pattern(patterns[t]);
    std::uint64_t mask = 0;
    for (const auto& row : reduced) {
      const std::uint64_t lead = std::uint64_t(1)
                                 << (63 - std::countl_zero(row.bits));
      if (v & lead) { v ^= row.bits; mask ^= row.mask; }
    }
    if (v == 0) {
      exponents[t] = mask;
    } else {
      const std::uint64_t bit = std::uint64_t(1) << basis.size();
      basis.push_back(patterns[t]);
      reduced.push_back({v, mask ^ bit});
      std::sort(reduced.begin(), reduced.end(),
                [](const Reduced& a, const Reduced& b) {
                  return a.bits > b.bits;
                });
      exponents[t] = bit;
    }
  }
  const std::size_t g = basis.size();
  // Sign of each term relative to the basis product with its exponents.
  std::vector<double> term_sign(patterns.size());
  for (std::size_t t = 0; t < patterns.size(); ++t) {
    std::vector<PauliString> factors;
    for (std::size_t i = 0; i < g; ++i)
      if ((exponents[t] >> i) & 1u) factors.push_back(basis[i]);
    const PauliString prod = multiply(factors, n);
    // patterns[t] (phase 0) = sign * prod, with prod phase in {0, 2}.
    term_sign[t] = prod.phase_exp() == 0 ? 1.0 : -1.0;
  }
  rec.method = "sign-formula";
  // Pairwise-commuting independent patterns number at most n.
  const std::size_t multiplicity = std::size_t(1)
                                   << (n - static_cast<int>(g));
  rec.eigenvalues.reserve(std::size_t(1) << n);
  for (std::uint64_t s = 0; s < (std::uint64_t(1) << g); ++s) {
    double val = a0;
    for (std::size_t t = 0; t < patterns.size(); ++t) {
      const int parity = std::popcount(exponents[t] & s) & 1;
      val += coeffs[t] * term_sign[t] * (parity ? -1.0 : 1.0);
    }
    for (std::size_t k = 0; k < multiplicity; ++k)
      rec.eigenvalues.push_back(val);
  }
  std::sort(rec.eigenvalues.begin(), rec.eigenvalues.end());
  return rec;
}

OptimalityVerdict is_optimal_form(const PauliCombo& w) {
  OptimalityVerdict out;
  double a0 = 0.0;
  std::vector<PauliString> patterns;
  std::vector<double> coeffs;
  for (const auto& [p, c] : w.terms()) {
    if (p.is_identity_pattern()) a0 = c;
    else {
      patterns.push_back(p);
      coeffs.push_back(c);
    }
  }
  if (a0 <= kCoeffTol || patterns.size() != 3) {
    out.detail = "not a boundary form (needs a0 > 0 and three unit terms)";
    return out;
  }
  double chat[3];
  for (int i = 0; i < 3; ++i) {
    const double r = coeffs[i] / a0;
    if (std::abs(std::abs(r) - 1.0) > 1e-9) {
      out.detail = "not a boundary form (coefficients not unit magnitude)";
      return out;
    }
    chat[i] = r > 0 ? 1.0 : -1.0;
  }
  bool found = false, all_ok = true;
  for (int k = 0; k < 3; ++k) {
    const int a = (k + 1) % 3, b = (k + 2) % 3;
    const PauliString prod = multiply(
        PauliString(w.n(), patterns[a].x_bits(), patterns[a].z_bits(), 0),
        PauliString(w.n(), patterns[b].x_bits(), patterns[b].z_bits(), 0));
    if (prod.x_bits() == patterns[k].x_bits() &&
        prod.z_bits() == patterns[k].z_bits()) {
      found = true;
      const double phi = prod.phase_sign();
      if (chat[k] * phi != -chat[a] * chat[b]) all_ok = false;
    }
  }
  if (!found) {
    out.verdict = Optimality::NonOptimal;
    out.detail = "no product relation among the boundary terms";
  } else if (all_ok) {
    out.verdict = Optimality::Optimal;
    out.detail = "product term carries the optimal sign pattern";
  } else {
    out.verdict = Optimality::NonOptimal;
    out.detail = "product relation present with mismatched sign";
  }
  return out;
}

OptimalityVerdict is_optimal_form(const WitnessCandidate& w,
                                  const FeasibleRegionModel& region) {
  return is_optimal_form(w.to_combo(region));
}

PauliCombo partial_transpose_combo(const PauliCombo& w,
                                   const std::set<int>& subset) {
  PauliCombo out(w.n());
  for (const auto& [p, c] : w.terms())
    out.add(partial_transpose(p, subset), c);
  return out;
}

LocalCommuteCheck locally_commuting_no_witness_check(const PauliCombo& w) {
  LocalCommuteCheck check;
  const int n = w.n();
  double a0 = 0.0;
  std::vector<std::uint32_t> supports;
  std::vector<double> coeffs;
  std::vector<PauliString> patterns;
  for (const auto& [p, c] : w.terms()) {
    if (p.is_identity_pattern()) { a0 = c; continue; }
    patterns.push_back(p);
    supports.push_back(p.x_bits() | p.z_bits());
    coeffs.push_back(c);
  }
  check.applicable = true;
  for (std::size_t i = 0; i < patterns.size() && check.applicable; ++i)
    for (std::size_t j = i + 1; j < patterns.size(); ++j)
      if (!locally_commutes(patterns[i], patterns[j])) {
        check.applicable = false;
        break;
      }
  if (!check.applicable) return check;
  if (n > kDenseMaxQubits)
    throw std::length_error("axis scan exceeds qubit guard");
  // Every term is diagonal in the shared per-site axis basis, so the exact
  // product-state minimum is a 2^n axis-sign scan and equals the spectrum
  // minimum.
  double best = a0;
  bool first = true;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    double val = a0;
    for (std::size_t t = 0; t < patterns.size(); ++t) {
      const int parity = std::popcount(s & supports[t]) & 1;
      val += coeffs[t] * (parity ? -1.0 : 1.0);
    }
    if (first || val < best) { best = val; first = false; }
  }
  check.min_product = best;
  check.min_eigenvalue = spectrum(w).min();
  const bool would_be_witness =
      check.min_product >= -1e-9 && check.min_eigenvalue < -1e-10;
  check.witness_excluded = !would_be_witness;
  check.ok = std::abs(check.min_product - check.min_eigenvalue) <= 1e-9 &&
             check.witness_excluded;
  return check;
}

StabilizerDensity build_stabilizer_density(
    Family f, int n, const std::map<std::uint32_t, double>& b) {
  const auto gens = generators(f, n);
  const std::size_t g = gens.size();
  const double c0 = 1.0 / std::ldexp(1.0, n);
  const auto it0 = b.find(0);
  if (it0 == b.end() || std::abs(it0->second - c0) > 1e-12)
    throw std::invalid_argument("density needs b_0 = 1/2^n (unit trace)");
  StabilizerDensity d;
  d.family = f;
  d.n = n;
  d.b = b;
  d.combo = PauliCombo(n);
  for (const auto& [mask, coeff] : b) {
    if (mask >= (1u << g))
      throw std::invalid_argument("exponent mask outside the generator set");
    std::vector<PauliString> factors;
    for (std::size_t i = 0; i < g; ++i)
      if ((mask >> i) & 1u) factors.push_back(gens[i]);
    d.combo.add(multiply(factors, n), coeff);
  }
  // Positivity: every joint sign pattern of the generators must give a
  // nonnegative eigenvalue; dense minimum cross-checks.
  for (std::uint32_t s = 0; s < (1u << g); ++s) {
    double val = 0.0;
    for (const auto& [mask, coeff] : b)
      val += coeff * ((std::popcount(mask & s) & 1) ? -1.0 : 1.0);
    if (val < -1e-12) {
      std::ostringstream msg;
      msg << "density positivity violated at sign pattern " << s << " ("
          << val << ")";
      throw std::invalid_argument(msg.str());
    }
  }
  if (n <= kDenseMaxQubits &&
      min_eigenvalue_dense(to_dense(d.combo)) < -1e-10)
    throw std::logic_error("dense positivity cross-check failed");
  return d;
}

bool is_separable_by_bound(const StabilizerDensity& d) {
  double sum = 0.0;
  for (const auto& [mask, coeff] : d.b)
    if (mask != 0) sum += std::abs(coeff);
  return sum <= 1.0 / std::ldexp(1.0, d.n) + 1e-12;
}

std::map<std::uint32_t, double> ppt_check(const StabilizerDensity& d) {
  if (d.n > kDenseMaxQubits)
    throw std::length_error("ppt_check exceeds dense guard");
  std::map<std::uint32_t, double> out;
  const Matrix rho = to_dense(d.combo);
  // Subsets containing site 1 cover all bipartitions up to complement
  // (the complementary PT is a full transpose away, same spectrum).
  for (std::uint32_t mask = 1; mask < (1u << d.n) - 1; mask += 2) {
    std::set<int> subset;
    for (int i = 0; i < d.n; ++i)
      if ((mask >> i) & 1u) subset.insert(i + 1);
    out[mask] = min_eigenvalue_dense(partial_transpose_dense(rho, d.n, subset));
  }
  return out;
}

double detect(const PauliCombo& w, const StabilizerDensity& d) {
  if (w.n() != d.n)
    throw std::invalid_argument("witness and density qubit counts differ");
  double value = 0.0;
  for (const auto& [p, c] : w.terms()) {
    const double cd = d.combo.coeff(p);
    value += c * cd;
  }
  value *= std::ldexp(1.0, w.n());
  if (w.n() <= kDenseMaxQubits) {
    const double dense =
        (to_dense(w) * to_dense(d.combo)).trace().real();
    if (std::abs(dense - value) > 1e-10)
      throw std::logic_error("HS pairing disagrees with dense trace");
  }
  return value;
}

std::vector<StabilizerDensity> ppt_density_library(int n) {
  std::vector<StabilizerDensity> lib;
  if (n == 4) {
    for (double s : {1.0, -1.0}) {  // rho+-
      std::map<std::uint32_t, double> b{
          {0u, 1.0 / 16.0},
          {0b0001u, s / 32.0},    // S1
          {0b0011u, s / 32.0},    // S1 S2
          {0b1001u, s / 32.0},    // S1 S4
          {0b1011u, -s / 32.0}};  // S1 S2 S4
      lib.push_back(build_stabilizer_density(Family::GHZ, 4, b));
    }
    std::map<std::uint32_t, double> b{
        {0u, 1.0 / 16.0},
        {0b0010u, 1.0 / 32.0},    // S2
        {0b0011u, 1.0 / 32.0},    // S1 S2
        {0b0110u, 1.0 / 32.0},    // S2 S3
        {0b0111u, -1.0 / 32.0}};  // S1 S2 S3
    lib.push_back(build_stabilizer_density(Family::Cluster, 4, b));
  }
  return lib;
}

DecompEvidence decomposability_evidence(const PauliCombo& w, int n) {
  DecompEvidence out;
  if (n > kDenseMaxQubits)
    throw std::length_error("decomposability scan exceeds dense guard");
  for (std::uint32_t mask = 1; mask < (1u << n) - 1; mask += 2) {
    std::set<int> subset;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1u) subset.insert(i + 1);
    const Matrix pt = to_dense(partial_transpose_combo(w, subset));
    if (min_eigenvalue_dense(pt) >= -1e-10) {
      out.verdict = Decomposability::Decomposable;
      out.pt_subset = subset;
      std::ostringstream msg;
      msg << "partial transpose positive on subset {";
      for (int s : subset) msg << " " << s;
      msg << " }";
      out.detail = msg.str();
      return out;
    }
  }
  for (const auto& d : ppt_density_library(n)) {
    bool ppt = true;
    for (const auto& [mask, ev] : ppt_check(d))
      if (ev < -1e-10) { ppt = false; break; }
    if (!ppt) continue;
    const double value = detect(w, d);
    if (value < -1e-9) {
      std::ostringstream msg;
      msg << "detects a PPT entangled density (" << family_name(d.family)
          << ", Tr = " << value << ")";
      out.verdict = Decomposability::NonDecomposable;
      out.detail = msg.str();
      return out;
    }
  }
  out.detail = "no PT-positive subset and no detected PPT density";
  return out;
}

ClassificationReport classify(const WitnessCandidate& w,
                              const FeasibleRegionModel& region, bool full) {
  ClassificationReport rep;
  const PauliCombo combo = w.to_combo(region);
  rep.min_eigenvalue = spectrum(combo).min();
  rep.is_positive = rep.min_eigenvalue >= -1e-10;
  rep.region_min = simplex_min(w, region).min;
  rep.is_pre_witness = rep.region_min >= -1e-9;
  rep.is_witness = rep.is_pre_witness && rep.min_eigenvalue < -1e-10;
  if (!full) return rep;
  const OptimalityVerdict opt = is_optimal_form(combo);
  rep.optimality = opt.verdict;
  rep.optimality_detail = opt.detail;
  if (rep.is_witness) {
    const DecompEvidence ev = decomposability_evidence(combo, region.n);
    rep.decomposability = ev.verdict;
    rep.decomposability_detail = ev.detail;
  } else {
    rep.decomposability = Decomposability::Inconclusive;
    rep.decomposability_detail = "not a witness";
  }
  return rep;
}

}  // namespace stabwit
