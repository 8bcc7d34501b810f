#include "stabwit/region.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "stabwit/dense.hpp"

namespace stabwit {

RegionVariant variant_from_name(const std::string& name) {
  std::string s;
  for (char c : name) s += static_cast<char>(std::tolower(c));
  if (s == "even") return RegionVariant::Even;
  if (s == "odd") return RegionVariant::Odd;
  if (s == "exceptional") return RegionVariant::Exceptional;
  throw std::invalid_argument("unknown region variant: " + name);
}

std::string variant_name(RegionVariant v) {
  switch (v) {
    case RegionVariant::Even: return "even";
    case RegionVariant::Odd: return "odd";
    case RegionVariant::Exceptional: return "exceptional";
  }
  return "?";
}

int FeasibleRegionModel::coord_index(const std::string& label) const {
  for (int i = 0; i < dim(); ++i)
    if (coordinates[i].label == label) return i;
  throw std::invalid_argument("unknown coordinate label: " + label);
}

Eigen::VectorXd FeasibleRegionModel::halfspace_row(const HalfSpace& h) const {
  Eigen::VectorXd row = Eigen::VectorXd::Zero(dim());
  for (const auto& [label, c] : h.coeffs) row(coord_index(label)) = c;
  return row;
}

PauliCombo FeasibleRegionModel::halfspace_combo(const HalfSpace& h) const {
  PauliCombo combo(n);
  for (const auto& [label, c] : h.coeffs)
    combo.add(coordinates[coord_index(label)].element, c);
  return combo;
}

namespace {

double sgn(int bit) { return bit ? -1.0 : 1.0; }

std::string plbl(int i) { return "P" + std::to_string(i); }

std::string plbl(int i, int j) {
  return "P" + std::to_string(i) + "," + std::to_string(j);
}

PauliString gen_product(const std::vector<PauliString>& gens,
                        std::initializer_list<int> one_based) {
  std::vector<PauliString> factors;
  for (int i : one_based) factors.push_back(gens[i - 1]);
  return multiply(factors, gens[0].n());
}

struct Builder {
  FeasibleRegionModel model;

  void coord(const std::string& label, const PauliString& el) {
    model.coordinates.push_back({label, el});
  }

  Eigen::VectorXd zero() const {
    return Eigen::VectorXd::Zero(model.dim());
  }

  void vertex(const Eigen::VectorXd& coords,
              const std::vector<std::string>& base,
              const CliffordOp& circuit) {
    VertexRow row;
    row.coords = coords;
    row.has_constructor = true;
    row.base = base;
    row.circuit = circuit;
    model.vertices.push_back(std::move(row));
  }

  void shifted_vertex(const Eigen::VectorXd& coords) {
    VertexRow row;
    row.coords = coords;
    row.has_constructor = false;
    row.circuit = CliffordOp::identity(model.n);
    model.vertices.push_back(std::move(row));
  }

  void halfspace(const std::map<std::string, double>& coeffs, double bound) {
    model.halfspaces.push_back({coeffs, bound, true});
  }
};

std::vector<std::string> ghz_base(int n, int sign_bit) {
  std::vector<std::string> base(n, "x+");
  if (sign_bit) base[0] = "x-";
  return base;
}

std::vector<std::string> cluster_base(int n) {
  // site 1 z+, site 2 x+, alternating
  std::vector<std::string> base;
  for (int i = 0; i < n; ++i) base.push_back(i % 2 == 0 ? "z+" : "x+");
  return base;
}

// ---------------- GHZ (even / odd product families) ----------------

FeasibleRegionModel build_ghz(RegionVariant variant, int n) {
  const bool odd = variant == RegionVariant::Odd;
  if (n < 2 || (odd && n < 3))
    throw std::invalid_argument("GHZ region needs n >= 2 (odd variant >= 3)");
  const auto gens = generators(Family::GHZ, n);
  const int nk = odd ? (n - 1) / 2 : n / 2;

  Builder b;
  b.model.family = Family::GHZ;
  b.model.variant = variant;
  b.model.n = n;
  for (int j = 2; j <= n; ++j) b.coord(plbl(j), gens[j - 1]);
  b.coord(plbl(1), gens[0]);
  std::vector<std::string> prods;
  for (int k = 1; k <= nk; ++k) {
    const int other = odd ? 2 * k + 1 : 2 * k;
    prods.push_back(plbl(1, other));
    b.coord(prods.back(), gen_product(gens, {1, other}));
  }
  const int d = b.model.dim();

  for (int s = 0; s <= 1; ++s) {  // |Psi+->
    Eigen::VectorXd c = b.zero();
    c(n - 1) = sgn(s);
    b.vertex(c, ghz_base(n, s), CliffordOp::identity(n));
  }
  for (int k = 1; k <= nk; ++k) {  // Lambda rows
    const int a = odd ? 2 * k : 2 * k - 1;
    for (int s = 0; s <= 1; ++s) {
      Eigen::VectorXd c = b.zero();
      c(n + k - 1) = sgn(s);
      CliffordOp circ = CliffordOp::identity(n);
      circ.then(GateKind::Mdg, a).then(GateKind::M, a + 1);
      b.vertex(c, ghz_base(n, s), circ);
    }
  }
  // Xi rows: all-H base with sigma_x flips on sites 3..n+1
  for (std::uint32_t iv = 0; iv < (1u << (n - 1)); ++iv) {
    Eigen::VectorXd c = b.zero();
    std::vector<int> full(n, 0);
    for (int j = 0; j < n - 1; ++j) full[j + 1] = (iv >> j) & 1u;
    for (int j = 2; j <= n; ++j) c(j - 2) = sgn(full[j - 2] ^ full[j - 1]);
    CliffordOp circ = CliffordOp::identity(n);
    for (int j = 1; j <= n; ++j) circ.then(GateKind::H, j);
    for (int j = 0; j < n - 1; ++j)
      if ((iv >> j) & 1u) circ.then(GateKind::X, j + 2);
    b.vertex(c, std::vector<std::string>(n, "x+"), circ);
  }
  (void)d;
  for (int j = 2; j <= n; ++j) {
    for (int s1 = 0; s1 <= 1; ++s1) {
      for (std::uint32_t sv = 0; sv < (1u << nk); ++sv) {
        std::map<std::string, double> coeffs{{plbl(1), 1.0},
                                             {plbl(j), sgn(s1)}};
        for (int k = 0; k < nk; ++k) coeffs[prods[k]] = sgn((sv >> k) & 1u);
        b.halfspace(coeffs, 1.0);
      }
    }
  }
  return std::move(b.model);
}

// ---------------- Cluster even (labels over even sites + block) ----------

FeasibleRegionModel build_cluster_even(int n, int m) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("cluster even variant needs even n >= 4");
  if (m < 2 || 2 * m > n)
    throw std::invalid_argument("cluster even variant needs 2 <= m <= n/2");
  const auto gens = generators(Family::Cluster, n);
  Builder b;
  b.model.family = Family::Cluster;
  b.model.variant = RegionVariant::Even;
  b.model.n = n;
  b.model.m = m;
  std::vector<int> ev;
  for (int j = 2; j <= n; j += 2) ev.push_back(j);
  for (int j : ev) {
    if (j == 2 * m) b.coord(plbl(2 * m - 1), gens[2 * m - 2]);
    b.coord(plbl(j), gens[j - 1]);
  }
  const std::string prod = plbl(2 * m - 1, 2 * m);
  b.coord(prod, gen_product(gens, {2 * m - 1, 2 * m}));
  const auto base = cluster_base(n);
  auto idx = [&](const std::string& l) { return b.model.coord_index(l); };

  const int ne = static_cast<int>(ev.size());
  for (std::uint32_t iv = 0; iv < (1u << ne); ++iv) {  // Lambda
    Eigen::VectorXd c = b.zero();
    CliffordOp circ = CliffordOp::identity(n);
    for (int k = 0; k < ne; ++k) {
      c(idx(plbl(ev[k]))) = sgn((iv >> k) & 1u);
      if ((iv >> k) & 1u) circ.then(GateKind::Z, ev[k]);
    }
    b.vertex(c, base, circ);
  }
  std::vector<int> oth;
  for (int j : ev)
    if (j != 2 * m - 2 && j != 2 * m) oth.push_back(j);
  const int no = static_cast<int>(oth.size());
  for (std::uint32_t iv = 0; iv < (1u << no); ++iv) {  // Lambda'
    for (int s = 0; s <= 1; ++s) {
      Eigen::VectorXd c = b.zero();
      c(idx(plbl(2 * m - 1))) = sgn(s);
      CliffordOp circ = CliffordOp::identity(n);
      circ.then(GateKind::H, 2 * m - 2)
          .then(GateKind::H, 2 * m - 1)
          .then(GateKind::H, 2 * m);
      for (int k = 0; k < no; ++k) {
        c(idx(plbl(oth[k]))) = sgn((iv >> k) & 1u);
        if ((iv >> k) & 1u) circ.then(GateKind::Z, oth[k]);
      }
      if (s) circ.then(GateKind::Z, 2 * m - 1);
      b.vertex(c, base, circ);
    }
  }
  for (std::uint32_t iv = 0; iv < (1u << no); ++iv) {  // Lambda''
    for (int s = 0; s <= 1; ++s) {
      Eigen::VectorXd c = b.zero();
      c(idx(prod)) = sgn(s);
      CliffordOp circ = CliffordOp::identity(n);
      circ.then(GateKind::M, 2 * m)
          .then(GateKind::H, 2 * m - 1)
          .then(GateKind::M, 2 * m - 1)
          .then(GateKind::H, 2 * m - 2);
      for (int k = 0; k < no; ++k) {
        c(idx(plbl(oth[k]))) = sgn((iv >> k) & 1u);
        if ((iv >> k) & 1u) circ.then(GateKind::Z, oth[k]);
      }
      if (s) circ.then(GateKind::Z, 2 * m);
      b.vertex(c, base, circ);
    }
  }
  for (int other : {2 * m - 2, 2 * m}) {
    for (int s1 = 0; s1 <= 1; ++s1)
      for (int s2 = 0; s2 <= 1; ++s2)
        b.halfspace({{plbl(2 * m - 1), 1.0},
                     {plbl(other), sgn(s1)},
                     {prod, sgn(s2)}},
                    1.0);
  }
  for (int j : ev)
    if (j != 2 * m - 2 && j != 2 * m) b.halfspace({{plbl(j), 1.0}}, 1.0);
  return std::move(b.model);
}

// ---------------- Cluster odd (labels over odd sites + block) ------------

FeasibleRegionModel build_cluster_odd(int n, int m) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("cluster odd variant needs odd n >= 3");
  if (m < 1 || 2 * m + 1 > n)
    throw std::invalid_argument(
        "cluster odd variant needs 1 <= m <= (n-1)/2");
  const auto gens = generators(Family::Cluster, n);
  Builder b;
  b.model.family = Family::Cluster;
  b.model.variant = RegionVariant::Odd;
  b.model.n = n;
  b.model.m = m;
  std::vector<int> oddsites;
  for (int j = 1; j <= n; j += 2) oddsites.push_back(j);
  for (int j : oddsites) {
    b.coord(plbl(j), gens[j - 1]);
    if (j == 2 * m - 1) b.coord(plbl(2 * m), gens[2 * m - 1]);
  }
  const std::string prod = plbl(2 * m, 2 * m + 1);
  b.coord(prod, gen_product(gens, {2 * m, 2 * m + 1}));
  const auto base = cluster_base(n);
  auto idx = [&](const std::string& l) { return b.model.coord_index(l); };
  auto all_h = [&](CliffordOp& circ) {
    for (int j = 1; j <= n; ++j) circ.then(GateKind::H, j);
  };

  const int no_all = static_cast<int>(oddsites.size());
  for (std::uint32_t iv = 0; iv < (1u << no_all); ++iv) {  // Lambda
    Eigen::VectorXd c = b.zero();
    CliffordOp circ = CliffordOp::identity(n);
    all_h(circ);
    for (int k = 0; k < no_all; ++k) {
      c(idx(plbl(oddsites[k]))) = sgn((iv >> k) & 1u);
      if ((iv >> k) & 1u) circ.then(GateKind::Z, oddsites[k]);
    }
    b.vertex(c, base, circ);
  }
  std::vector<int> oth;
  for (int j : oddsites)
    if (j != 2 * m - 1 && j != 2 * m + 1) oth.push_back(j);
  const int no = static_cast<int>(oth.size());
  for (std::uint32_t iv = 0; iv < (1u << no); ++iv) {  // Lambda'
    for (int s = 0; s <= 1; ++s) {
      Eigen::VectorXd c = b.zero();
      c(idx(plbl(2 * m))) = sgn(s);
      CliffordOp circ = CliffordOp::identity(n);
      circ.then(GateKind::H, 2 * m - 1)
          .then(GateKind::H, 2 * m)
          .then(GateKind::H, 2 * m + 1);
      all_h(circ);
      for (int k = 0; k < no; ++k) {
        c(idx(plbl(oth[k]))) = sgn((iv >> k) & 1u);
        if ((iv >> k) & 1u) circ.then(GateKind::Z, oth[k]);
      }
      if (s) circ.then(GateKind::Z, 2 * m);
      b.vertex(c, base, circ);
    }
  }
  for (std::uint32_t iv = 0; iv < (1u << no); ++iv) {  // Lambda''
    for (int s = 0; s <= 1; ++s) {
      Eigen::VectorXd c = b.zero();
      c(idx(prod)) = sgn(s);
      CliffordOp circ = CliffordOp::identity(n);
      all_h(circ);
      circ.then(GateKind::H, 2 * m - 1)
          .then(GateKind::H, 2 * m)
          .then(GateKind::M, 2 * m)
          .then(GateKind::M, 2 * m + 1);
      for (int k = 0; k < no; ++k) {
        c(idx(plbl(oth[k]))) = sgn((iv >> k) & 1u);
        if ((iv >> k) & 1u) circ.then(GateKind::Z, oth[k]);
      }
      if (s) circ.then(GateKind::Z, 2 * m);
      b.vertex(c, base, circ);
    }
  }
  for (int other : {2 * m - 1, 2 * m + 1}) {
    for (int s1 = 0; s1 <= 1; ++s1)
      for (int s2 = 0; s2 <= 1; ++s2)
        b.halfspace({{plbl(2 * m), 1.0},
                     {plbl(other), sgn(s1)},
                     {prod, sgn(s2)}},
                    1.0);
  }
  for (int j : oddsites)
    if (j != 2 * m - 1 && j != 2 * m + 1) b.halfspace({{plbl(j), 1.0}}, 1.0);
  return std::move(b.model);
}

// ---------------- exceptional families ----------------

FeasibleRegionModel build_fi() {
  const auto gens = generators(Family::FiveQubit, 5);
  Builder b;
  b.model.family = Family::FiveQubit;
  b.model.variant = RegionVariant::Exceptional;
  b.model.n = 5;
  b.coord("P1", gens[0]);
  b.coord("P2", gens[1]);
  b.coord("P3", gens[2]);
  b.coord("P3,4", gen_product(gens, {3, 4}));
  auto base = [](int s) {
    return std::vector<std::string>{s ? "x-" : "x+", "z+", "z+", "x+", "z+"};
  };
  for (int s = 0; s <= 1; ++s) {
    Eigen::VectorXd c;
    c = b.zero(); c(0) = sgn(s);
    b.vertex(c, base(s), CliffordOp::identity(5));
    c = b.zero(); c(1) = sgn(s);
    b.vertex(c, base(s),
             CliffordOp::identity(5)
                 .then(GateKind::SW, 1, 5)
                 .then(GateKind::H, 2)
                 .then(GateKind::H, 4));
    c = b.zero(); c(2) = sgn(s);
    b.vertex(c, base(s),
             CliffordOp::identity(5)
                 .then(GateKind::SW, 2, 5)
                 .then(GateKind::H, 3)
                 .then(GateKind::H, 4));
    c = b.zero(); c(3) = sgn(s);
    b.vertex(c, base(s),
             CliffordOp::identity(5)
                 .then(GateKind::H, 2)
                 .then(GateKind::H, 3)
                 .then(GateKind::M, 1)
                 .then(GateKind::M, 4));
  }
  for (int s2 = 0; s2 <= 1; ++s2)
    for (int s3 = 0; s3 <= 1; ++s3)
      for (int s4 = 0; s4 <= 1; ++s4)
        b.halfspace({{"P1", 1.0},
                     {"P2", sgn(s2)},
                     {"P3", sgn(s3)},
                     {"P3,4", sgn(s4)}},
                    1.0);
  return std::move(b.model);
}

FeasibleRegionModel build_se() {
  const auto gens = generators(Family::SevenQubit, 7);
  Builder b;
  b.model.family = Family::SevenQubit;
  b.model.variant = RegionVariant::Exceptional;
  b.model.n = 7;
  for (int i = 1; i <= 6; ++i) b.coord(plbl(i), gens[i - 1]);
  b.coord("P1,4", gen_product(gens, {1, 4}));
  const std::vector<std::string> base(7, "z+");
  const int xs[3] = {1, 2, 4};
  for (std::uint32_t iv = 0; iv < 8; ++iv) {
    Eigen::VectorXd c = b.zero();
    CliffordOp circ = CliffordOp::identity(7);
    for (int k = 0; k < 3; ++k) {
      c(k) = sgn((iv >> k) & 1u);
      if ((iv >> k) & 1u) circ.then(GateKind::X, xs[k]);
    }
    b.vertex(c, base, circ);
    Eigen::VectorXd c2 = b.zero();
    CliffordOp circ2 = CliffordOp::identity(7);
    for (int j = 1; j <= 7; ++j) circ2.then(GateKind::H, j);
    for (int k = 0; k < 3; ++k) {
      c2(3 + k) = sgn((iv >> k) & 1u);
      if ((iv >> k) & 1u) circ2.then(GateKind::Z, xs[k]);
    }
    b.vertex(c2, base, circ2);
  }
  for (int s = 0; s <= 1; ++s) {
    Eigen::VectorXd c = b.zero();
    c(6) = sgn(s);
    CliffordOp circ = CliffordOp::identity(7);
    for (int j : {1, 3, 5, 7}) circ.then(GateKind::H, j).then(GateKind::M, j);
    if (s) circ.then(GateKind::Z, 1);
    b.vertex(c, base, circ);
  }
  for (int i : {1, 2, 3})
    for (int j : {4, 5, 6})
      for (int sj = 0; sj <= 1; ++sj)
        for (int sp = 0; sp <= 1; ++sp)
          b.halfspace({{plbl(i), 1.0},
                       {plbl(j), sgn(sj)},
                       {"P1,4", sgn(sp)}},
                      1.0);
  return std::move(b.model);
}

FeasibleRegionModel build_ei() {
  const auto gens = generators(Family::EightQubit, 8);
  Builder b;
  b.model.family = Family::EightQubit;
  b.model.variant = RegionVariant::Exceptional;
  b.model.n = 8;
  for (int i = 1; i <= 5; ++i) b.coord(plbl(i), gens[i - 1]);
  b.coord("P1,2,3", gen_product(gens, {1, 2, 3}));
  b.coord("P1,2,4", gen_product(gens, {1, 2, 4}));
  auto base = [](int s) {
    std::vector<std::string> v(8, "x+");
    if (s) v[0] = "x-";
    return v;
  };
  struct Row { int idx; std::vector<Gate> circuit; bool z4_sign; };
  auto g = [](GateKind k, int s) { return Gate{k, s, 0}; };
  const std::vector<Row> rows = {
      {0, {}, false},
      {1, {g(GateKind::H, 1), g(GateKind::H, 2), g(GateKind::H, 3),
           g(GateKind::H, 4), g(GateKind::H, 5), g(GateKind::H, 6),
           g(GateKind::H, 7), g(GateKind::H, 8)}, false},
      {2, {g(GateKind::H, 1), g(GateKind::M, 3), g(GateKind::H, 5),
           g(GateKind::M, 7)}, false},
      {3, {g(GateKind::H, 2), g(GateKind::H, 3), g(GateKind::M, 6),
           g(GateKind::M, 7)}, true},
      {4, {g(GateKind::H, 4), g(GateKind::M, 5), g(GateKind::M, 6),
           g(GateKind::H, 7)}, false},
      {5, {g(GateKind::H, 2), g(GateKind::H, 6), g(GateKind::M, 4),
           g(GateKind::M, 8)}, false},
      {6, {g(GateKind::M, 1), g(GateKind::H, 4), g(GateKind::H, 5),
           g(GateKind::M, 8)}, false},
  };
  for (const auto& row : rows) {
    for (int s = 0; s <= 1; ++s) {
      Eigen::VectorXd c = b.zero();
      c(row.idx) = sgn(s);
      CliffordOp circ{8, row.circuit};
      if (row.z4_sign) {
        if (s) circ.then(GateKind::Z, 4);
        b.vertex(c, base(0), circ);
      } else {
        b.vertex(c, base(s), circ);
      }
    }
  }
  const std::string others[6] = {"P2", "P3", "P4", "P5", "P1,2,3", "P1,2,4"};
  for (std::uint32_t sv = 0; sv < 64; ++sv) {
    std::map<std::string, double> coeffs{{"P1", 1.0}};
    for (int k = 0; k < 6; ++k) coeffs[others[k]] = sgn((sv >> k) & 1u);
    b.halfspace(coeffs, 1.0);
  }
  return std::move(b.model);
}

FeasibleRegionModel build_ni() {
  const auto gens = generators(Family::NineQubit, 9);
  Builder b;
  b.model.family = Family::NineQubit;
  b.model.variant = RegionVariant::Exceptional;
  b.model.n = 9;
  for (int i = 1; i <= 8; ++i) b.coord(plbl(i), gens[i - 1]);
  b.coord("P1,3", gen_product(gens, {1, 3}));
  const std::vector<std::string> base(9, "x+");
  for (std::uint32_t iv = 0; iv < 4; ++iv) {  // (P1, P2)
    Eigen::VectorXd c = b.zero();
    c(0) = sgn(iv & 1u);
    c(1) = sgn((iv >> 1) & 1u);
    CliffordOp circ = CliffordOp::identity(9);
    if (iv & 1u) circ.then(GateKind::Z, 1);
    if ((iv >> 1) & 1u) circ.then(GateKind::Z, 7);
    b.vertex(c, base, circ);
  }
  for (std::uint32_t iv = 0; iv < 8; ++iv) {  // (P1, P7, P8)
    Eigen::VectorXd c = b.zero();
    c(0) = sgn(iv & 1u);
    c(6) = sgn((iv >> 1) & 1u);
    c(7) = sgn((iv >> 2) & 1u);
    CliffordOp circ = CliffordOp::identity(9);
    circ.then(GateKind::H, 7).then(GateKind::H, 8).then(GateKind::H, 9);
    if (iv & 1u) circ.then(GateKind::Z, 1);
    if ((iv >> 1) & 1u) circ.then(GateKind::X, 7);
    if ((iv >> 2) & 1u) circ.then(GateKind::X, 9);
    b.vertex(c, base, circ);
  }
  for (std::uint32_t iv = 0; iv < 8; ++iv) {  // (P2, P3, P4)
    Eigen::VectorXd c = b.zero();
    c(1) = sgn(iv & 1u);
    c(2) = sgn((iv >> 1) & 1u);
    c(3) = sgn((iv >> 2) & 1u);
    CliffordOp circ = CliffordOp::identity(9);
    circ.then(GateKind::H, 1).then(GateKind::H, 2).then(GateKind::H, 3);
    if (iv & 1u) circ.then(GateKind::Z, 4);
    if ((iv >> 1) & 1u) circ.then(GateKind::X, 1);
    if ((iv >> 2) & 1u) circ.then(GateKind::X, 3);
    b.vertex(c, base, circ);
  }
  for (std::uint32_t iv = 0; iv < 8; ++iv) {  // (P7, P8, P1,3)
    Eigen::VectorXd c = b.zero();
    c(6) = sgn(iv & 1u);
    c(7) = sgn((iv >> 1) & 1u);
    c(8) = sgn((iv >> 2) & 1u);
    CliffordOp circ = CliffordOp::identity(9);
    circ.then(GateKind::Mdg, 1)
        .then(GateKind::M, 2)
        .then(GateKind::H, 7)
        .then(GateKind::H, 8)
        .then(GateKind::H, 9);
    if (iv & 1u) circ.then(GateKind::X, 7);
    if ((iv >> 1) & 1u) circ.then(GateKind::X, 9);
    if ((iv >> 2) & 1u) circ.then(GateKind::Z, 1);
    b.vertex(c, base, circ);
  }
  const int flip_sites[6] = {1, 3, 4, 6, 7, 9};
  for (std::uint32_t iv = 0; iv < 64; ++iv) {  // big Lambda (P3..P8)
    Eigen::VectorXd c = b.zero();
    CliffordOp circ = CliffordOp::identity(9);
    for (int j = 1; j <= 9; ++j) circ.then(GateKind::H, j);
    for (int k = 0; k < 6; ++k) {
      c(2 + k) = sgn((iv >> k) & 1u);
      if ((iv >> k) & 1u) circ.then(GateKind::X, flip_sites[k]);
    }
    b.vertex(c, base, circ);
  }
  for (std::uint32_t iv = 0; iv < 4; ++iv) {  // (P2, P1,3)
    Eigen::VectorXd c = b.zero();
    c(1) = sgn(iv & 1u);
    c(8) = sgn((iv >> 1) & 1u);
    CliffordOp circ = CliffordOp::identity(9);
    circ.then(GateKind::Mdg, 1).then(GateKind::M, 2);
    if (iv & 1u) circ.then(GateKind::Z, 9);
    if ((iv >> 1) & 1u) circ.then(GateKind::Z, 1);
    b.vertex(c, base, circ);
  }
  for (int i : {3, 4, 5, 6})
    for (int s1 = 0; s1 <= 1; ++s1)
      for (int s2 = 0; s2 <= 1; ++s2)
        b.halfspace({{"P1", 1.0}, {plbl(i), sgn(s1)}, {"P1,3", sgn(s2)}},
                    1.0);
  for (int j : {5, 6, 7, 8})
    for (int s1 = 0; s1 <= 1; ++s1)
      b.halfspace({{"P2", 1.0}, {plbl(j), sgn(s1)}}, 1.0);
  return std::move(b.model);
}

// Dense coordinates of a constructed product point, rounded at 1e-12.
Eigen::VectorXd dense_coords(const FeasibleRegionModel& model,
                             const VertexRow& row) {
  Vector psi(1);
  psi(0) = 1.0;
  static const std::map<std::string, Vector> kets = [] {
    std::map<std::string, Vector> k;
    Vector v(2);
    v << 1.0, 1.0; k["x+"] = v / std::sqrt(2.0);
    v << 1.0, -1.0; k["x-"] = v / std::sqrt(2.0);
    v << 1.0, 0.0; k["z+"] = v;
    v << 0.0, 1.0; k["z-"] = v;
    return k;
  }();
  for (const auto& label : row.base) psi = kron(psi, kets.at(label));
  psi = dense_unitary(row.circuit) * psi;
  Eigen::VectorXd c(model.dim());
  for (int i = 0; i < model.dim(); ++i) {
    const std::complex<double> val =
        psi.dot(to_dense(model.coordinates[i].element) * psi);
    double x = val.real();
    if (std::abs(x - std::round(x)) < 1e-12) x = std::round(x);
    c(i) = x;
  }
  return c;
}

}  // namespace

FeasibleRegionModel build_region(Family f, RegionVariant variant, int n,
                                 int m) {
  switch (f) {
    case Family::GHZ:
      if (variant == RegionVariant::Exceptional)
        throw std::invalid_argument("GHZ region variant must be even or odd");
      return build_ghz(variant, n);
    case Family::Cluster:
      return variant == RegionVariant::Even ? build_cluster_even(n, m)
             : variant == RegionVariant::Odd
                 ? build_cluster_odd(n, m)
                 : throw std::invalid_argument(
                       "cluster region variant must be even or odd");
    case Family::FiveQubit: return build_fi();
    case Family::SevenQubit: return build_se();
    case Family::EightQubit: return build_ei();
    case Family::NineQubit: return build_ni();
    default:
      throw std::invalid_argument("no feasible-region model for family " +
                                  family_name(f));
  }
}

FeasibleRegionModel build_region_approx(Family f, RegionVariant variant,
                                        int n,
                                        const std::string& extra_term) {
  if (f == Family::GHZ) {
    if (variant != RegionVariant::Even || n != 4 || extra_term != "S1S3")
      throw std::invalid_argument(
          "approximate GHZ model is shipped for (even, n=4, extra S1S3)");
    const double mu = (1.0 + std::sqrt(2.0)) / 2.0;
    FeasibleRegionModel model = build_ghz(RegionVariant::Even, 4);
    const auto gens = generators(Family::GHZ, 4);
    model.approximate = true;
    model.mu = mu;
    model.l = 1;
    model.extra_term = extra_term;
    // Pure product points: the exact rows plus the Lambda^{ap} pair, with
    // the extra coordinate evaluated densely.
    std::vector<VertexRow> exact_rows = std::move(model.vertices);
    model.vertices.clear();
    model.halfspaces.clear();
    model.coordinates.push_back(
        {plbl(1, 3), gen_product(gens, {1, 3})});
    for (int s = 0; s <= 1; ++s) {
      VertexRow row;
      row.has_constructor = true;
      row.base = ghz_base(4, s);
      row.circuit = CliffordOp::identity(4);
      row.circuit.then(GateKind::Mdg, 2).then(GateKind::M, 3);
      exact_rows.push_back(std::move(row));
    }
    for (auto& row : exact_rows) {
      row.coords = dense_coords(model, row);
      model.product_points.push_back(row);
    }
    // Shifted half-spaces: |P1 +- Pj + sum +- products| <= mu, plus boxes.
    const std::string group[4] = {"P1", "P1,2", "P1,4", "P1,3"};
    for (int j = 2; j <= 4; ++j) {
      for (int s1 = 0; s1 <= 1; ++s1)
        for (std::uint32_t sv = 0; sv < 8; ++sv) {
          std::map<std::string, double> coeffs{{"P1", 1.0},
                                               {plbl(j), sgn(s1)}};
          for (int k = 0; k < 3; ++k)
            coeffs[group[k + 1]] = sgn((sv >> k) & 1u);
          model.halfspaces.push_back({coeffs, mu, true});
        }
    }
    for (const auto& c : model.coordinates)
      model.halfspaces.push_back({{{c.label, 1.0}}, 1.0, true});
    // Shifted-polytope vertices (V1/V2/V3 families).
    const std::string spokes[3] = {"P2", "P3", "P4"};
    auto push = [&](const std::map<std::string, double>& vals) {
      VertexRow row;
      row.coords = Eigen::VectorXd::Zero(model.dim());
      for (const auto& [label, v] : vals)
        row.coords(model.coord_index(label)) = v;
      row.has_constructor = false;
      row.circuit = CliffordOp::identity(4);
      model.vertices.push_back(std::move(row));
    };
    const double e = mu - 1.0;
    for (std::uint32_t ps = 0; ps < 8; ++ps) {  // V1
      for (const auto& g : group)
        for (int s = 0; s <= 1; ++s) {
          std::map<std::string, double> vals{{g, sgn(s) * e}};
          for (int k = 0; k < 3; ++k) vals[spokes[k]] = sgn((ps >> k) & 1u);
          push(vals);
        }
    }
    for (const auto& g : group)  // V2
      for (int s = 0; s <= 1; ++s)
        for (std::uint32_t ps = 0; ps < 8; ++ps) {
          std::map<std::string, double> vals{{g, sgn(s)}};
          for (int k = 0; k < 3; ++k)
            vals[spokes[k]] = sgn((ps >> k) & 1u) * e;
          push(vals);
        }
    for (const auto& g1 : group)  // V3
      for (const auto& g2 : group) {
        if (g1 == g2) continue;
        for (int s1 = 0; s1 <= 1; ++s1)
          for (int s2 = 0; s2 <= 1; ++s2)
            push({{g1, sgn(s1)}, {g2, sgn(s2) * e}});
      }
    return model;
  }
  if (f == Family::Cluster) {
    if (variant != RegionVariant::Odd || n != 5 || extra_term != "S1S2")
      throw std::invalid_argument(
          "approximate cluster model is shipped for (odd, n=5, extra S1S2)");
    const double eta = 2.0 / std::sqrt(3.0);
    const int m = 1;
    FeasibleRegionModel model = build_cluster_odd(5, m);
    const auto gens = generators(Family::Cluster, 5);
    model.approximate = true;
    model.mu = eta;
    model.extra_term = extra_term;
    std::vector<VertexRow> exact_rows = std::move(model.vertices);
    model.vertices.clear();
    model.halfspaces.clear();
    model.coordinates.push_back(
        {plbl(2 * m - 1, 2 * m), gen_product(gens, {2 * m - 1, 2 * m})});
    for (int s = 0; s <= 1; ++s) {  // Lambda''' product points
      VertexRow row;
      row.has_constructor = true;
      row.base = cluster_base(5);
      row.circuit = CliffordOp::identity(5);
      for (int j = 1; j <= 5; ++j) row.circuit.then(GateKind::H, j);
      row.circuit.then(GateKind::M, 2 * m - 1)
          .then(GateKind::H, 2 * m)
          .then(GateKind::M, 2 * m)
          .then(GateKind::H, 2 * m + 1);
      if (s) row.circuit.then(GateKind::Z, 2 * m);
      exact_rows.push_back(std::move(row));
    }
    for (auto& row : exact_rows) {
      row.coords = dense_coords(model, row);
      model.product_points.push_back(row);
    }
    // |P2 +- P1 +- P2,3 +- P1,2| <= eta and |P2 +- P3 +- P2,3 +- P1,2| <= eta
    // plus boxes on every coordinate.
    for (const std::string other : {std::string("P1"), std::string("P3")}) {
      for (int s1 = 0; s1 <= 1; ++s1)
        for (int s2 = 0; s2 <= 1; ++s2)
          for (int s3 = 0; s3 <= 1; ++s3)
            model.halfspaces.push_back({{{"P2", 1.0},
                                         {other, sgn(s1)},
                                         {"P2,3", sgn(s2)},
                                         {"P1,2", sgn(s3)}},
                                        eta,
                                        true});
    }
    for (const auto& c : model.coordinates)
      model.halfspaces.push_back({{{c.label, 1.0}}, 1.0, true});
    auto push = [&](const std::map<std::string, double>& vals, int s5) {
      VertexRow row;
      row.coords = Eigen::VectorXd::Zero(model.dim());
      for (const auto& [label, v] : vals)
        row.coords(model.coord_index(label)) = v;
      row.coords(model.coord_index("P5")) = sgn(s5);
      row.has_constructor = false;
      row.circuit = CliffordOp::identity(5);
      model.vertices.push_back(std::move(row));
    };
    const double e = eta - 1.0;
    const std::string grp[3] = {"P2", "P2,3", "P1,2"};
    for (int s5 = 0; s5 <= 1; ++s5) {
      for (int sb = 0; sb <= 1; ++sb)  // F1: P1, P3 = +-1
        for (int sc = 0; sc <= 1; ++sc)
          for (const auto& g : grp)
            for (int s = 0; s <= 1; ++s)
              push({{"P1", sgn(sb)}, {"P3", sgn(sc)}, {g, sgn(s) * e}}, s5);
      for (const auto& g : grp) {  // one group coordinate at +-1
        for (int sGg = 0; sGg <= 1; ++sGg) {
          for (const auto& o : grp) {
            if (o == g) continue;
            for (int s = 0; s <= 1; ++s)
              push({{g, sgn(sGg)}, {o, sgn(s) * e}}, s5);
          }
          for (int sb = 0; sb <= 1; ++sb)
            for (int sc = 0; sc <= 1; ++sc)
              push({{g, sgn(sGg)}, {"P1", sgn(sb) * e}, {"P3", sgn(sc) * e}},
                   s5);
        }
      }
    }
    return model;
  }
  throw std::invalid_argument("approximate regions exist for GHZ and Cluster");
}

Vector vertex_state(const FeasibleRegionModel& r, std::size_t vertex_index) {
  if (vertex_index >= r.vertices.size())
    throw std::out_of_range("vertex index out of range");
  const VertexRow& row = r.vertices[vertex_index];
  if (!row.has_constructor)
    throw std::invalid_argument(
        "vertex has no product-state constructor (shifted vertex)");
  Vector psi(1);
  psi(0) = 1.0;
  for (const auto& label : row.base) {
    Vector ket(2);
    if (label == "x+") ket << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    else if (label == "x-") ket << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
    else if (label == "z+") ket << 1.0, 0.0;
    else if (label == "z-") ket << 0.0, 1.0;
    else throw std::invalid_argument("unknown base ket: " + label);
    psi = kron(psi, ket);
  }
  return dense_unitary(row.circuit) * psi;
}

std::vector<PauliCombo> halfspace_operators(const FeasibleRegionModel& r) {
  std::vector<PauliCombo> ops;
  const PauliString identity(r.n, 0, 0, 0);
  for (const auto& h : r.halfspaces) {
    PauliCombo body = r.halfspace_combo(h);
    PauliCombo plus(r.n), minus(r.n);
    plus.add(identity, h.bound);
    minus.add(identity, h.bound);
    for (const auto& [p, c] : body.terms()) {
      plus.add(p, c);
      minus.add(p, -c);
    }
    ops.push_back(plus);
    if (h.two_sided) ops.push_back(minus);
  }
  return ops;
}

ConsistencyReport check_region_consistency(const FeasibleRegionModel& r,
                                           int cloud_samples,
                                           std::uint64_t seed) {
  ConsistencyReport rep;
  auto note = [&](const std::string& msg) {
    rep.ok = false;
    if (rep.violations.size() < 50) rep.violations.push_back(msg);
  };
  std::vector<Eigen::VectorXd> rows;
  std::vector<double> bounds;
  for (const auto& h : r.halfspaces) {
    rows.push_back(r.halfspace_row(h));
    bounds.push_back(h.bound);
  }
  auto check_point = [&](const Eigen::VectorXd& c, const std::string& what,
                         double& worst) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const double v = std::abs(rows[i].dot(c)) - bounds[i];
      worst = std::max(worst, v);
      if (v > 1e-9)
        note(what + " violates half-space " + std::to_string(i) + " by " +
             std::to_string(v));
    }
  };
  for (std::size_t vi = 0; vi < r.vertices.size(); ++vi) {
    const auto& row = r.vertices[vi];
    if (row.has_constructor) {
      const Eigen::VectorXd got = dense_coords(r, row);
      const double err = (got - row.coords).cwiseAbs().maxCoeff();
      rep.max_constructor_error = std::max(rep.max_constructor_error, err);
      if (err > 1e-10)
        note("vertex " + std::to_string(vi) +
             " constructor mismatch: " + std::to_string(err));
    }
    check_point(row.coords, "vertex " + std::to_string(vi),
                rep.max_vertex_violation);
  }
  if (!r.approximate) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      bool supported = false;
      for (const auto& row : r.vertices) {
        if (std::abs(std::abs(rows[i].dot(row.coords)) - bounds[i]) <= 1e-9) {
          supported = true;
          break;
        }
      }
      if (!supported) {
        ++rep.unsupported_halfspaces;
        note("half-space " + std::to_string(i) + " has no supporting vertex");
      }
    }
  } else {
    for (std::size_t pi = 0; pi < r.product_points.size(); ++pi) {
      const auto& row = r.product_points[pi];
      if (row.has_constructor) {
        const Eigen::VectorXd got = dense_coords(r, row);
        const double err = (got - row.coords).cwiseAbs().maxCoeff();
        rep.max_constructor_error = std::max(rep.max_constructor_error, err);
        if (err > 1e-10)
          note("product point " + std::to_string(pi) + " mismatch");
      }
      check_point(row.coords, "product point " + std::to_string(pi),
                  rep.max_point_violation);
    }
    // Random product-state cloud must stay inside the shifted system.
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<PauliCombo> elements;
    for (const auto& c : r.coordinates) {
      PauliCombo w(r.n);
      w.add(c.element, 1.0);
      elements.push_back(w);
    }
    for (int t = 0; t < cloud_samples; ++t) {
      ProductState s;
      for (int k = 0; k < r.n; ++k) {
        Eigen::Vector3d v(gauss(rng), gauss(rng), gauss(rng));
        while (v.norm() < 1e-6) v = {gauss(rng), gauss(rng), gauss(rng)};
        s.bloch.push_back(v.normalized());
      }
      Eigen::VectorXd c(r.dim());
      for (int i = 0; i < r.dim(); ++i) c(i) = expectation(elements[i], s);
      check_point(c, "sampled product state", rep.max_point_violation);
    }
  }
  return rep;
}

GeneratingSet generating_set(const FeasibleRegionModel& r) {
  GeneratingSet out;
  const auto ops = halfspace_operators(r);
  const bool orbits = !r.approximate && (r.family == Family::GHZ ||
                                         r.family == Family::Cluster);
  if (!orbits) {
    out.seeds = ops;
    return out;
  }
  for (int site = 1; site <= r.n; ++site)
    for (GateKind k : {GateKind::X, GateKind::Y, GateKind::Z})
      out.moves.push_back(CliffordOp::identity(r.n).then(k, site));
  std::map<std::string, const PauliCombo*> pending;
  for (const auto& op : ops) pending.emplace(op.canonical_key(), &op);
  while (!pending.empty()) {
    // Orbit class of the lexicographically smallest remaining operator.
    const PauliCombo seed = *pending.begin()->second;
    out.seeds.push_back(seed);
    for (const auto& member : orbit_expand({seed}, out.moves))
      pending.erase(member.canonical_key());
  }
  return out;
}

}  // namespace stabwit
