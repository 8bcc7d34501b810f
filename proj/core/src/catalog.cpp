#include "stabwit/catalog.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <map>

namespace stabwit {

Family family_from_name(const std::string& name) {
  std::string s;
  for (char c : name) s += static_cast<char>(std::tolower(c));
  if (s == "ghz") return Family::GHZ;
  if (s == "cluster") return Family::Cluster;
  if (s == "fivequbit" || s == "fi") return Family::FiveQubit;
  if (s == "sevenqubit" || s == "se") return Family::SevenQubit;
  if (s == "eightqubit" || s == "ei") return Family::EightQubit;
  if (s == "ninequbit" || s == "ni") return Family::NineQubit;
  if (s == "phi") return Family::Phi;
  throw std::invalid_argument("unknown stabilizer family: " + name);
}

std::string family_name(Family f) {
  switch (f) {
    case Family::GHZ: return "GHZ";
    case Family::Cluster: return "Cluster";
    case Family::FiveQubit: return "FiveQubit";
    case Family::SevenQubit: return "SevenQubit";
    case Family::EightQubit: return "EightQubit";
    case Family::NineQubit: return "NineQubit";
    case Family::Phi: return "Phi";
  }
  return "?";
}

int family_fixed_n(Family f) {
  switch (f) {
    case Family::FiveQubit: return 5;
    case Family::SevenQubit: return 7;
    case Family::EightQubit: return 8;
    case Family::NineQubit: return 9;
    default: return 0;
  }
}

int family_code_dimension_k(Family f, int n) {
  switch (f) {
    case Family::GHZ:
    case Family::Cluster: return 0;
    case Family::FiveQubit:
    case Family::SevenQubit:
    case Family::NineQubit: return 1;
    case Family::EightQubit: return 3;
    case Family::Phi: return n - 2;
  }
  return 0;
}

namespace {

void check_family_n(Family f, int n) {
  const int fixed = family_fixed_n(f);
  if (fixed != 0) {
    if (n != fixed)
      throw std::invalid_argument(family_name(f) + " requires n = " +
                                  std::to_string(fixed));
    return;
  }
  if (n < 2) throw std::invalid_argument("family requires n >= 2");
  if (f == Family::Phi && n % 2 != 0)
    throw std::invalid_argument("Phi family requires even n");
}

PauliString from_sites(int n, const std::vector<std::pair<int, char>>& sites) {
  std::string text(n, 'I');
  for (auto [site, letter] : sites) text[site - 1] = letter;
  return PauliString::parse(text, n);
}

}  // namespace

std::vector<PauliString> generators(Family f, int n) {
  check_family_n(f, n);
  std::vector<PauliString> out;
  switch (f) {
    case Family::GHZ: {
      out.push_back(PauliString::parse(std::string(n, 'X'), n));
      for (int k = 2; k <= n; ++k)
        out.push_back(from_sites(n, {{k - 1, 'Z'}, {k, 'Z'}}));
      break;
    }
    case Family::Cluster: {
      out.push_back(from_sites(n, {{1, 'X'}, {2, 'Z'}}));
      for (int k = 2; k <= n - 1; ++k)
        out.push_back(from_sites(n, {{k - 1, 'Z'}, {k, 'X'}, {k + 1, 'Z'}}));
      out.push_back(from_sites(n, {{n - 1, 'Z'}, {n, 'X'}}));
      break;
    }
    case Family::FiveQubit: {
      for (const char* s : {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"})
        out.push_back(PauliString::parse(s, 5));
      break;
    }
    case Family::SevenQubit: {
      for (const char* s : {"ZIZIZIZ", "IZZIIZZ", "IIIZZZZ",
                            "XIXIXIX", "IXXIIXX", "IIIXXXX"})
        out.push_back(PauliString::parse(s, 7));
      break;
    }
    case Family::EightQubit: {
      for (const char* s : {"XXXXXXXX", "ZZZZZZZZ", "ZXYIZXYI",
                            "IZZXXYYI", "XXIZYYZI"})
        out.push_back(PauliString::parse(s, 8));
      break;
    }
    case Family::NineQubit: {
      for (const char* s : {"XXXXXXIII", "IIIXXXXXX", "ZZIIIIIII",
                            "IZZIIIIII", "IIIZZIIII", "IIIIZZIII",
                            "IIIIIIZZI", "IIIIIIIZZ"})
        out.push_back(PauliString::parse(s, 9));
      break;
    }
    case Family::Phi: {
      out.push_back(PauliString::parse(std::string(n, 'X'), n));
      out.push_back(PauliString::parse(std::string(n, 'Z'), n));
      break;
    }
  }
  return out;
}

std::vector<PauliString> enumerate_group(
    const std::vector<PauliString>& gens) {
  if (gens.empty()) throw std::invalid_argument("empty generator set");
  const int n = gens[0].n();
  const std::size_t m = gens.size();
  std::vector<PauliString> out;
  out.reserve(std::size_t(1) << m);
  std::map<std::pair<std::uint32_t, std::uint32_t>, bool> seen;
  for (std::uint32_t j = 0; j < (std::uint32_t(1) << m); ++j) {
    std::vector<PauliString> factors;
    for (std::size_t i = 0; i < m; ++i)
      if ((j >> i) & 1u) factors.push_back(gens[i]);
    PauliString el = multiply(factors, n);
    if (!el.is_hermitian())
      throw std::logic_error("group element with imaginary phase");
    if (!seen.emplace(std::make_pair(el.x_bits(), el.z_bits()), true).second)
      throw std::invalid_argument("dependent generator set (duplicate element)");
    out.push_back(el);
  }
  return out;
}

Matrix stabilized_projector(Family f, int n) {
  check_family_n(f, n);
  if (n > kDenseMaxQubits)
    throw std::length_error("projector exceeds dense qubit guard");
  const auto group = enumerate_group(generators(f, n));
  const Eigen::Index dim = Eigen::Index(1) << n;
  Matrix p = Matrix::Zero(dim, dim);
  for (const auto& s : group) p += to_dense(s);
  return p / static_cast<double>(group.size());
}

namespace {

Vector computational_basis_vector(int n, const std::string& bits) {
  const Eigen::Index dim = Eigen::Index(1) << n;
  Eigen::Index idx = 0;
  for (char c : bits) idx = (idx << 1) | (c == '1' ? 1 : 0);
  Vector v = Vector::Zero(dim);
  v(idx) = 1.0;
  return v;
}

Vector project_and_normalize(const Matrix& projector, const Vector& seed) {
  Vector v = projector * seed;
  const double norm = v.norm();
  if (norm < 1e-12)
    throw std::logic_error("projector annihilates the seed vector");
  return v / norm;
}

}  // namespace

Vector basis_state(Family f, int n, const std::string& labels) {
  check_family_n(f, n);
  switch (f) {
    case Family::GHZ: {
      if (static_cast<int>(labels.size()) > n ||
          labels.find_first_not_of("01") != std::string::npos)
        throw std::invalid_argument("GHZ labels must be <= n bits");
      Vector v = (computational_basis_vector(n, std::string(n, '0')) +
                  computational_basis_vector(n, std::string(n, '1'))) /
                 std::sqrt(2.0);
      std::string padded = labels;
      padded.resize(n, '0');
      std::vector<std::pair<int, char>> sites;
      if (padded[0] == '1') sites.push_back({1, 'Z'});
      for (int k = 2; k <= n; ++k)
        if (padded[k - 1] == '1') sites.push_back({k, 'X'});
      if (sites.empty()) return v;
      return to_dense(from_sites(n, sites)) * v;
    }
    case Family::Cluster: {
      if (!labels.empty())
        throw std::invalid_argument("Cluster takes an empty label");
      return project_and_normalize(
          stabilized_projector(f, n),
          computational_basis_vector(n, std::string(n, '0')));
    }
    case Family::FiveQubit: {
      if (labels != "0" && labels != "1")
        throw std::invalid_argument("FiveQubit label is one bit");
      return project_and_normalize(
          stabilized_projector(f, n),
          computational_basis_vector(5, std::string(5, labels[0])));
    }
    case Family::SevenQubit: {
      static const char* kEven[] = {"0000000", "1010101", "0110011",
                                    "1101001", "0001111", "1100110",
                                    "1011010", "0111100"};
      static const char* kOdd[] = {"1111111", "1110000", "0100101",
                                   "1000011", "0010110", "0101010",
                                   "1001100", "0011001"};
      const char** words = nullptr;
      if (labels == "ev") words = kEven;
      else if (labels == "od") words = kOdd;
      else throw std::invalid_argument("SevenQubit label is 'ev' or 'od'");
      Vector v = Vector::Zero(Eigen::Index(1) << 7);
      for (int i = 0; i < 8; ++i)
        v += computational_basis_vector(7, words[i]);
      return v / std::sqrt(8.0);
    }
    case Family::EightQubit: {
      if (labels.size() != 3 ||
          labels.find_first_not_of("01") != std::string::npos)
        throw std::invalid_argument("EightQubit labels are three bits");
      Vector v = project_and_normalize(
          stabilized_projector(f, 8),
          computational_basis_vector(8, std::string(8, '0')));
      // Mutually commuting logical operators: each commutes with every
      // generator, is independent of the group, and maps the code basis to
      // orthonormal states (lexicographically smallest such triple).
      const PauliString logical[3] = {
          PauliString::parse("XXZZIIII"),
          PauliString::parse("YIXIZIII"),
          PauliString::parse("XZZXZZII"),
      };
      for (int i = 0; i < 3; ++i)
        if (labels[i] == '1') v = to_dense(logical[i]) * v;
      return v;
    }
    case Family::NineQubit: {
      if (labels != "+" && labels != "-")
        throw std::invalid_argument("NineQubit label is '+' or '-'");
      const double sign = labels == "+" ? 1.0 : -1.0;
      Vector triple = (computational_basis_vector(3, "000") +
                       sign * computational_basis_vector(3, "111")) /
                      std::sqrt(2.0);
      return kron(kron(triple, triple), triple);
    }
    case Family::Phi: {
      if (static_cast<int>(labels.size()) != n ||
          labels.find_first_not_of("01") != std::string::npos)
        throw std::invalid_argument("Phi labels are n bits");
      int parity = 0;
      for (char c : labels) parity ^= (c == '1');
      if (parity != 0)
        throw std::invalid_argument("Phi labels must have even parity");
      Vector v = computational_basis_vector(n, labels);
      const Matrix s1 = to_dense(PauliString::parse(std::string(n, 'X'), n));
      return (v + s1 * v) / std::sqrt(2.0);
    }
  }
  throw std::logic_error("unreachable");
}

GraphForm stabilizer_matrix(const std::vector<PauliString>& gens) {
  GraphForm gf;
  if (gens.empty()) return gf;
  gf.n = gens[0].n();
  for (const auto& g : gens) {
    gf.x_rows.push_back(g.x_bits());
    gf.z_rows.push_back(g.z_bits());
  }
  return gf;
}

namespace {

// GF(2) independence of (x|z) against accumulated reduced rows.
struct Gf2Space {
  std::vector<std::uint64_t> rows;  // reduced row echelon basis, z in low bits

  bool insert(std::uint64_t v) {
    for (std::uint64_t r : rows) {
      const std::uint64_t lead = std::uint64_t(1)
                                 << (63 - std::countl_zero(r));
      if (v & lead) v ^= r;
    }
    if (v == 0) return false;
    rows.push_back(v);
    return true;
  }
};

std::uint64_t pack_row(std::uint32_t x, std::uint32_t z, int n) {
  // [X|Z] read left to right with x1 most significant.
  std::uint64_t out = 0;
  for (int i = 0; i < n; ++i) {
    out = (out << 1) | ((x >> i) & 1u);
  }
  for (int i = 0; i < n; ++i) {
    out = (out << 1) | ((z >> i) & 1u);
  }
  return out;
}

}  // namespace

void complete_gamma(GraphForm& gf) {
  const int n = gf.n;
  gf.gamma_x = gf.x_rows;
  gf.gamma_z = gf.z_rows;
  Gf2Space space;
  for (std::size_t i = 0; i < gf.x_rows.size(); ++i) {
    if (!space.insert(pack_row(gf.x_rows[i], gf.z_rows[i], n)))
      throw std::invalid_argument("dependent stabilizer rows");
  }
  // Lexicographically smallest independent completion: scan candidate rows
  // [X|Z] in ascending order of the left-to-right bit string.
  for (std::uint64_t cand = 1;
       gf.gamma_x.size() < static_cast<std::size_t>(n) &&
       cand < (std::uint64_t(1) << (2 * n));
       ++cand) {
    Gf2Space probe = space;
    if (!probe.insert(cand)) continue;
    space = probe;
    std::uint32_t x = 0, z = 0;
    for (int i = 0; i < n; ++i)
      if ((cand >> (2 * n - 1 - i)) & 1u) x |= 1u << i;
    for (int i = 0; i < n; ++i)
      if ((cand >> (n - 1 - i)) & 1u) z |= 1u << i;
    gf.gamma_x.push_back(x);
    gf.gamma_z.push_back(z);
  }
  if (gf.gamma_x.size() != static_cast<std::size_t>(n))
    throw std::logic_error("completion failed to reach full rank");
}

void standard_form(GraphForm& gf) {
  const int n = gf.n;
  if (gf.gamma_x.empty()) complete_gamma(gf);
  if (gf.gamma_x.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("gamma must have n rows");
  std::vector<std::uint32_t> X = gf.gamma_x, Z = gf.gamma_z;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;

  auto col_count = [&](const std::vector<std::uint32_t>& rows, int col,
                       int from_row) {
    int c = 0;
    for (int i = from_row; i < n; ++i) c += (rows[i] >> col) & 1u;
    return c;
  };

  for (int r = 0; r < n; ++r) {
    // Densest-column pivoting over the X block; when it is exhausted, bring
    // in the densest Z column with a Hadamard column-pair swap.
    int best = -1, best_count = 0;
    for (;;) {
      for (int j = r; j < n; ++j) {
        const int c = col_count(X, j, r);
        if (c > best_count) { best = j; best_count = c; }
      }
      if (best_count > 0) break;
      int zbest = -1, zcount = 0;
      for (int j = r; j < n; ++j) {
        const int c = col_count(Z, j, r);
        if (c > zcount) { zbest = j; zcount = c; }
      }
      if (zcount == 0)
        throw std::runtime_error(
            "gamma not reducible: left block singular after all moves");
      for (int i = 0; i < n; ++i) {
        const std::uint32_t m = 1u << zbest;
        const std::uint32_t xb = X[i] & m, zb = Z[i] & m;
        X[i] = (X[i] & ~m) | zb;
        Z[i] = (Z[i] & ~m) | xb;
      }
    }
    if (best != r) {
      for (int i = 0; i < n; ++i) {
        const std::uint32_t mr = 1u << r, mb = 1u << best;
        const std::uint32_t xr = (X[i] >> r) & 1u, xb = (X[i] >> best) & 1u;
        const std::uint32_t zr = (Z[i] >> r) & 1u, zb = (Z[i] >> best) & 1u;
        X[i] = (X[i] & ~(mr | mb)) | (xb << r) | (xr << best);
        Z[i] = (Z[i] & ~(mr | mb)) | (zb << r) | (zr << best);
      }
      std::swap(perm[r], perm[best]);
    }
    int pivot = -1;
    for (int i = r; i < n; ++i) {
      if ((X[i] >> r) & 1u) { pivot = i; break; }
    }
    std::swap(X[r], X[pivot]);
    std::swap(Z[r], Z[pivot]);
    for (int i = 0; i < n; ++i) {
      if (i != r && ((X[i] >> r) & 1u)) {
        X[i] ^= X[r];
        Z[i] ^= Z[r];
      }
    }
  }
  for (int r = 0; r < n; ++r) {
    if (X[r] != (1u << r))
      throw std::logic_error("standard form reduction left block is not I");
  }
  gf.adjacency = Z;
  gf.qubit_perm = perm;
}

}  // namespace stabwit
