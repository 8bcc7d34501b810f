#include "stabwit/clifford.hpp"

#include <map>
#include <stdexcept>

namespace stabwit {

CliffordOp& CliffordOp::then(GateKind kind, int s1, int s2) {
  circuit.push_back(Gate{kind, s1, s2});
  return *this;
}

namespace {

void check_site(int site, int n) {
  if (site < 1 || site > n) throw std::out_of_range("gate site out of range");
}

struct Bits {
  bool x;
  bool z;
};

Bits get(std::uint32_t x, std::uint32_t z, int site) {
  return {((x >> (site - 1)) & 1u) != 0, ((z >> (site - 1)) & 1u) != 0};
}

void put(std::uint32_t& x, std::uint32_t& z, int site, Bits b) {
  const std::uint32_t m = 1u << (site - 1);
  x = (x & ~m) | (b.x ? m : 0u);
  z = (z & ~m) | (b.z ? m : 0u);
}

}  // namespace

PauliString conjugate(const CliffordOp& op, const PauliString& p) {
  if (op.n != p.n())
    throw std::invalid_argument("circuit/string dimension mismatch");
  std::uint32_t x = p.x_bits(), z = p.z_bits();
  int phase = p.phase_exp();
  for (const Gate& g : op.circuit) {
    check_site(g.s1, op.n);
    switch (g.kind) {
      case GateKind::H: {
        Bits b = get(x, z, g.s1);
        if (b.x && b.z) phase += 2;  // Y -> -Y
        put(x, z, g.s1, {b.z, b.x});
        break;
      }
      case GateKind::M: {
        Bits b = get(x, z, g.s1);
        if (b.x) {
          if (b.z) phase += 2;  // Y -> -X
          put(x, z, g.s1, {b.x, !b.z});
        }
        break;
      }
      case GateKind::Mdg: {
        Bits b = get(x, z, g.s1);
        if (b.x) {
          if (!b.z) phase += 2;  // X -> -Y
          put(x, z, g.s1, {b.x, !b.z});
        }
        break;
      }
      case GateKind::CN: {
        check_site(g.s2, op.n);
        Bits c = get(x, z, g.s1), t = get(x, z, g.s2);
        if (c.x && t.z && (t.x == c.z)) phase += 2;
        put(x, z, g.s2, {t.x != c.x, t.z});
        put(x, z, g.s1, {c.x, c.z != t.z});
        break;
      }
      case GateKind::SW: {
        check_site(g.s2, op.n);
        Bits a = get(x, z, g.s1), b = get(x, z, g.s2);
        put(x, z, g.s1, b);
        put(x, z, g.s2, a);
        break;
      }
      case GateKind::X: {
        Bits b = get(x, z, g.s1);
        if (b.z) phase += 2;
        break;
      }
      case GateKind::Y: {
        Bits b = get(x, z, g.s1);
        if (b.x != b.z) phase += 2;
        break;
      }
      case GateKind::Z: {
        Bits b = get(x, z, g.s1);
        if (b.x) phase += 2;
        break;
      }
    }
  }
  return PauliString(p.n(), x, z, phase % 4);
}

PauliCombo conjugate_combo(const CliffordOp& op, const PauliCombo& w) {
  PauliCombo out(w.n());
  for (const auto& [p, c] : w.terms()) out.add(conjugate(op, p), c);
  return out;
}

Matrix dense_unitary(const CliffordOp& op) {
  if (op.n > kDenseMaxQubits)
    throw std::length_error("dense unitary exceeds qubit guard");
  const Eigen::Index dim = Eigen::Index(1) << op.n;
  Matrix u = Matrix::Identity(dim, dim);
  const std::complex<double> kI(0.0, 1.0);
  for (const Gate& g : op.circuit) {
    check_site(g.s1, op.n);
    Matrix gate;
    switch (g.kind) {
      case GateKind::H: {
        Matrix h(2, 2);
        h << 1, 1, 1, -1;
        h /= std::sqrt(2.0);
        gate = Matrix::Identity(1, 1);
        for (int s = 1; s <= op.n; ++s)
          gate = kron(gate, s == g.s1 ? h : Matrix::Identity(2, 2));
        break;
      }
      case GateKind::M:
      case GateKind::Mdg: {
        Matrix m(2, 2);
        m << 1, 0, 0, (g.kind == GateKind::M ? kI : -kI);
        gate = Matrix::Identity(1, 1);
        for (int s = 1; s <= op.n; ++s)
          gate = kron(gate, s == g.s1 ? m : Matrix::Identity(2, 2));
        break;
      }
      case GateKind::X:
      case GateKind::Y:
      case GateKind::Z: {
        const char letter = g.kind == GateKind::X   ? 'X'
                            : g.kind == GateKind::Y ? 'Y'
                                                    : 'Z';
        gate = Matrix::Identity(1, 1);
        for (int s = 1; s <= op.n; ++s)
          gate = kron(gate,
                      s == g.s1 ? pauli_matrix(letter) : Matrix::Identity(2, 2));
        break;
      }
      case GateKind::CN:
      case GateKind::SW: {
        check_site(g.s2, op.n);
        gate = Matrix::Zero(dim, dim);
        for (Eigen::Index b = 0; b < dim; ++b) {
          // Site 1 is the most significant bit.
          const Eigen::Index m1 = Eigen::Index(1) << (op.n - g.s1);
          const Eigen::Index m2 = Eigen::Index(1) << (op.n - g.s2);
          Eigen::Index out = b;
          if (g.kind == GateKind::CN) {
            if (b & m1) out = b ^ m2;
          } else {
            const bool b1 = (b & m1) != 0, b2 = (b & m2) != 0;
            if (b1 != b2) out = b ^ m1 ^ m2;
          }
          gate(out, b) = 1.0;
        }
        break;
      }
    }
    u = gate * u;  // first listed gate acts first
  }
  return u;
}

std::vector<PauliCombo> orbit_expand(const std::vector<PauliCombo>& seeds,
                                     const std::vector<CliffordOp>& moves,
                                     std::size_t cap) {
  std::map<std::string, PauliCombo> seen;
  std::vector<PauliCombo> frontier;
  for (const auto& s : seeds) {
    if (seen.emplace(s.canonical_key(), s).second) frontier.push_back(s);
  }
  while (!frontier.empty()) {
    std::vector<PauliCombo> next;
    for (const auto& w : frontier) {
      for (const auto& move : moves) {
        PauliCombo image = conjugate_combo(move, w);
        if (seen.emplace(image.canonical_key(), image).second) {
          next.push_back(std::move(image));
          if (seen.size() > cap)
            throw std::runtime_error("orbit expansion exceeded cap");
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<PauliCombo> out;
  out.reserve(seen.size());
  for (auto& [key, w] : seen) out.push_back(std::move(w));
  return out;
}

}  // namespace stabwit
