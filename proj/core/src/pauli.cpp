#include "stabwit/pauli.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <tuple>

namespace stabwit {

namespace {

int site_code(std::uint32_t x, std::uint32_t z, int idx) {
  return static_cast<int>((x >> idx) & 1u) |
         (static_cast<int>((z >> idx) & 1u) << 1);
}

// Phase exponent table for single-site products W_a * W_b = i^k W_{a xor b}
// with codes 0=I, 1=X, 2=Z, 3=Y (Hermitian letters):
//   XZ = -iY, ZX = iY, XY = iZ, YX = -iZ, YZ = iX, ZY = -iX.
constexpr int kMulPhase[4][4] = {
    {0, 0, 0, 0},  // I *
    {0, 0, 3, 1},  // X * {I,X,Z,Y}
    {0, 1, 0, 3},  // Z *
    {0, 3, 1, 0},  // Y *
};

}  // namespace

PauliString::PauliString(int n, std::uint32_t x_bits, std::uint32_t z_bits,
                         int phase_exp)
    : n_(n), x_(x_bits), z_(z_bits), phase_(((phase_exp % 4) + 4) % 4) {
  if (n < 0 || n > 31) throw std::invalid_argument("qubit count out of range");
  const std::uint32_t mask = n == 0 ? 0u : (n >= 31 ? ~0u : ((1u << n) - 1u));
  if ((x_ & ~mask) || (z_ & ~mask))
    throw std::invalid_argument("bit vector longer than qubit count");
}

PauliString PauliString::parse(const std::string& text, int n) {
  std::size_t pos = 0;
  int phase = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') phase = 2;
    ++pos;
  }
  const std::string body = text.substr(pos);
  if (n >= 0 && static_cast<int>(body.size()) != n)
    throw std::invalid_argument("pauli text length " +
                                std::to_string(body.size()) +
                                " does not match qubit count " +
                                std::to_string(n));
  std::uint32_t x = 0, z = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    switch (body[i]) {
      case 'I': break;
      case 'X': x |= 1u << i; break;
      case 'Z': z |= 1u << i; break;
      case 'Y': x |= 1u << i; z |= 1u << i; break;
      default:
        throw std::invalid_argument(
            "invalid pauli character '" + std::string(1, body[i]) +
            "' at position " + std::to_string(i + 1));
    }
  }
  return PauliString(static_cast<int>(body.size()), x, z, phase);
}

double PauliString::phase_sign() const {
  if (!is_hermitian()) throw std::logic_error("imaginary phase has no sign");
  return phase_ == 0 ? 1.0 : -1.0;
}

char PauliString::letter(int site) const {
  if (site < 1 || site > n_) throw std::out_of_range("site out of range");
  static constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};
  return kLetters[site_code(x_, z_, site - 1)];
}

std::string PauliString::str() const {
  static const char* kPrefix[4] = {"", "i", "-", "-i"};
  std::string out = kPrefix[phase_];
  for (int site = 1; site <= n_; ++site) out += letter(site);
  return out;
}

PauliString PauliString::with_phase_exp(int phase_exp) const {
  return PauliString(n_, x_, z_, phase_exp);
}

bool PauliString::operator<(const PauliString& o) const {
  return std::tie(n_, x_, z_, phase_) < std::tie(o.n_, o.x_, o.z_, o.phase_);
}

PauliString multiply(const PauliString& p, const PauliString& q) {
  if (p.n() != q.n())
    throw std::invalid_argument("pauli dimension mismatch in multiply");
  int phase = p.phase_exp() + q.phase_exp();
  for (int i = 0; i < p.n(); ++i) {
    phase += kMulPhase[site_code(p.x_bits(), p.z_bits(), i)]
                      [site_code(q.x_bits(), q.z_bits(), i)];
  }
  return PauliString(p.n(), p.x_bits() ^ q.x_bits(), p.z_bits() ^ q.z_bits(),
                     phase % 4);
}

PauliString multiply(const std::vector<PauliString>& factors, int n) {
  PauliString acc(n, 0, 0, 0);
  for (const auto& f : factors) acc = multiply(acc, f);
  return acc;
}

bool commutes(const PauliString& p, const PauliString& q) {
  if (p.n() != q.n())
    throw std::invalid_argument("pauli dimension mismatch in commutes");
  const int parity = std::popcount(p.x_bits() & q.z_bits()) +
                     std::popcount(p.z_bits() & q.x_bits());
  return parity % 2 == 0;
}

bool locally_commutes(const PauliString& p, const PauliString& q) {
  if (p.n() != q.n())
    throw std::invalid_argument("pauli dimension mismatch in locally_commutes");
  return ((p.x_bits() & q.z_bits()) ^ (p.z_bits() & q.x_bits())) == 0;
}

PauliString partial_transpose(const PauliString& p,
                              const std::set<int>& subset) {
  int flips = 0;
  for (int site : subset) {
    if (site < 1 || site > p.n())
      throw std::out_of_range("partial transpose site out of range");
    const int idx = site - 1;
    if (((p.x_bits() >> idx) & 1u) && ((p.z_bits() >> idx) & 1u)) ++flips;
  }
  return p.with_phase_exp((p.phase_exp() + 2 * (flips % 2)) % 4);
}

double hs_inner(const PauliString& p, const PauliString& q) {
  if (p.n() != q.n())
    throw std::invalid_argument("pauli dimension mismatch in hs_inner");
  if (!p.is_hermitian() || !q.is_hermitian())
    throw std::invalid_argument("hs_inner requires Hermitian strings");
  if (p.x_bits() != q.x_bits() || p.z_bits() != q.z_bits()) return 0.0;
  return p.phase_sign() * q.phase_sign() * std::ldexp(1.0, p.n());
}

void PauliCombo::add(const PauliString& p, double coeff) {
  if (p.n() != n_)
    throw std::invalid_argument("pauli dimension mismatch in combo add");
  if (!p.is_hermitian())
    throw std::invalid_argument("combo terms must be Hermitian strings");
  const PauliString pattern = p.with_phase_exp(0);
  auto [it, inserted] = terms_.try_emplace(pattern, 0.0);
  it->second += coeff * p.phase_sign();
  if (std::abs(it->second) <= kCoeffTol) terms_.erase(it);
}

double PauliCombo::coeff(const PauliString& pattern) const {
  auto it = terms_.find(pattern.with_phase_exp(0));
  return it == terms_.end() ? 0.0 : it->second;
}

PauliCombo PauliCombo::scaled(double factor) const {
  PauliCombo out(n_);
  for (const auto& [p, c] : terms_) out.add(p, c * factor);
  return out;
}

PauliCombo PauliCombo::operator+(const PauliCombo& o) const {
  if (n_ != o.n_) throw std::invalid_argument("combo dimension mismatch");
  PauliCombo out = *this;
  for (const auto& [p, c] : o.terms_) out.add(p, c);
  return out;
}

std::string PauliCombo::canonical_key() const {
  std::string key;
  char buf[64];
  for (const auto& [p, c] : terms_) {
    const double rounded = std::round(c / kCoeffTol) * kCoeffTol;
    std::snprintf(buf, sizeof(buf), "%08x:%08x:%+.10f;", p.x_bits(),
                  p.z_bits(), rounded);
    key += buf;
  }
  return key;
}

bool PauliCombo::operator==(const PauliCombo& o) const {
  return n_ == o.n_ && canonical_key() == o.canonical_key();
}

}  // namespace stabwit
