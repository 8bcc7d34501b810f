#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace stabwit {

/// Comparison tolerance shared by the symbolic layer (coefficient rounding,
/// combo canonicalization).
inline constexpr double kCoeffTol = 1e-12;

/// A signed n-qubit Pauli operator in symplectic binary form.
///
/// Site k (1-based) carries sigma_x iff bit (k-1) of x_bits is set and
/// sigma_z iff bit (k-1) of z_bits is set; a site with both bits set is
/// sigma_y (the Hermitian matrix, with the phase tracked separately).
/// The overall phase is i^phase_exp with phase_exp in {0,1,2,3}, i.e.
/// {+1, +i, -1, -i}. Hermitian strings have phase_exp 0 or 2.
class PauliString {
 public:
  PauliString() = default;
  PauliString(int n, std::uint32_t x_bits, std::uint32_t z_bits,
              int phase_exp = 0);

  /// Parses "XZ", "-YY", "+XIZY", ... Length after the optional sign must
  /// equal n when n >= 0; with n < 0 the length defines n.
  static PauliString parse(const std::string& text, int n = -1);

  int n() const { return n_; }
  std::uint32_t x_bits() const { return x_; }
  std::uint32_t z_bits() const { return z_; }
  int phase_exp() const { return phase_; }
  /// Phase as a real number; throws if the phase is imaginary.
  double phase_sign() const;
  bool is_hermitian() const { return phase_ % 2 == 0; }
  bool is_identity_pattern() const { return x_ == 0 && z_ == 0; }

  /// Site letter at 1-based position: 'I', 'X', 'Y' or 'Z'.
  char letter(int site) const;
  /// Canonical text form: sign prefix ("", "-", "i", "-i") + letters.
  std::string str() const;

  PauliString with_phase_exp(int phase_exp) const;
  PauliString negated() const { return with_phase_exp((phase_ + 2) % 4); }

  bool operator==(const PauliString& o) const {
    return n_ == o.n_ && x_ == o.x_ && z_ == o.z_ && phase_ == o.phase_;
  }
  bool operator<(const PauliString& o) const;

 private:
  int n_ = 0;
  std::uint32_t x_ = 0;
  std::uint32_t z_ = 0;
  int phase_ = 0;  // exponent of i
};

/// Group product with exact phase tracking over {+-1, +-i}.
PauliString multiply(const PauliString& p, const PauliString& q);

/// Product of a list, left to right; identity for an empty list.
PauliString multiply(const std::vector<PauliString>& factors, int n);

/// Global commutation: symplectic inner product vanishes.
bool commutes(const PauliString& p, const PauliString& q);

/// Site-wise commutation: the single-qubit factors commute at every site.
bool locally_commutes(const PauliString& p, const PauliString& q);

/// Partial transpose over a 1-based qubit subset: flips the sign once per
/// sigma_y inside the subset.
PauliString partial_transpose(const PauliString& p,
                              const std::set<int>& subset);

/// Hilbert-Schmidt inner product Tr(P Q) for Hermitian strings:
/// +-2^n when the bit patterns coincide, else 0.
double hs_inner(const PauliString& p, const PauliString& q);

/// A real linear combination of phase-normalized Pauli strings; represents a
/// Hermitian operator. Keys always carry phase_exp == 0; signs live in the
/// coefficients. Terms with |coefficient| <= kCoeffTol are dropped.
class PauliCombo {
 public:
  explicit PauliCombo(int n) : n_(n) {}

  int n() const { return n_; }
  const std::map<PauliString, double>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Adds coeff * p, folding p's (+-1) phase into the coefficient.
  /// Throws if p has an imaginary phase.
  void add(const PauliString& p, double coeff);
  double coeff(const PauliString& pattern) const;

  PauliCombo scaled(double factor) const;
  PauliCombo operator+(const PauliCombo& o) const;

  /// Canonical text key: terms sorted by (x_bits, z_bits), coefficients
  /// rounded at kCoeffTol. Used for set semantics in orbit expansion.
  std::string canonical_key() const;

  bool operator==(const PauliCombo& o) const;
  bool operator<(const PauliCombo& o) const {
    return canonical_key() < o.canonical_key();
  }

 private:
  int n_;
  std::map<PauliString, double> terms_;
};

}  // namespace stabwit
