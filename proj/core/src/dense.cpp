#include "stabwit/dense.hpp"

#include <stdexcept>

namespace stabwit {

namespace {
const std::complex<double> kI(0.0, 1.0);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

Matrix pauli_matrix(char letter) {
  Matrix m(2, 2);
  switch (letter) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -kI, kI, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("unknown pauli letter");
  }
  return m;
}

Matrix to_dense(const PauliString& p) {
  if (p.n() > kDenseMaxQubits)
    throw std::length_error("dense realization exceeds qubit guard");
  Matrix out = Matrix::Identity(1, 1);
  for (int site = 1; site <= p.n(); ++site)
    out = kron(out, pauli_matrix(p.letter(site)));
  static const std::complex<double> kPhases[4] = {1.0, kI, -1.0, -kI};
  return kPhases[p.phase_exp()] * out;
}

Matrix to_dense(const PauliCombo& w) {
  const Eigen::Index dim = Eigen::Index(1) << w.n();
  Matrix out = Matrix::Zero(dim, dim);
  for (const auto& [p, c] : w.terms()) out += c * to_dense(p);
  return out;
}

Matrix partial_transpose_dense(const Matrix& m, int n,
                               const std::set<int>& subset) {
  const Eigen::Index dim = Eigen::Index(1) << n;
  if (m.rows() != dim || m.cols() != dim)
    throw std::invalid_argument("matrix dimension does not match qubit count");
  std::uint32_t mask = 0;
  for (int site : subset) {
    if (site < 1 || site > n)
      throw std::out_of_range("partial transpose site out of range");
    // Site 1 is the leftmost tensor factor = most significant bit.
    mask |= 1u << (n - site);
  }
  Matrix out(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      const Eigen::Index r2 = (r & ~Eigen::Index(mask)) | (c & mask);
      const Eigen::Index c2 = (c & ~Eigen::Index(mask)) | (r & mask);
      out(r2, c2) = m(r, c);
    }
  }
  return out;
}

static void check_hermitian(const Matrix& m, double tol) {
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol)
    throw std::invalid_argument("matrix is not Hermitian");
}

double min_eigenvalue_dense(const Matrix& m, double herm_tol) {
  check_hermitian(m, herm_tol);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

Eigen::VectorXd eigenvalues_dense(const Matrix& m, double herm_tol) {
  check_hermitian(m, herm_tol);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

}  // namespace stabwit
