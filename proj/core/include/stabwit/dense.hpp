#pragma once

#include <Eigen/Dense>
#include <complex>
#include <set>

#include "stabwit/pauli.hpp"

namespace stabwit {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Dense guard: operators above this qubit count are refused.
inline constexpr int kDenseMaxQubits = 12;

Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);

/// Single-qubit constants.
Matrix pauli_matrix(char letter);  // 'I','X','Y','Z'

/// Dense realization of a signed Pauli string (site 1 = leftmost factor).
Matrix to_dense(const PauliString& p);

/// Dense realization of a Hermitian combo.
Matrix to_dense(const PauliCombo& w);

/// Entry-wise partial transpose over a 1-based qubit subset.
Matrix partial_transpose_dense(const Matrix& m, int n,
                               const std::set<int>& subset);

/// Smallest eigenvalue of a Hermitian matrix (dense eigensolver).
/// Throws if the input is not Hermitian within tol.
double min_eigenvalue_dense(const Matrix& m, double herm_tol = 1e-10);

/// All eigenvalues of a Hermitian matrix, ascending.
Eigen::VectorXd eigenvalues_dense(const Matrix& m, double herm_tol = 1e-10);

}  // namespace stabwit
