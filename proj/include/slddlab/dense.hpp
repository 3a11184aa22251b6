// Copyright 2026 The slddlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SLDDLAB_DENSE_HPP
#define SLDDLAB_DENSE_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "slddlab/pauli.hpp"

namespace sldd {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Total-qubit cap for anything that materializes a 2^n-dimensional matrix.
/// Overridable through the SLDDLAB_DENSE_LIMIT environment variable.
std::size_t dense_qubit_limit();
void set_dense_qubit_limit(std::size_t n);

/// A Pauli as a signed permutation: column j maps to row perm[j] with
/// weight phase[j]. Lets conjugations run in O(dim^2) instead of a matmul.
struct PauliAction {
  std::vector<std::size_t> perm;
  std::vector<Complex> phase;
  std::size_t dim() const { return perm.size(); }
};

/// Action of `p` on the system factor, extended by identity over a bath of
/// dimension bath_dim (joint index = sys_index * bath_dim + bath_index).
PauliAction pauli_action(const PauliOperator &p, std::size_t bath_dim = 1);

/// Exact 2^n x 2^n unitary, phase included. Throws over the dense limit.
Matrix to_matrix(const PauliOperator &p);

/// g M g for an involution g given by its action (g = g^-1 up to the phase
/// bookkeeping handled inside). Exact entry permutation, no matmul.
Matrix conjugate_by_action(const PauliAction &g, const Matrix &m);

/// In-place left multiplication m <- g·m.
void apply_action_left(const PauliAction &g, Matrix &m);

/// Largest |eigenvalue| of a Hermitian matrix (the sup operator norm).
double sup_norm_hermitian(const Matrix &h);

/// Largest singular value, for non-Hermitian blocks.
double sup_norm(const Matrix &m);

/// exp(i·scale·H) for Hermitian H, via eigendecomposition.
Matrix exp_i_hermitian(const Matrix &h, double scale);

/// Eigendecomposition cache for repeated exp(-iHt) evaluations.
struct HermitianEigen {
  Eigen::VectorXd values;
  Matrix vectors;
};
HermitianEigen hermitian_eigen(const Matrix &h);
Matrix exp_i_from_eigen(const HermitianEigen &e, double scale);

/// Principal-branch Hermitian generator: the H with U = exp(i·H) and
/// eigenphases in (-pi, pi). Throws if an eigenphase sits within `margin`
/// of the branch cut.
Matrix principal_log_generator(const Matrix &u, double margin = 1e-6);

} // namespace sldd

#endif
