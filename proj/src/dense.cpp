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

#include "slddlab/dense.hpp"

#include "slddlab/errors.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sldd {

namespace {
std::size_t g_dense_limit = [] {
  if (const char *env = std::getenv("SLDDLAB_DENSE_LIMIT")) {
    const long v = std::atol(env);
    if (v > 0)
      return static_cast<std::size_t>(v);
  }
  return std::size_t{12};
}();
} // namespace

std::size_t dense_qubit_limit() { return g_dense_limit; }
void set_dense_qubit_limit(std::size_t n) { g_dense_limit = n; }

PauliAction pauli_action(const PauliOperator &p, std::size_t bath_dim) {
  const std::size_t n = p.n_qubits();
  const std::size_t sys_dim = std::size_t{1} << n;
  static const Complex i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const Complex global = i_pow[p.phase_exp() & 3];

  // Basis label bit for qubit q (1-based leftmost) is bit n-q of the index.
  std::uint64_t xmask = 0, zmask = 0;
  for (std::size_t q = 0; q < n; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << (n - 1 - q);
    if (p.x_bits().get(q))
      xmask |= bit;
    if (p.z_bits().get(q))
      zmask |= bit;
  }

  PauliAction a;
  a.perm.resize(sys_dim * bath_dim);
  a.phase.resize(sys_dim * bath_dim);
  for (std::uint64_t b = 0; b < sys_dim; ++b) {
    // X^x Z^z |b> = (-1)^{z·b} |b xor x>
    const bool neg = std::popcount(b & zmask) & 1;
    const Complex ph = neg ? -global : global;
    const std::uint64_t target = b ^ xmask;
    for (std::size_t k = 0; k < bath_dim; ++k) {
      a.perm[b * bath_dim + k] = target * bath_dim + k;
      a.phase[b * bath_dim + k] = ph;
    }
  }
  return a;
}

Matrix to_matrix(const PauliOperator &p) {
  if (p.n_qubits() > dense_qubit_limit())
    throw resource_error(
        "to_matrix: " + std::to_string(p.n_qubits()) +
        " qubits exceeds the dense limit of " +
        std::to_string(dense_qubit_limit()));
  const auto a = pauli_action(p);
  const auto d = static_cast<Eigen::Index>(a.dim());
  Matrix m = Matrix::Zero(d, d);
  for (Eigen::Index j = 0; j < d; ++j)
    m(static_cast<Eigen::Index>(a.perm[j]), j) = a.phase[j];
  return m;
}

Matrix conjugate_by_action(const PauliAction &g, const Matrix &m) {
  const auto d = static_cast<Eigen::Index>(g.dim());
  if (m.rows() != d || m.cols() != d)
    throw std::invalid_argument("conjugate_by_action: dimension mismatch");
  // Computes g M g† elementwise:
  //   out(perm[i], perm[j]) = phase[i] * M(i, j) * conj(phase[j]).
  // For the Hermitian involutions used as pulses, g† = g, so this is g M g.
  Matrix out(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    const auto pj = static_cast<Eigen::Index>(g.perm[j]);
    const Complex fj = std::conj(g.phase[j]);
    for (Eigen::Index i = 0; i < d; ++i)
      out(static_cast<Eigen::Index>(g.perm[i]), pj) =
          g.phase[i] * m(i, j) * fj;
  }
  return out;
}

void apply_action_left(const PauliAction &g, Matrix &m) {
  const auto d = static_cast<Eigen::Index>(g.dim());
  if (m.rows() != d)
    throw std::invalid_argument("apply_action_left: dimension mismatch");
  Matrix out(d, m.cols());
  for (Eigen::Index i = 0; i < d; ++i)
    out.row(static_cast<Eigen::Index>(g.perm[i])) = g.phase[i] * m.row(i);
  m = std::move(out);
}

double sup_norm_hermitian(const Matrix &h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("sup_norm_hermitian: eigensolver failed");
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

double sup_norm(const Matrix &m) {
  if (m.rows() == 0 || m.cols() == 0)
    return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

HermitianEigen hermitian_eigen(const Matrix &h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eigen: eigensolver failed");
  return HermitianEigen{es.eigenvalues(), es.eigenvectors()};
}

Matrix exp_i_from_eigen(const HermitianEigen &e, double scale) {
  const Eigen::Index d = e.values.size();
  Vector diag(d);
  for (Eigen::Index i = 0; i < d; ++i)
    diag(i) = std::polar(1.0, scale * e.values(i));
  return e.vectors * diag.asDiagonal() * e.vectors.adjoint();
}

Matrix exp_i_hermitian(const Matrix &h, double scale) {
  return exp_i_from_eigen(hermitian_eigen(h), scale);
}

Matrix principal_log_generator(const Matrix &u, double margin) {
  // U is unitary, hence normal: its Schur form is diagonal and the Schur
  // vectors are an orthonormal eigenbasis.
  Eigen::ComplexSchur<Matrix> schur(u);
  if (schur.info() != Eigen::Success)
    throw std::runtime_error("principal_log_generator: Schur failed");
  const Eigen::Index d = u.rows();
  Eigen::VectorXd theta(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const Complex lambda = schur.matrixT()(i, i);
    const double th = std::arg(lambda);
    if (std::abs(std::abs(th) - std::numbers::pi) < margin)
      throw std::runtime_error(
          "principal_log_generator: eigenphase within " +
          std::to_string(margin) +
          " of the branch cut; rerun with a smaller total time");
    theta(i) = th;
  }
  const Matrix &q = schur.matrixU();
  Matrix h = q * theta.asDiagonal() * q.adjoint();
  // symmetrize away the rounding skew
  return 0.5 * (h + h.adjoint().eval());
}

} // namespace sldd
