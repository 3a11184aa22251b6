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

#include "slddlab/noise.hpp"

#include "slddlab/errors.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace sldd {

namespace {

/// Box-Muller over mt19937_64 draws. std::normal_distribution is
/// implementation-defined, so the transform is spelled out to keep
/// (seed -> model) reproducible across standard libraries.
class Gaussian {
public:
  explicit Gaussian(std::uint64_t seed) : rng_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    // u1 in (0,1], u2 in [0,1)
    const double u1 =
        (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  std::uint64_t raw() { return rng_(); }

private:
  std::mt19937_64 rng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

Matrix gue_hermitian(Gaussian &g, std::size_t dim) {
  Matrix a(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      a(i, j) = Complex(g.next(), g.next()) / std::sqrt(2.0);
  return 0.5 * (a + a.adjoint().eval());
}

} // namespace

Matrix NoiseModel::assemble() const {
  const auto dim = static_cast<Eigen::Index>(total_dim());
  const auto bd = static_cast<Eigen::Index>(bath_dim());
  Matrix h = Matrix::Zero(dim, dim);
  for (const auto &term : terms) {
    const auto action = pauli_action(term.system_pauli);
    // kron(system Pauli, bath op), exploiting the signed-permutation form
    for (std::size_t col_s = 0; col_s < action.dim(); ++col_s) {
      const auto row_s = static_cast<Eigen::Index>(action.perm[col_s]);
      const Complex w = term.coefficient * action.phase[col_s];
      h.block(row_s * bd, static_cast<Eigen::Index>(col_s) * bd, bd, bd) +=
          w * term.bath_operator;
    }
  }
  return h;
}

NoiseModel random_noise(std::size_t n_sys, std::size_t n_bath,
                        std::size_t locality, double j_norm,
                        std::uint64_t seed, std::size_t max_terms) {
  if (n_sys < 1)
    throw std::invalid_argument("random_noise: need at least one system qubit");
  if (n_sys + n_bath > dense_qubit_limit())
    throw resource_error("random_noise: total qubits exceed the dense limit");
  if (locality < 1 || locality > n_sys)
    throw std::invalid_argument("random_noise: locality must be in [1, n_sys]");
  if (!(j_norm > 0))
    throw std::invalid_argument("random_noise: norm target must be positive");

  NoiseModel model;
  model.n_sys = n_sys;
  model.n_bath = n_bath;
  model.locality = locality;
  model.norm_target = j_norm;
  model.seed = seed;

  // Deterministic enumeration of the candidate system Paulis.
  std::vector<PauliOperator> sys_paulis;
  const std::uint64_t total = std::uint64_t{1} << (2 * n_sys);
  for (std::uint64_t code = 1; code < total; ++code) {
    BitVec x(n_sys), z(n_sys);
    for (std::size_t q = 0; q < n_sys; ++q) {
      if ((code >> q) & 1)
        x.set(q, true);
      if ((code >> (n_sys + q)) & 1)
        z.set(q, true);
    }
    PauliOperator p =
        PauliOperator(n_sys, x, z, 0).hermitian_representative();
    if (p.support_size() <= locality)
      sys_paulis.push_back(std::move(p));
  }

  Gaussian g(seed);
  if (sys_paulis.size() > max_terms) {
    // seeded Fisher-Yates prefix, then keep the first max_terms
    for (std::size_t i = 0; i + 1 < sys_paulis.size(); ++i) {
      const std::size_t j = i + g.raw() % (sys_paulis.size() - i);
      std::swap(sys_paulis[i], sys_paulis[j]);
    }
    sys_paulis.resize(max_terms);
  }

  const std::size_t bd = model.bath_dim();
  // pure-bath term first
  model.terms.push_back({g.next(), PauliOperator(n_sys), gue_hermitian(g, bd)});
  for (const auto &p : sys_paulis)
    model.terms.push_back({g.next(), p, gue_hermitian(g, bd)});

  const double norm = sup_norm_hermitian(model.assemble());
  if (!(norm > 0))
    throw std::runtime_error("random_noise: degenerate sample with zero norm");
  const double scale = j_norm / norm;
  for (auto &t : model.terms)
    t.coefficient *= scale;
  return model;
}

} // namespace sldd
