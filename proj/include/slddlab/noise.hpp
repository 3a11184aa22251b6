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

#ifndef SLDDLAB_NOISE_HPP
#define SLDDLAB_NOISE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "slddlab/dense.hpp"
#include "slddlab/pauli.hpp"

namespace sldd {

/// One k-local noise term: coefficient * (system Pauli ⊗ bath operator).
struct NoiseTerm {
  double coefficient = 0.0;
  PauliOperator system_pauli;
  Matrix bath_operator; // Hermitian, 2^{n_bath} square
};

/// Random bounded-norm noise on system ⊗ bath. Reconstruction from
/// (seed, parameters) is deterministic; the assembled Hamiltonian is
/// Hermitian with sup norm equal to norm_target.
struct NoiseModel {
  std::size_t n_sys = 0;
  std::size_t n_bath = 0;
  std::size_t locality = 1;
  double norm_target = 1.0;
  std::uint64_t seed = 0;
  std::vector<NoiseTerm> terms;

  std::size_t sys_dim() const { return std::size_t{1} << n_sys; }
  std::size_t bath_dim() const { return std::size_t{1} << n_bath; }
  std::size_t total_dim() const { return sys_dim() * bath_dim(); }

  Matrix assemble() const;
};

/// Samples every system Pauli of support 1..locality (or a seeded subset
/// once the count exceeds max_terms), each paired with an independent
/// GUE-symmetrized bath operator, plus one pure-bath term; the result is
/// rescaled so the assembled norm equals j_norm.
NoiseModel random_noise(std::size_t n_sys, std::size_t n_bath,
                        std::size_t locality, double j_norm,
                        std::uint64_t seed, std::size_t max_terms = 256);

} // namespace sldd

#endif
