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

#include "slddlab/generator_set.hpp"

#include <stdexcept>

#include "slddlab/gf2.hpp"

namespace sldd {

GeneratorSet GeneratorSet::from(std::size_t n_qubits,
                                const std::vector<PauliOperator> &elements) {
  GeneratorSet gs(n_qubits);
  gf2::EchelonBasis basis(2 * n_qubits);
  for (const auto &e : elements) {
    if (e.n_qubits() != n_qubits)
      throw std::invalid_argument("GeneratorSet: element size mismatch");
    if (!basis.insert(e.symplectic_row()))
      throw std::invalid_argument(
          "GeneratorSet: elements are GF(2)-dependent: " + e.str());
    gs.gens_.push_back(e.hermitian_representative());
  }
  return gs;
}

std::vector<BitVec> GeneratorSet::symplectic_rows() const {
  std::vector<BitVec> rows;
  rows.reserve(gens_.size());
  for (const auto &g : gens_)
    rows.push_back(g.symplectic_row());
  return rows;
}

bool GeneratorSet::span_contains(const PauliOperator &p) const {
  gf2::EchelonBasis basis(2 * n_);
  for (const auto &g : gens_)
    basis.insert(g.symplectic_row());
  return basis.contains(p.symplectic_row());
}

GeneratorSet extract_generators(std::size_t n_qubits,
                                const std::vector<PauliOperator> &elements) {
  std::vector<BitVec> rows;
  rows.reserve(elements.size());
  for (const auto &e : elements) {
    if (e.n_qubits() != n_qubits)
      throw std::invalid_argument("extract_generators: element size mismatch");
    rows.push_back(e.symplectic_row());
  }
  const auto kept = gf2::independent_subset(rows, 2 * n_qubits);
  GeneratorSet gs(n_qubits);
  for (auto i : kept)
    gs.push_back_unchecked(elements[i].hermitian_representative());
  return gs;
}

GeneratorSet centralizer(const GeneratorSet &omega) {
  const std::size_t n = omega.n_qubits();
  // A Pauli c commutes with g iff x_g·z_c + z_g·x_c = 0; as a linear map on
  // (x_c|z_c) this is the dot product with the swapped row (z_g|x_g).
  std::vector<BitVec> swapped;
  swapped.reserve(omega.size());
  for (const auto &g : omega.generators())
    swapped.push_back(BitVec::concat(g.z_bits(), g.x_bits()));
  const auto basis = gf2::nullspace(swapped, 2 * n);
  GeneratorSet gs(n);
  for (const auto &row : basis)
    gs.push_back_unchecked(PauliOperator::from_symplectic_row(row));
  return gs;
}

bool subgroup_intersection_trivial(const GeneratorSet &a,
                                   const GeneratorSet &b) {
  if (a.n_qubits() != b.n_qubits())
    throw std::invalid_argument(
        "subgroup_intersection_trivial: size mismatch");
  return gf2::spans_intersect_trivially(a.symplectic_rows(),
                                        b.symplectic_rows(),
                                        2 * a.n_qubits());
}

bool same_span(const GeneratorSet &a, const GeneratorSet &b) {
  if (a.n_qubits() != b.n_qubits())
    return false;
  return gf2::spans_equal(a.symplectic_rows(), b.symplectic_rows(),
                          2 * a.n_qubits());
}

} // namespace sldd
