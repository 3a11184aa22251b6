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

#ifndef SLDDLAB_GENERATOR_SET_HPP
#define SLDDLAB_GENERATOR_SET_HPP

#include <cstddef>
#include <vector>

#include "slddlab/bitvec.hpp"
#include "slddlab/pauli.hpp"

namespace sldd {

/// Ordered, GF(2)-independent collection of Hermitian Pauli representatives
/// generating a subgroup modulo phases. Construction validates independence;
/// phases beyond the canonical Hermitian choice are normalized away.
class GeneratorSet {
public:
  GeneratorSet() = default;
  explicit GeneratorSet(std::size_t n_qubits) : n_(n_qubits) {}

  /// Throws if elements are GF(2)-dependent or sizes disagree.
  static GeneratorSet from(std::size_t n_qubits,
                           const std::vector<PauliOperator> &elements);

  std::size_t n_qubits() const { return n_; }
  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }
  const std::vector<PauliOperator> &generators() const { return gens_; }
  const PauliOperator &operator[](std::size_t i) const { return gens_[i]; }

  std::vector<BitVec> symplectic_rows() const;

  /// True iff v's symplectic row lies in the span of this set.
  bool span_contains(const PauliOperator &p) const;

  /// Append without checking (internal use by the extraction routines).
  void push_back_unchecked(PauliOperator p) { gens_.push_back(std::move(p)); }

private:
  std::size_t n_ = 0;
  std::vector<PauliOperator> gens_;
};

/// Gaussian elimination on symplectic rows, phases discarded: returns a
/// maximal independent subset of `elements` (greedy in input order), as
/// Hermitian representatives. Output size equals the GF(2) rank.
GeneratorSet extract_generators(std::size_t n_qubits,
                                const std::vector<PauliOperator> &elements);

/// Generators of the subgroup of P_n commuting with every element of
/// `omega`, via the GF(2) nullspace of the symplectic-product map.
/// Output has exactly 2n − |omega| generators.
GeneratorSet centralizer(const GeneratorSet &omega);

/// True iff span(a) ∩ span(b) = {0}, i.e. the subgroups share only the
/// identity modulo phases.
bool subgroup_intersection_trivial(const GeneratorSet &a,
                                   const GeneratorSet &b);

/// True iff the two sets generate the same subgroup modulo phases.
bool same_span(const GeneratorSet &a, const GeneratorSet &b);

} // namespace sldd

#endif
