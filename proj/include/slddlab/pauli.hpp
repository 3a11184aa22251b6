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

#ifndef SLDDLAB_PAULI_HPP
#define SLDDLAB_PAULI_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "slddlab/bitvec.hpp"

namespace sldd {

/// An n-qubit Pauli group element, stored as i^{phase_exp} X^x Z^z.
///
/// Qubit 1 is the leftmost tensor factor (1-based in all text formats,
/// 0-based in the x/z bit vectors). The phase exponent is tracked mod 4,
/// so products are exact group products, not just symplectic sums.
class PauliOperator {
public:
  PauliOperator() = default;

  /// Identity on n qubits.
  explicit PauliOperator(std::size_t n_qubits)
      : n_(n_qubits), x_(n_qubits), z_(n_qubits), phase_(0) {}

  PauliOperator(std::size_t n_qubits, BitVec x, BitVec z, int phase_exp);

  std::size_t n_qubits() const { return n_; }
  const BitVec &x_bits() const { return x_; }
  const BitVec &z_bits() const { return z_; }
  int phase_exp() const { return phase_; }

  bool is_identity() const { return !x_.any() && !z_.any(); }
  bool is_identity_up_to_phase() const { return is_identity(); }

  /// Weight: number of qubits acted on non-trivially.
  std::size_t support_size() const;

  /// True when the stored phase makes the operator Hermitian
  /// (phase_exp ≡ x·z mod 2).
  bool is_hermitian() const;

  /// Same symplectic content, canonical phase i^{x·z}: Hermitian, squares
  /// to the identity, and positive in the letter convention (phase prefix
  /// "+"). Every MOOS/DDGS element is stored in this form.
  PauliOperator hermitian_representative() const;

  /// The (x|z) row used by all GF(2) linear algebra. Phases drop out here.
  BitVec symplectic_row() const { return BitVec::concat(x_, z_); }

  /// Single-qubit factories, 1-based qubit index.
  static PauliOperator x_on(std::size_t n_qubits, std::size_t qubit);
  static PauliOperator y_on(std::size_t n_qubits, std::size_t qubit);
  static PauliOperator z_on(std::size_t n_qubits, std::size_t qubit);

  /// Build from a symplectic row (x|z) of length 2n with canonical
  /// Hermitian phase.
  static PauliOperator from_symplectic_row(const BitVec &row);

  /// Parse text like "XZIIY", "-YI", "+iXZ", "-iZZ". The sign prefix is
  /// optional and defaults to "+".
  static PauliOperator parse(const std::string &text);

  /// Canonical text form: sign prefix ("", "-", "+i", "-i" — "+': omitted)
  /// followed by one letter per qubit, qubit 1 first.
  std::string str() const;

  /// Embed into a larger register: qubit j of this operator lands on
  /// qubit_map[j] (0-based) of the target register.
  PauliOperator embed(std::size_t n_total,
                      const std::vector<std::size_t> &qubit_map) const;

  friend bool operator==(const PauliOperator &a, const PauliOperator &b) {
    return a.n_ == b.n_ && a.phase_ == b.phase_ && a.x_ == b.x_ && a.z_ == b.z_;
  }

private:
  std::size_t n_ = 0;
  BitVec x_, z_;
  int phase_ = 0;
};

/// Exact group product p·q with the phase exponent tracked mod 4.
PauliOperator multiply(const PauliOperator &p, const PauliOperator &q);

/// i^k · p.
PauliOperator times_phase(const PauliOperator &p, int k);

/// True iff the symplectic inner product x_p·z_q + z_p·x_q vanishes mod 2.
bool commutes(const PauliOperator &p, const PauliOperator &q);

/// The symplectic inner product itself (0 or 1).
int symplectic_product(const PauliOperator &p, const PauliOperator &q);

/// Strict ordering by Pauli letters (I < X < Y < Z), qubit 1 most
/// significant; phases ignored. Used wherever a deterministic enumeration
/// order is required.
bool pauli_letter_less(const PauliOperator &a, const PauliOperator &b);

} // namespace sldd

#endif
