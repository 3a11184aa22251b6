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

#include "slddlab/pauli.hpp"

#include <stdexcept>

namespace sldd {

PauliOperator::PauliOperator(std::size_t n_qubits, BitVec x, BitVec z,
                             int phase_exp)
    : n_(n_qubits), x_(std::move(x)), z_(std::move(z)),
      phase_(((phase_exp % 4) + 4) % 4) {
  if (x_.size() != n_ || z_.size() != n_)
    throw std::invalid_argument("PauliOperator: bit vector length != n_qubits");
}

std::size_t PauliOperator::support_size() const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n_; ++i)
    if (x_.get(i) || z_.get(i))
      ++c;
  return c;
}

bool PauliOperator::is_hermitian() const {
  return (phase_ & 1) == (x_.dot(z_) ? 1 : 0);
}

PauliOperator PauliOperator::hermitian_representative() const {
  return PauliOperator(n_, x_, z_, x_.dot(z_) ? 1 : 0);
}

PauliOperator PauliOperator::x_on(std::size_t n_qubits, std::size_t qubit) {
  PauliOperator p(n_qubits);
  p.x_.set(qubit - 1, true);
  return p;
}

PauliOperator PauliOperator::z_on(std::size_t n_qubits, std::size_t qubit) {
  PauliOperator p(n_qubits);
  p.z_.set(qubit - 1, true);
  return p;
}

PauliOperator PauliOperator::y_on(std::size_t n_qubits, std::size_t qubit) {
  PauliOperator p(n_qubits);
  p.x_.set(qubit - 1, true);
  p.z_.set(qubit - 1, true);
  p.phase_ = 1; // Y = i XZ
  return p;
}

PauliOperator PauliOperator::from_symplectic_row(const BitVec &row) {
  if (row.size() % 2 != 0)
    throw std::invalid_argument("symplectic row must have even length");
  const std::size_t n = row.size() / 2;
  BitVec x = row.slice(0, n);
  BitVec z = row.slice(n, n);
  const int phase = x.dot(z) ? 1 : 0;
  return PauliOperator(n, std::move(x), std::move(z), phase);
}

PauliOperator PauliOperator::parse(const std::string &text) {
  std::size_t pos = 0;
  int prefix = 0; // exponent w in i^w relative to the letter operator
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    prefix = (text[pos] == '-') ? 2 : 0;
    ++pos;
    if (pos < text.size() && text[pos] == 'i') {
      prefix = (prefix + 1) % 4;
      ++pos;
    }
  } else if (pos < text.size() && text[pos] == 'i') {
    prefix = 1;
    ++pos;
  }
  const std::size_t n = text.size() - pos;
  if (n == 0)
    throw std::invalid_argument("Pauli string has no letters: '" + text + "'");
  BitVec x(n), z(n);
  int letters_phase = 0; // Y contributes a factor i per occurrence
  for (std::size_t q = 0; q < n; ++q) {
    switch (text[pos + q]) {
    case 'I':
      break;
    case 'X':
      x.set(q, true);
      break;
    case 'Y':
      x.set(q, true);
      z.set(q, true);
      letters_phase = (letters_phase + 1) % 4;
      break;
    case 'Z':
      z.set(q, true);
      break;
    default:
      throw std::invalid_argument(std::string("invalid Pauli letter '") +
                                  text[pos + q] + "' in '" + text + "'");
    }
  }
  return PauliOperator(n, std::move(x), std::move(z),
                       (prefix + letters_phase) % 4);
}

std::string PauliOperator::str() const {
  // Letter operator carries i^{x·z}; the printed prefix is the remainder.
  int letters_phase = 0;
  std::string body;
  body.reserve(n_);
  for (std::size_t q = 0; q < n_; ++q) {
    const bool xb = x_.get(q), zb = z_.get(q);
    if (xb && zb) {
      body.push_back('Y');
      letters_phase = (letters_phase + 1) % 4;
    } else if (xb) {
      body.push_back('X');
    } else if (zb) {
      body.push_back('Z');
    } else {
      body.push_back('I');
    }
  }
  const int w = ((phase_ - letters_phase) % 4 + 4) % 4;
  static const char *pfx[4] = {"", "+i", "-", "-i"};
  return std::string(pfx[w]) + body;
}

PauliOperator
PauliOperator::embed(std::size_t n_total,
                     const std::vector<std::size_t> &qubit_map) const {
  if (qubit_map.size() != n_)
    throw std::invalid_argument("embed: qubit map size != n_qubits");
  BitVec x(n_total), z(n_total);
  for (std::size_t q = 0; q < n_; ++q) {
    const std::size_t t = qubit_map[q];
    if (t >= n_total)
      throw std::invalid_argument("embed: target index out of range");
    if (x_.get(q))
      x.set(t, true);
    if (z_.get(q))
      z.set(t, true);
  }
  return PauliOperator(n_total, std::move(x), std::move(z), phase_);
}

PauliOperator multiply(const PauliOperator &p, const PauliOperator &q) {
  if (p.n_qubits() != q.n_qubits())
    throw std::invalid_argument("multiply: operand sizes differ");
  // (i^a X^{x1} Z^{z1})(i^b X^{x2} Z^{z2})
  //   = i^{a+b} (-1)^{z1·x2} X^{x1+x2} Z^{z1+z2}
  const int anti = p.z_bits().dot(q.x_bits()) ? 2 : 0;
  return PauliOperator(p.n_qubits(), p.x_bits() ^ q.x_bits(),
                       p.z_bits() ^ q.z_bits(),
                       p.phase_exp() + q.phase_exp() + anti);
}

PauliOperator times_phase(const PauliOperator &p, int k) {
  return PauliOperator(p.n_qubits(), p.x_bits(), p.z_bits(),
                       p.phase_exp() + k);
}

int symplectic_product(const PauliOperator &p, const PauliOperator &q) {
  if (p.n_qubits() != q.n_qubits())
    throw std::invalid_argument("symplectic_product: operand sizes differ");
  const bool a = p.x_bits().dot(q.z_bits());
  const bool b = p.z_bits().dot(q.x_bits());
  return (a != b) ? 1 : 0;
}

bool commutes(const PauliOperator &p, const PauliOperator &q) {
  return symplectic_product(p, q) == 0;
}

bool pauli_letter_less(const PauliOperator &a, const PauliOperator &b) {
  const std::size_t n = a.n_qubits() < b.n_qubits() ? a.n_qubits()
                                                    : b.n_qubits();
  auto letter = [](const PauliOperator &p, std::size_t q) -> int {
    const bool xb = p.x_bits().get(q), zb = p.z_bits().get(q);
    if (!xb && !zb)
      return 0; // I
    if (xb && !zb)
      return 1; // X
    if (xb && zb)
      return 2; // Y
    return 3;   // Z
  };
  for (std::size_t q = 0; q < n; ++q) {
    const int la = letter(a, q), lb = letter(b, q);
    if (la != lb)
      return la < lb;
  }
  return a.n_qubits() < b.n_qubits();
}

} // namespace sldd
