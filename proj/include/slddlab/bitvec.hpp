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

#ifndef SLDDLAB_BITVEC_HPP
#define SLDDLAB_BITVEC_HPP

#include <bit>
#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace sldd {

/// Fixed-length GF(2) vector packed into 64-bit words.
///
/// All symplectic linear algebra in the project runs on these: a Pauli's
/// X/Z parts, rows of stabilizer check matrices, nullspace bases. XOR is
/// addition, AND-popcount-parity is the dot product.
class BitVec {
public:
  BitVec() = default;

  explicit BitVec(std::size_t n_bits)
      : n_bits_(n_bits), words_((n_bits + 63) / 64, 0) {}

  std::size_t size() const { return n_bits_; }

  bool get(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(std::size_t i, bool v) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }

  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVec &operator^=(const BitVec &o) {
    if (o.n_bits_ != n_bits_)
      throw std::invalid_argument("BitVec xor: length mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w)
      words_[w] ^= o.words_[w];
    return *this;
  }

  friend BitVec operator^(BitVec a, const BitVec &b) {
    a ^= b;
    return a;
  }

  /// Parity of the AND of two vectors: the GF(2) inner product.
  bool dot(const BitVec &o) const {
    if (o.n_bits_ != n_bits_)
      throw std::invalid_argument("BitVec dot: length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w)
      acc ^= words_[w] & o.words_[w];
    return std::popcount(acc) & 1;
  }

  bool any() const {
    for (auto w : words_)
      if (w)
        return true;
    return false;
  }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (auto w : words_)
      c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// Index of the lowest set bit, or size() if none.
  std::size_t lowest_set() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w])
        return (w << 6) + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return n_bits_;
  }

  friend bool operator==(const BitVec &a, const BitVec &b) {
    return a.n_bits_ == b.n_bits_ && a.words_ == b.words_;
  }

  /// Concatenation, used to form (x|z) symplectic rows.
  static BitVec concat(const BitVec &a, const BitVec &b) {
    BitVec r(a.n_bits_ + b.n_bits_);
    for (std::size_t i = 0; i < a.n_bits_; ++i)
      if (a.get(i))
        r.set(i, true);
    for (std::size_t i = 0; i < b.n_bits_; ++i)
      if (b.get(i))
        r.set(a.n_bits_ + i, true);
    return r;
  }

  BitVec slice(std::size_t begin, std::size_t len) const {
    BitVec r(len);
    for (std::size_t i = 0; i < len; ++i)
      if (get(begin + i))
        r.set(i, true);
    return r;
  }

private:
  std::size_t n_bits_ = 0;
  std::vector<std::uint64_t> words_;
};

} // namespace sldd

#endif
