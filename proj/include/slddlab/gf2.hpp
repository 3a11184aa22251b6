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

#ifndef SLDDLAB_GF2_HPP
#define SLDDLAB_GF2_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "slddlab/bitvec.hpp"

namespace sldd::gf2 {

/// Row echelon basis maintained incrementally. Insertion keeps rows reduced
/// against each other, so membership tests are a single sweep.
class EchelonBasis {
public:
  explicit EchelonBasis(std::size_t n_cols) : n_cols_(n_cols) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return n_cols_; }

  /// Reduce v against the basis; returns the remainder (zero iff v in span).
  BitVec reduce(BitVec v) const {
    for (const auto &row : rows_) {
      std::size_t p = row.lowest_set();
      if (v.get(p))
        v ^= row;
    }
    return v;
  }

  bool contains(const BitVec &v) const { return !reduce(v).any(); }

  /// Insert v if independent of the current span. Returns true if inserted.
  bool insert(const BitVec &v) {
    BitVec r = reduce(v);
    if (!r.any())
      return false;
    rows_.push_back(r);
    // keep rows sorted by pivot so reduce() stays a single pass
    for (std::size_t i = rows_.size(); i-- > 1;) {
      if (rows_[i].lowest_set() < rows_[i - 1].lowest_set())
        std::swap(rows_[i], rows_[i - 1]);
      else
        break;
    }
    return true;
  }

  const std::vector<BitVec> &rows() const { return rows_; }

private:
  std::size_t n_cols_;
  std::vector<BitVec> rows_;
};

inline std::size_t rank(const std::vector<BitVec> &rows, std::size_t n_cols) {
  EchelonBasis b(n_cols);
  for (const auto &r : rows)
    b.insert(r);
  return b.rank();
}

/// Indices of a maximal independent subset, greedy in input order.
inline std::vector<std::size_t>
independent_subset(const std::vector<BitVec> &rows, std::size_t n_cols) {
  EchelonBasis b(n_cols);
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (b.insert(rows[i]))
      kept.push_back(i);
  return kept;
}

/// Basis of {v : A v = 0} where the rows of A are `rows`.
inline std::vector<BitVec> nullspace(const std::vector<BitVec> &rows,
                                     std::size_t n_cols) {
  // Reduced row echelon form.
  std::vector<BitVec> m = rows;
  std::vector<std::size_t> pivot_cols;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < n_cols && pr < m.size(); ++c) {
    std::size_t sel = pr;
    while (sel < m.size() && !m[sel].get(c))
      ++sel;
    if (sel == m.size())
      continue;
    std::swap(m[pr], m[sel]);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != pr && m[i].get(c))
        m[i] ^= m[pr];
    pivot_cols.push_back(c);
    ++pr;
  }
  std::vector<bool> is_pivot(n_cols, false);
  for (auto c : pivot_cols)
    is_pivot[c] = true;

  std::vector<BitVec> basis;
  for (std::size_t fc = 0; fc < n_cols; ++fc) {
    if (is_pivot[fc])
      continue;
    BitVec v(n_cols);
    v.set(fc, true);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i)
      if (m[i].get(fc))
        v.set(pivot_cols[i], true);
    basis.push_back(v);
  }
  return basis;
}

/// rank(a) + rank(b) == rank(a ∪ b), i.e. the spans meet only in zero.
inline bool spans_intersect_trivially(const std::vector<BitVec> &a,
                                      const std::vector<BitVec> &b,
                                      std::size_t n_cols) {
  EchelonBasis ba(n_cols);
  for (const auto &r : a)
    ba.insert(r);
  EchelonBasis both(n_cols);
  for (const auto &r : a)
    both.insert(r);
  std::size_t rank_b = 0;
  EchelonBasis bb(n_cols);
  for (const auto &r : b)
    if (bb.insert(r))
      ++rank_b;
  for (const auto &r : b)
    both.insert(r);
  return ba.rank() + rank_b == both.rank();
}

inline bool spans_equal(const std::vector<BitVec> &a,
                        const std::vector<BitVec> &b, std::size_t n_cols) {
  EchelonBasis ba(n_cols);
  for (const auto &r : a)
    ba.insert(r);
  for (const auto &r : b)
    if (!ba.contains(r))
      return false;
  EchelonBasis bb(n_cols);
  for (const auto &r : b)
    bb.insert(r);
  return ba.rank() == bb.rank();
}

} // namespace sldd::gf2

#endif
