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

#ifndef SLDDLAB_CODES_HPP
#define SLDDLAB_CODES_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "slddlab/generator_set.hpp"
#include "slddlab/pauli.hpp"

namespace sldd {

using BigInt = boost::multiprecision::cpp_int;

/// Conjugate pair of anticommuting Hermitian Paulis (a logical or gauge
/// qubit's X/Z generators).
struct OperatorPair {
  PauliOperator x;
  PauliOperator z;
};

/// An [[n,k,r,d]] subsystem code (r = 0: an [[n,k,d]] stabilizer code).
/// Distance d is metadata only; it is never computed.
struct CodeSpec {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t r = 0;
  std::size_t d = 0;
  std::string name;
  GeneratorSet stabilizers;            // Q = n - k - r generators
  std::vector<OperatorPair> logicals;  // k pairs
  std::vector<OperatorPair> gauges;    // r pairs

  std::size_t q_count() const { return stabilizers.size(); }

  /// Stabilizers followed by the logical pairs (X1, Z1, X2, Z2, ...):
  /// the SLDD generator list.
  std::vector<PauliOperator> stabilizers_and_logicals() const;
  /// Stabilizers followed by gauge pairs: generates the centralizer of
  /// the SLDD set.
  std::vector<PauliOperator> stabilizers_and_gauges() const;
  /// Everything: stabilizers, logicals, gauges (rank must be n + k + r).
  std::vector<PauliOperator> all_generators() const;
};

/// Exhaustive (not fail-fast) list of violated invariants; empty on success.
std::vector<std::string> validate(const CodeSpec &code);

/// Named catalog entries. Throws on unknown name or bad parameter.
///   repetition(n)   n odd >= 3
///   five_qubit
///   steane
///   four_two_two
///   bacon_shor(m)   m >= 2
CodeSpec catalog(const std::string &name, std::size_t parameter = 0);

/// All catalog entries instantiated with their default/example parameters,
/// in the order the CLI lists them.
std::vector<CodeSpec> catalog_all();

/// Stabilizer generators of the a-qubit cat state:
/// {X^(x)a} ∪ {Z_i Z_{i+1}}. This set is its own DDGS.
GeneratorSet cat_state_stabilizers(std::size_t a);

/// An [[n,k,r,d]] code concatenated R times, with per-level stabilizer
/// sets expressed on the n^R physical qubits. Level 1 is the innermost
/// (physical) level, level R the top.
struct ConcatenatedCode {
  CodeSpec base;
  std::size_t levels = 1;
  std::size_t n_total = 0;
  std::vector<GeneratorSet> per_level_stabilizers; // index q-1 = level q
  std::vector<OperatorPair> top_logicals;          // level-R logical pairs

  std::size_t total_stabilizer_count() const;
};

/// Structural concatenation. R = 1 wraps any valid code; R >= 2 is
/// restricted to k = 1, r = 0 codes (counts for general parameters come
/// from count_parameters).
ConcatenatedCode concatenate(const CodeSpec &code, std::size_t levels);

/// Exact concatenation-count record.
struct ConcatCounts {
  BigInt n_R;        // n^R
  BigInt q_R;        // n^R - (k+r)^R
  BigInt l_R;        // k^R
  BigInt g_R;        // (k+r)^R - k^R
  BigInt omega_size; // n^R - (k+r)^R + 2 k^R
};

ConcatCounts count_parameters(std::size_t n, std::size_t k, std::size_t r,
                              std::size_t levels);

/// Code definition text format:
///   [[n,k,r,d]] name
///   S: / LX: / LZ: / GX: / GZ: sections, one Pauli string per line.
/// The parser rejects files whose validate() report is nonempty, embedding
/// the report in the thrown message.
std::string format_code_file(const CodeSpec &code);
CodeSpec parse_code_file(std::istream &in);
CodeSpec parse_code_file(const std::string &text);

} // namespace sldd

#endif
