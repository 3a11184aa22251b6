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

#ifndef SLDDLAB_DDGS_HPP
#define SLDDLAB_DDGS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "slddlab/codes.hpp"
#include "slddlab/generator_set.hpp"

namespace sldd {

enum class DdgsKind { full_pauli, sldd, concatenated_sldd, union_set, custom };

const char *to_string(DdgsKind k);

/// A DD generator set: the gMOOS the pulse constructions draw from.
struct DdgsResult {
  GeneratorSet omega;
  DdgsKind kind = DdgsKind::custom;
  std::string source;
  std::size_t size() const { return omega.size(); }
  std::size_t n_qubits() const { return omega.n_qubits(); }
};

enum class SequenceFamily { CDD, NUDD, custom };

const char *to_string(SequenceFamily f);
SequenceFamily family_from_string(const std::string &s);

/// Per-generator interval factor f(N): 2^N for CDD, N+1 for NUDD.
/// The `custom` family labels hand-built schedules and has no cost formula.
struct CostModel {
  SequenceFamily family = SequenceFamily::CDD;
  std::size_t order = 1;

  BigInt f_of_n() const;
};

/// The bare uncoded optimum: {X^(i), Z^(i)} for every qubit, size 2n.
DdgsResult full_pauli_ddgs(std::size_t n);

/// Stabilizers plus logical generators, size n + k - r. The centralizer of
/// the result is the span of stabilizers and gauges.
DdgsResult sldd_ddgs(const CodeSpec &code);

/// Union of all per-level stabilizer sets plus the top-level logicals,
/// size n^R - (k+r)^R + 2 k^R.
DdgsResult concatenated_sldd_ddgs(const ConcatenatedCode &cc);

/// Embed each part into a joint register of n_total qubits through its
/// qubit map (0-based target indices) and concatenate the generators.
/// Supports must be pairwise disjoint.
DdgsResult
union_compose(std::size_t n_total,
              const std::vector<std::pair<DdgsResult,
                                          std::vector<std::size_t>>> &parts);

/// Theorem-1 decoupling test: the centralizer of omega meets the span of
/// the error basis only in the identity.
bool decouples(const DdgsResult &omega, const GeneratorSet &error_basis);

/// Canonical error basis for a DDGS: extend the centralizer to a full
/// symplectic basis of P_n and keep the complement. Its span meets the
/// centralizer trivially and together they span all 2n dimensions.
GeneratorSet coset_error_basis(const DdgsResult &omega);

/// Result of the exhaustive minimal-DDGS search.
struct BruteForceResult {
  std::size_t minimal_size = 0;
  std::vector<PauliOperator> witness; // lexicographically least at that size
  bool b_hat_self_decouples = false;  // does omega = error basis itself pass?
};

/// Exhaustive search over candidate generator subsets of increasing size
/// for the decoupling condition. Hard-refuses n > 3: this is the
/// optimality oracle, not a production path. Deterministic regardless of
/// the parallel schedule.
BruteForceResult brute_force_minimal_ddgs(const GeneratorSet &error_basis,
                                          std::size_t n,
                                          std::size_t size_cap,
                                          bool parallel = true);

/// Exact sequence cost f(N)^{omega_size}.
BigInt sequence_cost(std::size_t omega_size, const CostModel &model);

/// Domain plan per the polynomial-budget rule: the generator budget is the
/// largest W with f(N)^W <= k_total^p, and R is the deepest concatenation
/// level whose omega size fits. R = 0 flags an infeasible budget.
struct DomainPlan {
  std::size_t k_total = 0;
  std::size_t base_n = 0, base_k = 0, base_r = 0;
  SequenceFamily family = SequenceFamily::CDD;
  std::size_t order = 1;
  std::size_t budget_exponent = 1;
  BigInt generator_budget;      // W
  std::size_t levels = 0;       // R (0 = infeasible)
  BigInt domain_size_logical;   // k_D(R) = k^R
  BigInt domain_physical_qubits; // n^R
  BigInt domain_count;          // d(R) = ceil(k_total / k_D)
  BigInt omega_size_per_domain;
  BigInt cost_per_domain;
  bool within_budget = false;
};

DomainPlan plan_domains(std::size_t k_total, std::size_t n, std::size_t k,
                        std::size_t r, const CostModel &model,
                        std::size_t budget_exponent);

} // namespace sldd

#endif
