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

#ifndef SLDDLAB_SEQUENCES_HPP
#define SLDDLAB_SEQUENCES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "slddlab/ddgs.hpp"
#include "slddlab/generator_set.hpp"

namespace sldd {

/// One free-evolution interval followed (optionally) by an ideal
/// zero-width pulse. Fractions are of the total sequence time T.
struct PulseInterval {
  double fraction = 0.0;
  std::optional<PauliOperator> pulse_after;
};

/// An executable DD schedule. Fractions sum to 1 exactly up to the
/// residual-closure policy (the last interval of each layer absorbs the
/// rounding remainder); the ordered pulse product is the identity up to
/// a global phase, so end-of-sequence evolution compares directly against
/// free evolution.
struct PulseSequence {
  std::size_t n_qubits = 0;
  SequenceFamily family = SequenceFamily::CDD;
  std::size_t order = 0; // 0 marks the trivial identity sequence
  std::vector<PauliOperator> generator_order;
  std::vector<PulseInterval> intervals;

  std::size_t interval_count() const { return intervals.size(); }
  double fraction_sum() const;
  /// Ordered product of all pulses (identity up to phase for synthesized
  /// sequences).
  PauliOperator net_pulse_product() const;
};

/// The do-nothing sequence: one unit interval, no pulses.
PulseSequence identity_sequence(std::size_t n_qubits);

/// Concatenated DD. Level 1 is the universal echo block over the
/// generators (2^m equal intervals); level N substitutes level N-1 blocks
/// into every free interval. Interval count (2^N)^m, all fractions equal.
PulseSequence cdd_sequence(const DdgsResult &omega, std::size_t order);

/// Nested-UDD. Working outward through generator_order, layer j splits
/// every enclosing interval into N+1 sub-intervals with the UDD fractions
/// sin^2(i pi / (2N+2)) - sin^2((i-1) pi / (2N+2)), pulsing its generator
/// at the internal boundaries, plus a closing pulse when N is odd so each
/// layer's pulse product closes to the identity. Interval count (N+1)^m.
PulseSequence nudd_sequence(const DdgsResult &omega, std::size_t order);

/// Toggling-frame prefix products g_j: interval j of the sequence sees the
/// noise conjugated by g_j. First entry is the identity.
std::vector<PauliOperator> toggling_pulse_products(const PulseSequence &seq);

/// Exact first-order cancellation test for one error operator:
/// sum_j fraction_j * sign_j(E) with sign_j = +-1 as g_j E g_j = +-E.
/// |sum| <= tol counts as cancelled.
bool first_order_cancels(const PulseSequence &seq, const PauliOperator &error,
                         double tol = 1e-12);

/// First-order filter over every generator of `errors` that anticommutes
/// with at least one element of omega (operators commuting with all of
/// omega are exempt: they are not meant to cancel).
bool first_order_filter_check(const PulseSequence &seq,
                              const DdgsResult &omega,
                              const GeneratorSet &errors, double tol = 1e-12);

/// JSON round-trip per the sequence interchange format.
std::string sequence_to_json(const PulseSequence &seq);
PulseSequence sequence_from_json(const std::string &text);

} // namespace sldd

#endif
