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

#include "slddlab/sequences.hpp"

#include "slddlab/errors.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "json.hpp"

namespace sldd {

namespace {

constexpr std::size_t kIntervalCap = std::size_t{1} << 20;

// Dense working form: every interval carries a pulse, identity included.
struct WorkInterval {
  double fraction;
  PauliOperator pulse;
};
using WorkSeq = std::vector<WorkInterval>;

/// Substitute `inner` (a closed block) into every interval of `pattern`:
/// the copy is scaled by the interval's fraction and the interval's pulse
/// fires on top of the copy's own closing pulse.
WorkSeq substitute(const WorkSeq &pattern, const WorkSeq &inner) {
  WorkSeq out;
  out.reserve(pattern.size() * inner.size());
  for (const auto &slot : pattern) {
    for (const auto &iv : inner)
      out.push_back({slot.fraction * iv.fraction, iv.pulse});
    out.back().pulse = multiply(slot.pulse, out.back().pulse);
  }
  return out;
}

/// Echo of `gen` wrapped around `block`: two half-weight copies, each
/// closed by an extra `gen` pulse.
WorkSeq universal_wrap(const WorkSeq &block, const PauliOperator &gen) {
  WorkSeq half = block;
  for (auto &iv : half)
    iv.fraction *= 0.5;
  half.back().pulse = multiply(gen, half.back().pulse);
  WorkSeq out = half;
  out.insert(out.end(), half.begin(), half.end());
  return out;
}

/// One nested-UDD layer of order N for `gen` around `block`.
WorkSeq udd_wrap(const WorkSeq &block, const PauliOperator &gen,
                 std::size_t order) {
  const std::size_t n_sub = order + 1;
  std::vector<double> delta(n_sub);
  double prev = 0.0;
  for (std::size_t i = 1; i <= order; ++i) {
    const double s = std::sin(static_cast<double>(i) * std::numbers::pi /
                              (2.0 * static_cast<double>(order) + 2.0));
    const double t = s * s;
    delta[i - 1] = t - prev;
    prev = t;
  }
  delta[n_sub - 1] = 1.0 - prev; // residual closes the layer exactly

  WorkSeq out;
  out.reserve(block.size() * n_sub);
  for (std::size_t i = 0; i < n_sub; ++i) {
    for (const auto &iv : block)
      out.push_back({delta[i] * iv.fraction, iv.pulse});
    const bool pulse_here =
        (i + 1 <= order) || (order % 2 == 1 && i + 1 == n_sub);
    if (pulse_here)
      out.back().pulse = multiply(gen, out.back().pulse);
  }
  return out;
}

PulseSequence finalize(WorkSeq work, const DdgsResult &omega,
                       SequenceFamily family, std::size_t order) {
  PulseSequence seq;
  seq.n_qubits = omega.n_qubits();
  seq.family = family;
  seq.order = order;
  seq.generator_order = omega.omega.generators();
  seq.intervals.reserve(work.size());
  for (auto &iv : work) {
    PulseInterval out;
    out.fraction = iv.fraction;
    if (!iv.pulse.is_identity())
      out.pulse_after = std::move(iv.pulse);
    seq.intervals.push_back(std::move(out));
  }
  return seq;
}

void check_interval_budget(const DdgsResult &omega, SequenceFamily family,
                           std::size_t order) {
  const CostModel model{family, order};
  const BigInt count = sequence_cost(omega.size(), model);
  if (count > kIntervalCap)
    throw resource_error(
        "sequence would need " + count.str() +
        " intervals; cap is " + std::to_string(kIntervalCap));
}

} // namespace

double PulseSequence::fraction_sum() const {
  // Kahan summation; sequences can run to millions of intervals.
  double sum = 0.0, carry = 0.0;
  for (const auto &iv : intervals) {
    const double y = iv.fraction - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return sum;
}

PauliOperator PulseSequence::net_pulse_product() const {
  PauliOperator prod(n_qubits);
  for (const auto &iv : intervals)
    if (iv.pulse_after)
      prod = multiply(*iv.pulse_after, prod);
  return prod;
}

PulseSequence identity_sequence(std::size_t n_qubits) {
  PulseSequence seq;
  seq.n_qubits = n_qubits;
  seq.family = SequenceFamily::custom;
  seq.order = 0;
  seq.intervals.push_back({1.0, std::nullopt});
  return seq;
}

PulseSequence cdd_sequence(const DdgsResult &omega, std::size_t order) {
  if (order < 1)
    throw std::invalid_argument("cdd_sequence: order must be >= 1");
  if (omega.size() == 0) {
    auto seq = identity_sequence(omega.n_qubits());
    seq.family = SequenceFamily::CDD;
    seq.order = order;
    return seq;
  }
  check_interval_budget(omega, SequenceFamily::CDD, order);

  WorkSeq level1{{1.0, PauliOperator(omega.n_qubits())}};
  for (const auto &gen : omega.omega.generators())
    level1 = universal_wrap(level1, gen);

  WorkSeq seq{{1.0, PauliOperator(omega.n_qubits())}};
  for (std::size_t t = 0; t < order; ++t)
    seq = substitute(level1, seq);
  return finalize(std::move(seq), omega, SequenceFamily::CDD, order);
}

PulseSequence nudd_sequence(const DdgsResult &omega, std::size_t order) {
  if (order < 1)
    throw std::invalid_argument("nudd_sequence: order must be >= 1");
  if (omega.size() == 0) {
    auto seq = identity_sequence(omega.n_qubits());
    seq.family = SequenceFamily::NUDD;
    seq.order = order;
    return seq;
  }
  check_interval_budget(omega, SequenceFamily::NUDD, order);

  WorkSeq seq{{1.0, PauliOperator(omega.n_qubits())}};
  for (const auto &gen : omega.omega.generators())
    seq = udd_wrap(seq, gen, order);
  return finalize(std::move(seq), omega, SequenceFamily::NUDD, order);
}

std::vector<PauliOperator> toggling_pulse_products(const PulseSequence &seq) {
  std::vector<PauliOperator> frames;
  frames.reserve(seq.interval_count());
  PauliOperator g(seq.n_qubits);
  for (const auto &iv : seq.intervals) {
    frames.push_back(g);
    if (iv.pulse_after)
      g = multiply(*iv.pulse_after, g);
  }
  return frames;
}

bool first_order_cancels(const PulseSequence &seq, const PauliOperator &error,
                         double tol) {
  double sum = 0.0, carry = 0.0;
  PauliOperator g(seq.n_qubits);
  for (const auto &iv : seq.intervals) {
    const double sign = symplectic_product(g, error) ? -1.0 : 1.0;
    const double y = sign * iv.fraction - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
    if (iv.pulse_after)
      g = multiply(*iv.pulse_after, g);
  }
  return std::abs(sum) <= tol;
}

bool first_order_filter_check(const PulseSequence &seq,
                              const DdgsResult &omega,
                              const GeneratorSet &errors, double tol) {
  for (const auto &e : errors.generators()) {
    bool targeted = false;
    for (const auto &g : omega.omega.generators())
      if (!commutes(e, g)) {
        targeted = true;
        break;
      }
    if (!targeted)
      continue;
    if (!first_order_cancels(seq, e, tol))
      return false;
  }
  return true;
}

std::string sequence_to_json(const PulseSequence &seq) {
  nlohmann::json j;
  j["family"] = to_string(seq.family);
  j["order"] = seq.order;
  j["n_qubits"] = seq.n_qubits;
  j["generator_order"] = nlohmann::json::array();
  for (const auto &g : seq.generator_order)
    j["generator_order"].push_back(g.str());
  j["intervals"] = nlohmann::json::array();
  char buf[32];
  for (const auto &iv : seq.intervals) {
    nlohmann::json e;
    std::snprintf(buf, sizeof buf, "%.17g", iv.fraction);
    e["fraction"] = buf;
    if (iv.pulse_after)
      e["pulse"] = iv.pulse_after->str();
    else
      e["pulse"] = nullptr;
    j["intervals"].push_back(std::move(e));
  }
  return j.dump(2);
}

PulseSequence sequence_from_json(const std::string &text) {
  const auto j = nlohmann::json::parse(text);
  PulseSequence seq;
  seq.family = family_from_string(j.at("family").get<std::string>());
  seq.order = j.at("order").get<std::size_t>();
  seq.n_qubits = j.at("n_qubits").get<std::size_t>();
  for (const auto &g : j.at("generator_order"))
    seq.generator_order.push_back(PauliOperator::parse(g.get<std::string>()));
  for (const auto &e : j.at("intervals")) {
    PulseInterval iv;
    iv.fraction = std::stod(e.at("fraction").get<std::string>());
    if (!e.at("pulse").is_null())
      iv.pulse_after = PauliOperator::parse(e.at("pulse").get<std::string>());
    seq.intervals.push_back(std::move(iv));
  }
  return seq;
}

} // namespace sldd
