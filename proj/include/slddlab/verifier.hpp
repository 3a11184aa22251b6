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

#ifndef SLDDLAB_VERIFIER_HPP
#define SLDDLAB_VERIFIER_HPP

#include <optional>
#include <string>
#include <vector>

#include "slddlab/codes.hpp"
#include "slddlab/ddgs.hpp"
#include "slddlab/dense.hpp"
#include "slddlab/noise.hpp"
#include "slddlab/sequences.hpp"

namespace sldd {

/// Every hot kernel ships in two functionally identical forms: a serial
/// reference and an OpenMP version. Results are deterministic for a fixed
/// policy regardless of thread count (fixed chunking, ordered reduction).
enum class ExecPolicy { serial, parallel };

/// Piecewise-constant evolution with ideal pulses:
/// U = prod_j [P_j * exp(-i H tau_j)], tau_j = fraction_j * T.
Matrix evolve(const PulseSequence &seq, const NoiseModel &model, double t);

/// Principal-branch effective Hamiltonian: U = exp(i t H_eff) with
/// eigenphases in (-pi, pi). Throws near the branch cut.
Matrix effective_hamiltonian(const Matrix &u, double t);

/// Group twirl over all 2^|omega| subset products of the generators
/// (acting on the system factor): H_0 commutes with every omega element,
/// H_r = H_eff - H_0. Refuses |omega| > 12.
std::pair<Matrix, Matrix> moos_decompose(const Matrix &h_eff,
                                         const DdgsResult &omega,
                                         std::size_t n_bath,
                                         ExecPolicy policy = ExecPolicy::parallel);

/// Block structure of H over the syndrome subspaces of `code`:
/// largest off-block norm and largest in-block deviation from
/// (projector ⊗ bath operator) form.
struct SyndromeCheck {
  double max_offblock = 0.0;
  double max_inblock_deviation = 0.0;
};
SyndromeCheck syndrome_preservation(const Matrix &h, const CodeSpec &code,
                                    std::size_t n_bath);

/// Least-squares slope of log(value) against log(t), excluding points with
/// value below `floor`. Sets usable to the surviving point count.
double fit_loglog_slope(const std::vector<double> &t,
                        const std::vector<double> &value, double floor,
                        std::size_t &usable);

struct DecouplingReport {
  // sequence + model echo
  SequenceFamily family = SequenceFamily::custom;
  std::size_t order = 0;
  std::size_t target_order = 0;
  std::size_t interval_count = 0;
  std::vector<std::string> omega_strings;
  std::string code_name; // empty when no code was supplied
  std::size_t n_sys = 0, n_bath = 0, locality = 0;
  double j_norm = 0.0;
  std::uint64_t seed = 0;

  // per-T data
  std::vector<double> t_grid;
  std::vector<double> residual_norms;    // T * ||H_r(T)||
  std::vector<double> baseline_norms;    // same, pulse-free evolution
  std::vector<double> syndrome_leakage;  // T * max off-block norm of H_eff
  std::vector<double> h0_leakage;        // raw off-block norm of H_0

  // fits
  double fitted_slope = 0.0;
  double baseline_slope = 0.0;
  double leakage_slope = 0.0; // meaningful only with a code
  double floor = 0.0;
  std::size_t usable_points = 0;
  bool few_points_warning = false;

  bool slope_pass = false;   // fitted_slope >= target_order + 1 - 0.35
  bool leakage_pass = true;  // h0 leakage <= 1e-10 at every T (if code)
};

/// The headline experiment: evolve over the grid, extract and decompose
/// the effective Hamiltonian at every T, fit the log-log scaling of the
/// residual, and (with a code) track syndrome-block leakage.
/// Grid points are independent jobs; results are assembled in T order.
DecouplingReport decoupling_order_fit(
    const PulseSequence &seq, const NoiseModel &model, const DdgsResult &omega,
    const std::vector<double> &t_grid,
    const std::optional<CodeSpec> &code = std::nullopt,
    std::size_t target_order = 0 /* 0: use seq.order */,
    ExecPolicy policy = ExecPolicy::parallel);

std::string report_to_json(const DecouplingReport &report);
std::string report_to_csv(const DecouplingReport &report);

std::vector<double> log_spaced(double t_min, double t_max, std::size_t points);

} // namespace sldd

#endif
