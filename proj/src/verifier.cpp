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

#include "slddlab/verifier.hpp"

#include "slddlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "json.hpp"

namespace sldd {

namespace {

struct EvolveContext {
  HermitianEigen eig;
  std::map<std::string, PauliAction> pulse_actions;
  std::size_t bath_dim = 1;
};

EvolveContext make_context(const PulseSequence &seq, const NoiseModel &model,
                           const Matrix &h) {
  EvolveContext ctx;
  ctx.eig = hermitian_eigen(h);
  ctx.bath_dim = model.bath_dim();
  for (const auto &iv : seq.intervals)
    if (iv.pulse_after) {
      const auto key = iv.pulse_after->str();
      if (!ctx.pulse_actions.count(key))
        ctx.pulse_actions.emplace(key,
                                  pauli_action(*iv.pulse_after, ctx.bath_dim));
    }
  return ctx;
}

Matrix evolve_with_context(const PulseSequence &seq, const EvolveContext &ctx,
                           double t) {
  const Eigen::Index dim = ctx.eig.vectors.rows();
  // one propagator per distinct interval fraction
  std::map<double, Matrix> props;
  for (const auto &iv : seq.intervals)
    if (!props.count(iv.fraction))
      props.emplace(iv.fraction,
                    exp_i_from_eigen(ctx.eig, -iv.fraction * t));
  Matrix u = Matrix::Identity(dim, dim);
  for (const auto &iv : seq.intervals) {
    u = props.at(iv.fraction) * u;
    if (iv.pulse_after)
      apply_action_left(ctx.pulse_actions.at(iv.pulse_after->str()), u);
  }
  return u;
}

/// Subset product of omega's generators selected by `mask`.
PauliOperator subset_product(const GeneratorSet &omega, std::uint64_t mask) {
  PauliOperator prod(omega.n_qubits());
  for (std::size_t i = 0; i < omega.size(); ++i)
    if ((mask >> i) & 1)
      prod = multiply(omega[i], prod);
  return prod;
}

Matrix kron_identity(const Matrix &p, std::size_t bath_dim) {
  const auto bd = static_cast<Eigen::Index>(bath_dim);
  Matrix out = Matrix::Zero(p.rows() * bd, p.cols() * bd);
  for (Eigen::Index i = 0; i < p.rows(); ++i)
    for (Eigen::Index j = 0; j < p.cols(); ++j)
      if (p(i, j) != Complex(0, 0))
        out.block(i * bd, j * bd, bd, bd) =
            p(i, j) * Matrix::Identity(bd, bd);
  return out;
}

Matrix partial_trace_system(const Matrix &m, std::size_t sys_dim,
                            std::size_t bath_dim) {
  const auto bd = static_cast<Eigen::Index>(bath_dim);
  Matrix out = Matrix::Zero(bd, bd);
  for (std::size_t i = 0; i < sys_dim; ++i)
    out += m.block(static_cast<Eigen::Index>(i) * bd,
                   static_cast<Eigen::Index>(i) * bd, bd, bd);
  return out;
}

} // namespace

Matrix evolve(const PulseSequence &seq, const NoiseModel &model, double t) {
  if (seq.n_qubits != model.n_sys)
    throw std::invalid_argument(
        "evolve: sequence register and noise model system size differ");
  if (!(t > 0))
    throw std::invalid_argument("evolve: total time must be positive");
  const Matrix h = model.assemble();
  const auto ctx = make_context(seq, model, h);
  return evolve_with_context(seq, ctx, t);
}

Matrix effective_hamiltonian(const Matrix &u, double t) {
  if (!(t > 0))
    throw std::invalid_argument("effective_hamiltonian: t must be positive");
  return principal_log_generator(u) / t;
}

std::pair<Matrix, Matrix> moos_decompose(const Matrix &h_eff,
                                         const DdgsResult &omega,
                                         std::size_t n_bath,
                                         ExecPolicy policy) {
  const std::size_t m = omega.size();
  if (m > 12)
    throw resource_error(
        "moos_decompose: twirl over 2^" + std::to_string(m) +
        " subset products refused (cap |omega| = 12)");
  const std::size_t sys_dim = std::size_t{1} << omega.n_qubits();
  const std::size_t bath_dim = std::size_t{1} << n_bath;
  if (h_eff.rows() != static_cast<Eigen::Index>(sys_dim * bath_dim))
    throw std::invalid_argument("moos_decompose: dimension mismatch");

  const std::uint64_t total = std::uint64_t{1} << m;
  Matrix sum = Matrix::Zero(h_eff.rows(), h_eff.cols());

  if (policy == ExecPolicy::serial || total < 4) {
    // reference path: plain mask-ordered accumulation
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      const auto action =
          pauli_action(subset_product(omega.omega, mask), bath_dim);
      sum += conjugate_by_action(action, h_eff);
    }
  } else {
    // fixed chunk layout independent of the thread count, partial sums
    // reduced in chunk order: bitwise deterministic under any schedule
    const std::uint64_t n_chunks = std::min<std::uint64_t>(64, total);
    const std::uint64_t chunk_len = (total + n_chunks - 1) / n_chunks;
    std::vector<Matrix> partial(
        n_chunks, Matrix::Zero(h_eff.rows(), h_eff.cols()));
#pragma omp parallel for schedule(dynamic)
    for (std::uint64_t c = 0; c < n_chunks; ++c) {
      const std::uint64_t begin = c * chunk_len;
      const std::uint64_t end = std::min(begin + chunk_len, total);
      for (std::uint64_t mask = begin; mask < end; ++mask) {
        const auto action =
            pauli_action(subset_product(omega.omega, mask), bath_dim);
        partial[c] += conjugate_by_action(action, h_eff);
      }
    }
    for (const auto &p : partial)
      sum += p;
  }

  Matrix h0 = sum / static_cast<double>(total);
  Matrix hr = h_eff - h0;
  return {std::move(h0), std::move(hr)};
}

SyndromeCheck syndrome_preservation(const Matrix &h, const CodeSpec &code,
                                    std::size_t n_bath) {
  const std::size_t sys_dim = std::size_t{1} << code.n;
  const std::size_t bath_dim = std::size_t{1} << n_bath;
  if (h.rows() != static_cast<Eigen::Index>(sys_dim * bath_dim))
    throw std::invalid_argument(
        "syndrome_preservation: H dimension does not match code ⊗ bath");
  const std::size_t q = code.q_count();
  if (q > 16)
    throw resource_error("syndrome_preservation: 2^Q blocks refused");

  // syndrome projectors on the system factor: bit mu of s set = eigenvalue -1
  const auto sd = static_cast<Eigen::Index>(sys_dim);
  std::vector<Matrix> block_proj;
  block_proj.reserve(std::size_t{1} << q);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << q); ++s) {
    Matrix p = Matrix::Identity(sd, sd);
    for (std::size_t mu = 0; mu < q; ++mu) {
      const double sign = ((s >> mu) & 1) ? -1.0 : 1.0;
      p = 0.5 * (p + sign * (to_matrix(code.stabilizers[mu]) * p));
    }
    block_proj.push_back(kron_identity(p, bath_dim));
  }

  SyndromeCheck out;
  const auto blocks = block_proj.size();
  const double block_rank =
      static_cast<double>(std::size_t{1} << (code.k + code.r));
  for (std::size_t s = 0; s < blocks; ++s) {
    const Matrix h_into_s = h * block_proj[s];
    for (std::size_t s2 = 0; s2 < blocks; ++s2) {
      if (s2 == s)
        continue;
      out.max_offblock =
          std::max(out.max_offblock, sup_norm(block_proj[s2] * h_into_s));
    }
    const Matrix in_block = block_proj[s] * h_into_s;
    const Matrix bath_part =
        partial_trace_system(in_block, sys_dim, bath_dim) / block_rank;
    // best (projector ⊗ bath) approximant: P_s ⊗ B = (P_s ⊗ I)(I ⊗ B)
    Matrix i_kron_b = Matrix::Zero(h.rows(), h.cols());
    const auto bd = static_cast<Eigen::Index>(bath_dim);
    for (std::size_t i = 0; i < sys_dim; ++i)
      i_kron_b.block(static_cast<Eigen::Index>(i) * bd,
                     static_cast<Eigen::Index>(i) * bd, bd, bd) = bath_part;
    const Matrix approx = block_proj[s] * i_kron_b;
    out.max_inblock_deviation =
        std::max(out.max_inblock_deviation, sup_norm(in_block - approx));
  }
  return out;
}

double fit_loglog_slope(const std::vector<double> &t,
                        const std::vector<double> &value, double floor,
                        std::size_t &usable) {
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (value[i] >= floor && value[i] > 0) {
      xs.push_back(std::log(t[i]));
      ys.push_back(std::log(value[i]));
    }
  }
  usable = xs.size();
  if (usable < 3)
    throw std::runtime_error(
        "fit_loglog_slope: fewer than 3 points above the saturation floor");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(xs.size());
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  return sxy / sxx;
}

DecouplingReport decoupling_order_fit(const PulseSequence &seq,
                                      const NoiseModel &model,
                                      const DdgsResult &omega,
                                      const std::vector<double> &t_grid,
                                      const std::optional<CodeSpec> &code,
                                      std::size_t target_order,
                                      ExecPolicy policy) {
  if (t_grid.size() < 4)
    throw std::invalid_argument("decoupling_order_fit: need >= 4 grid points");
  for (std::size_t i = 1; i < t_grid.size(); ++i)
    if (!(t_grid[i] > t_grid[i - 1]))
      throw std::invalid_argument(
          "decoupling_order_fit: T grid must be strictly increasing");
  if (std::log10(t_grid.back() / t_grid.front()) < 1.5 - 1e-9)
    throw std::invalid_argument(
        "decoupling_order_fit: T grid must span at least 1.5 decades");
  if (code && code->n != model.n_sys)
    throw std::invalid_argument(
        "decoupling_order_fit: code size does not match the system");

  DecouplingReport rep;
  rep.family = seq.family;
  rep.order = seq.order;
  rep.target_order = target_order == 0 ? seq.order : target_order;
  rep.interval_count = seq.interval_count();
  for (const auto &g : omega.omega.generators())
    rep.omega_strings.push_back(g.str());
  if (code)
    rep.code_name = code->name;
  rep.n_sys = model.n_sys;
  rep.n_bath = model.n_bath;
  rep.locality = model.locality;
  rep.j_norm = model.norm_target;
  rep.seed = model.seed;
  rep.t_grid = t_grid;

  const Matrix h = model.assemble();
  const auto ctx = make_context(seq, model, h);
  const auto id_seq = identity_sequence(model.n_sys);
  const auto id_ctx = make_context(id_seq, model, h);

  const std::size_t pts = t_grid.size();
  rep.residual_norms.assign(pts, 0.0);
  rep.baseline_norms.assign(pts, 0.0);
  if (code) {
    rep.syndrome_leakage.assign(pts, 0.0);
    rep.h0_leakage.assign(pts, 0.0);
  }

  // Each grid point is an independent job; slots keep assembly in T order
  // regardless of the schedule.
  const bool par = policy == ExecPolicy::parallel;
#pragma omp parallel for schedule(dynamic) if (par)
  for (std::size_t i = 0; i < pts; ++i) {
    const double t = t_grid[i];
    const Matrix u = evolve_with_context(seq, ctx, t);
    const Matrix h_eff = effective_hamiltonian(u, t);
    auto [h0, hr] = moos_decompose(h_eff, omega, model.n_bath,
                                   ExecPolicy::serial);
    rep.residual_norms[i] = t * sup_norm_hermitian(hr);

    const Matrix u0 = evolve_with_context(id_seq, id_ctx, t);
    const Matrix h_eff0 = effective_hamiltonian(u0, t);
    auto [b0, br] = moos_decompose(h_eff0, omega, model.n_bath,
                                   ExecPolicy::serial);
    rep.baseline_norms[i] = t * sup_norm_hermitian(br);

    if (code) {
      const auto leak_eff = syndrome_preservation(h_eff, *code, model.n_bath);
      rep.syndrome_leakage[i] = t * leak_eff.max_offblock;
      const auto leak_h0 = syndrome_preservation(h0, *code, model.n_bath);
      rep.h0_leakage[i] = leak_h0.max_offblock;
    }
  }

  rep.floor = 1e-11 * model.norm_target;
  rep.fitted_slope =
      fit_loglog_slope(rep.t_grid, rep.residual_norms, rep.floor,
                       rep.usable_points);
  rep.few_points_warning = rep.usable_points < 4;
  std::size_t dummy = 0;
  rep.baseline_slope =
      fit_loglog_slope(rep.t_grid, rep.baseline_norms, rep.floor, dummy);
  if (code && !rep.syndrome_leakage.empty()) {
    rep.leakage_slope = fit_loglog_slope(rep.t_grid, rep.syndrome_leakage,
                                         rep.floor, dummy);
    for (const auto v : rep.h0_leakage)
      if (v > 1e-10)
        rep.leakage_pass = false;
  }
  rep.slope_pass = rep.fitted_slope >=
                   static_cast<double>(rep.target_order + 1) - 0.35;
  return rep;
}

std::string report_to_json(const DecouplingReport &rep) {
  nlohmann::json j;
  j["sequence"] = {{"family", to_string(rep.family)},
                   {"order", rep.order},
                   {"interval_count", rep.interval_count}};
  j["target_order"] = rep.target_order;
  j["omega"] = rep.omega_strings;
  if (!rep.code_name.empty())
    j["code"] = rep.code_name;
  j["model"] = {{"n_sys", rep.n_sys},
                {"n_bath", rep.n_bath},
                {"locality", rep.locality},
                {"norm", rep.j_norm},
                {"seed", rep.seed}};
  j["t_grid"] = rep.t_grid;
  j["residual_norms"] = rep.residual_norms;
  j["baseline_norms"] = rep.baseline_norms;
  if (!rep.syndrome_leakage.empty()) {
    j["syndrome_leakage"] = rep.syndrome_leakage;
    j["h0_leakage"] = rep.h0_leakage;
    j["leakage_slope"] = rep.leakage_slope;
  }
  j["fitted_slope"] = rep.fitted_slope;
  j["baseline_slope"] = rep.baseline_slope;
  j["floor"] = rep.floor;
  j["usable_points"] = rep.usable_points;
  j["few_points_warning"] = rep.few_points_warning;
  j["slope_pass"] = rep.slope_pass;
  j["leakage_pass"] = rep.leakage_pass;
  return j.dump(2);
}

std::string report_to_csv(const DecouplingReport &rep) {
  std::string out = "T,residual,baseline,leakage,h0_leakage\n";
  char buf[128];
  for (std::size_t i = 0; i < rep.t_grid.size(); ++i) {
    const double leak =
        rep.syndrome_leakage.empty() ? 0.0 : rep.syndrome_leakage[i];
    const double h0l = rep.h0_leakage.empty() ? 0.0 : rep.h0_leakage[i];
    if (rep.syndrome_leakage.empty())
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,,\n", rep.t_grid[i],
                    rep.residual_norms[i], rep.baseline_norms[i]);
    else
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n",
                    rep.t_grid[i], rep.residual_norms[i],
                    rep.baseline_norms[i], leak, h0l);
    out += buf;
  }
  return out;
}

std::vector<double> log_spaced(double t_min, double t_max,
                               std::size_t points) {
  if (!(t_min > 0) || !(t_max > t_min) || points < 2)
    throw std::invalid_argument("log_spaced: bad grid parameters");
  std::vector<double> out(points);
  const double ratio = std::log(t_max / t_min) /
                       static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i)
    out[i] = t_min * std::exp(ratio * static_cast<double>(i));
  out.back() = t_max;
  return out;
}

} // namespace sldd
