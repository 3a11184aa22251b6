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

#include "slddlab/ddgs.hpp"

#include "slddlab/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "slddlab/gf2.hpp"

namespace sldd {

const char *to_string(DdgsKind k) {
  switch (k) {
  case DdgsKind::full_pauli:
    return "full_pauli";
  case DdgsKind::sldd:
    return "sldd";
  case DdgsKind::concatenated_sldd:
    return "concatenated_sldd";
  case DdgsKind::union_set:
    return "union";
  case DdgsKind::custom:
    return "custom";
  }
  return "?";
}

const char *to_string(SequenceFamily f) {
  switch (f) {
  case SequenceFamily::CDD:
    return "CDD";
  case SequenceFamily::NUDD:
    return "NUDD";
  case SequenceFamily::custom:
    return "custom";
  }
  return "?";
}

SequenceFamily family_from_string(const std::string &s) {
  if (s == "CDD" || s == "cdd")
    return SequenceFamily::CDD;
  if (s == "NUDD" || s == "nudd")
    return SequenceFamily::NUDD;
  if (s == "custom")
    return SequenceFamily::custom;
  throw std::invalid_argument("unknown sequence family '" + s + "'");
}

BigInt CostModel::f_of_n() const {
  if (order < 1 || family == SequenceFamily::custom)
    throw std::invalid_argument("CostModel: needs CDD/NUDD with order >= 1");
  if (family == SequenceFamily::CDD)
    return boost::multiprecision::pow(BigInt(2),
                                      static_cast<unsigned>(order));
  return BigInt(order + 1);
}

DdgsResult full_pauli_ddgs(std::size_t n) {
  if (n < 1)
    throw std::invalid_argument("full_pauli_ddgs: n must be >= 1");
  std::vector<PauliOperator> gens;
  gens.reserve(2 * n);
  for (std::size_t i = 1; i <= n; ++i) {
    gens.push_back(PauliOperator::x_on(n, i));
    gens.push_back(PauliOperator::z_on(n, i));
  }
  return DdgsResult{GeneratorSet::from(n, gens), DdgsKind::full_pauli,
                    "P_" + std::to_string(n)};
}

DdgsResult sldd_ddgs(const CodeSpec &code) {
  const auto report = validate(code);
  if (!report.empty()) {
    std::string msg = "sldd_ddgs: code invalid:";
    for (const auto &r : report)
      msg += " " + r + ";";
    throw std::invalid_argument(msg);
  }
  return DdgsResult{GeneratorSet::from(code.n, code.stabilizers_and_logicals()),
                    DdgsKind::sldd, code.name};
}

DdgsResult concatenated_sldd_ddgs(const ConcatenatedCode &cc) {
  std::vector<PauliOperator> gens;
  for (const auto &lvl : cc.per_level_stabilizers)
    for (const auto &g : lvl.generators())
      gens.push_back(g);
  for (const auto &pr : cc.top_logicals) {
    gens.push_back(pr.x);
    gens.push_back(pr.z);
  }
  return DdgsResult{GeneratorSet::from(cc.n_total, gens),
                    DdgsKind::concatenated_sldd,
                    cc.base.name + " R=" + std::to_string(cc.levels)};
}

DdgsResult
union_compose(std::size_t n_total,
              const std::vector<std::pair<DdgsResult,
                                          std::vector<std::size_t>>> &parts) {
  std::vector<bool> used(n_total, false);
  std::vector<PauliOperator> gens;
  std::string source;
  for (const auto &[part, map] : parts) {
    if (map.size() != part.n_qubits())
      throw std::invalid_argument("union_compose: map size != part qubits");
    for (auto t : map) {
      if (t >= n_total)
        throw std::invalid_argument("union_compose: map index out of range");
      if (used[t])
        throw std::invalid_argument(
            "union_compose: overlapping qubit supports at index " +
            std::to_string(t));
      used[t] = true;
    }
    for (const auto &g : part.omega.generators())
      gens.push_back(g.embed(n_total, map));
    if (!source.empty())
      source += " + ";
    source += part.source;
  }
  return DdgsResult{GeneratorSet::from(n_total, gens), DdgsKind::union_set,
                    source};
}

bool decouples(const DdgsResult &omega, const GeneratorSet &error_basis) {
  if (omega.n_qubits() != error_basis.n_qubits())
    throw std::invalid_argument("decouples: register sizes differ");
  const GeneratorSet cent = centralizer(omega.omega);
  return subgroup_intersection_trivial(cent, error_basis);
}

GeneratorSet coset_error_basis(const DdgsResult &omega) {
  const std::size_t n = omega.n_qubits();
  const GeneratorSet cent = centralizer(omega.omega);
  gf2::EchelonBasis basis(2 * n);
  for (const auto &c : cent.generators())
    basis.insert(c.symplectic_row());
  GeneratorSet out(n);
  // Complete with single-qubit X/Z rows in register order; what gets kept
  // spans a complement of the centralizer.
  for (std::size_t q = 1; q <= n && basis.rank() < 2 * n; ++q) {
    for (const auto &p :
         {PauliOperator::x_on(n, q), PauliOperator::z_on(n, q)}) {
      if (basis.insert(p.symplectic_row()))
        out.push_back_unchecked(p);
    }
  }
  return out;
}

namespace {

// Packed symplectic row for the small-n brute force: x bits low, z bits
// high.
std::uint64_t pack_row(const PauliOperator &p) {
  const std::size_t n = p.n_qubits();
  std::uint64_t r = 0;
  for (std::size_t q = 0; q < n; ++q) {
    if (p.x_bits().get(q))
      r |= std::uint64_t{1} << q;
    if (p.z_bits().get(q))
      r |= std::uint64_t{1} << (n + q);
  }
  return r;
}

bool packed_anticommute(std::uint64_t a, std::uint64_t b, std::size_t n) {
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  const auto p1 = std::popcount((a & mask) & (b >> n));
  const auto p2 = std::popcount((a >> n) & (b & mask));
  return ((p1 + p2) & 1) != 0;
}

/// Candidate set decouples iff no nonzero element of span(B) commutes with
/// every candidate.
bool packed_decouples(const std::vector<std::uint64_t> &candidate_rows,
                      const std::vector<std::uint64_t> &span_b_nonzero,
                      std::size_t n) {
  for (const auto v : span_b_nonzero) {
    bool commutes_all = true;
    for (const auto c : candidate_rows)
      if (packed_anticommute(v, c, n)) {
        commutes_all = false;
        break;
      }
    if (commutes_all)
      return false;
  }
  return true;
}

/// First (lexicographically least) combination of size s over candidates
/// with first index i1 that decouples; empty if none in that slice.
std::vector<std::size_t>
search_slice(std::size_t i1, std::size_t s,
             const std::vector<std::uint64_t> &rows,
             const std::vector<std::uint64_t> &span_b, std::size_t n) {
  const std::size_t m = rows.size();
  if (i1 + s > m)
    return {};
  std::vector<std::size_t> idx(s);
  for (std::size_t j = 0; j < s; ++j)
    idx[j] = i1 + j;
  std::vector<std::uint64_t> cand(s);
  while (true) {
    for (std::size_t j = 0; j < s; ++j)
      cand[j] = rows[idx[j]];
    if (packed_decouples(cand, span_b, n))
      return idx;
    // next combination in lexicographic order, idx[0] pinned to i1
    std::size_t j = s - 1;
    while (j >= 1 && idx[j] == m - s + j)
      --j;
    if (j == 0)
      return {};
    ++idx[j];
    for (std::size_t t = j + 1; t < s; ++t)
      idx[t] = idx[t - 1] + 1;
  }
}

} // namespace

BruteForceResult brute_force_minimal_ddgs(const GeneratorSet &error_basis,
                                          std::size_t n, std::size_t size_cap,
                                          bool parallel) {
  if (n > 3)
    throw resource_error(
        "brute_force_minimal_ddgs is an oracle capped at n <= 3");
  if (n < 1 || error_basis.n_qubits() != n)
    throw std::invalid_argument("brute_force_minimal_ddgs: bad register size");
  if (size_cap > 2 * n)
    throw std::invalid_argument(
        "brute_force_minimal_ddgs: size_cap exceeds 2n");
  if (error_basis.empty())
    throw std::invalid_argument(
        "brute_force_minimal_ddgs: empty error basis");

  // Candidates: every non-identity Pauli modulo phase, in letter order.
  std::vector<PauliOperator> candidates;
  const std::uint64_t total = std::uint64_t{1} << (2 * n);
  for (std::uint64_t code = 1; code < total; ++code) {
    BitVec x(n), z(n);
    for (std::size_t q = 0; q < n; ++q) {
      if ((code >> q) & 1)
        x.set(q, true);
      if ((code >> (n + q)) & 1)
        z.set(q, true);
    }
    candidates.push_back(PauliOperator(n, x, z, 0).hermitian_representative());
  }
  std::sort(candidates.begin(), candidates.end(), pauli_letter_less);
  std::vector<std::uint64_t> rows(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i)
    rows[i] = pack_row(candidates[i]);

  // All nonzero elements of span(B).
  std::vector<std::uint64_t> basis_rows;
  for (const auto &b : error_basis.generators())
    basis_rows.push_back(pack_row(b));
  std::vector<std::uint64_t> span_b;
  const std::size_t nb = basis_rows.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << nb); ++mask) {
    std::uint64_t v = 0;
    for (std::size_t j = 0; j < nb; ++j)
      if ((mask >> j) & 1)
        v ^= basis_rows[j];
    if (v)
      span_b.push_back(v);
  }
  std::sort(span_b.begin(), span_b.end());
  span_b.erase(std::unique(span_b.begin(), span_b.end()), span_b.end());

  BruteForceResult result;
  {
    std::vector<std::uint64_t> self(basis_rows);
    result.b_hat_self_decouples = packed_decouples(self, span_b, n);
  }

  for (std::size_t s = 1; s <= size_cap; ++s) {
    const std::size_t m = rows.size();
    std::vector<std::vector<std::size_t>> slice_hits(m);
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
      for (std::size_t i1 = 0; i1 < m; ++i1)
        slice_hits[i1] = search_slice(i1, s, rows, span_b, n);
    } else {
      for (std::size_t i1 = 0; i1 < m; ++i1)
        slice_hits[i1] = search_slice(i1, s, rows, span_b, n);
    }
    for (std::size_t i1 = 0; i1 < m; ++i1) {
      if (!slice_hits[i1].empty()) {
        result.minimal_size = s;
        for (auto idx : slice_hits[i1])
          result.witness.push_back(candidates[idx]);
        return result;
      }
    }
  }
  result.minimal_size = 0; // nothing within the cap
  return result;
}

BigInt sequence_cost(std::size_t omega_size, const CostModel &model) {
  return boost::multiprecision::pow(model.f_of_n(),
                                    static_cast<unsigned>(omega_size));
}

DomainPlan plan_domains(std::size_t k_total, std::size_t n, std::size_t k,
                        std::size_t r, const CostModel &model,
                        std::size_t budget_exponent) {
  if (k_total < 1)
    throw std::invalid_argument("plan_domains: k_total must be >= 1");
  if (budget_exponent < 1)
    throw std::invalid_argument("plan_domains: budget exponent must be >= 1");

  DomainPlan plan;
  plan.k_total = k_total;
  plan.base_n = n;
  plan.base_k = k;
  plan.base_r = r;
  plan.family = model.family;
  plan.order = model.order;
  plan.budget_exponent = budget_exponent;

  const BigInt f = model.f_of_n();
  const BigInt budget_cost = boost::multiprecision::pow(
      BigInt(k_total), static_cast<unsigned>(budget_exponent));

  // W = largest integer with f^W <= k_total^p, by exact iteration.
  BigInt w = 0, acc = 1;
  while (acc * f <= budget_cost) {
    acc *= f;
    ++w;
  }
  plan.generator_budget = w;

  // Deepest R whose DDGS fits the budget; omega_size grows strictly in R.
  std::size_t levels = 0;
  for (std::size_t cand = 1;; ++cand) {
    const auto counts = count_parameters(n, k, r, cand);
    if (counts.omega_size <= w)
      levels = cand;
    else
      break;
  }
  plan.levels = levels;
  if (levels == 0) {
    const auto c1 = count_parameters(n, k, r, 1);
    plan.omega_size_per_domain = c1.omega_size;
    plan.cost_per_domain =
        sequence_cost(static_cast<std::size_t>(c1.omega_size), model);
    plan.domain_size_logical = 0;
    plan.domain_physical_qubits = 0;
    plan.domain_count = 0;
    plan.within_budget = false;
    return plan;
  }

  const auto counts = count_parameters(n, k, r, levels);
  plan.omega_size_per_domain = counts.omega_size;
  plan.cost_per_domain =
      sequence_cost(static_cast<std::size_t>(counts.omega_size), model);
  plan.domain_size_logical = counts.l_R;
  plan.domain_physical_qubits = counts.n_R;
  // ceil division; a non-dividing k_total leaves one smaller final domain
  plan.domain_count = (BigInt(k_total) + counts.l_R - 1) / counts.l_R;
  plan.within_budget = plan.cost_per_domain <= budget_cost;
  return plan;
}

} // namespace sldd
