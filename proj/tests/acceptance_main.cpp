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

// Acceptance suite: one criterion per function, one PASS/FAIL line each.
// Exit code 0 iff every criterion passes.

#include <cstdio>
#include <random>
#include <set>
#include <vector>

#include "slddlab/verifier.hpp"
#include "test_util.hpp"

using namespace sldd;

namespace {

int g_failures = 0;

void report(int index, const char *label, bool pass) {
  std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", index,
              label);
  if (!pass)
    ++g_failures;
}

bool in_band(double v, double lo, double hi) { return v >= lo && v <= hi; }

// --- criterion 1: cardinality identities ---------------------------------

bool criterion_cardinalities() {
  bool ok = true;
  ok &= sldd_ddgs(catalog("steane")).size() == 8;
  ok &= sldd_ddgs(catalog("bacon_shor", 3)).size() == 6;
  ok &= sldd_ddgs(catalog("four_two_two")).size() == 6;
  for (std::size_t n = 1; n <= 9; ++n)
    ok &= full_pauli_ddgs(n).size() == 2 * n;

  struct Case {
    const char *name;
    std::size_t param, max_levels;
  };
  for (const auto &c :
       {Case{"steane", 0, 2}, Case{"repetition", 3, 3}}) {
    const auto code = catalog(c.name, c.param);
    for (std::size_t levels = 1; levels <= c.max_levels; ++levels) {
      const auto counts = count_parameters(code.n, code.k, code.r, levels);
      const auto structural =
          concatenated_sldd_ddgs(concatenate(code, levels));
      ok &= BigInt(structural.size()) == counts.omega_size;
      const BigInt expected =
          boost::multiprecision::pow(BigInt(code.n),
                                     static_cast<unsigned>(levels)) -
          boost::multiprecision::pow(BigInt(code.k + code.r),
                                     static_cast<unsigned>(levels)) +
          2 * boost::multiprecision::pow(BigInt(code.k),
                                         static_cast<unsigned>(levels));
      ok &= counts.omega_size == expected;
    }
  }
  return ok;
}

// --- criterion 2: cost relations ------------------------------------------

bool criterion_costs() {
  bool ok = true;
  for (std::size_t m = 2; m <= 4; ++m) {
    const auto omega = sldd_ddgs(catalog("bacon_shor", m));
    for (std::size_t order = 1; order <= 3; ++order)
      for (auto fam : {SequenceFamily::CDD, SequenceFamily::NUDD}) {
        const CostModel model{fam, order};
        const BigInt c_sldd = sequence_cost(omega.size(), model);
        const BigInt c_full = sequence_cost(2 * m * m, model);
        ok &= boost::multiprecision::pow(c_sldd,
                                         static_cast<unsigned>(m)) == c_full;
      }
  }
  return ok;
}

// --- criterion 3: Theorem-1 brute force -----------------------------------

/// All distinct subspaces of GF(2)^{2n} realized as Pauli subgroups,
/// enumerated by spans of <= 2n of the 4^n - 1 nonzero vectors.
std::vector<GeneratorSet> all_subgroups(std::size_t n) {
  const auto paulis = testutil::all_paulis(n);
  std::vector<PauliOperator> nonzero(paulis.begin() + 1, paulis.end());
  const std::size_t count = nonzero.size();

  std::set<std::vector<std::uint32_t>> seen;
  std::vector<GeneratorSet> out;
  std::vector<std::size_t> stack;
  // depth-first over index combinations up to size 2n
  std::function<void(std::size_t)> rec = [&](std::size_t begin) {
    if (!stack.empty()) {
      std::vector<PauliOperator> elems;
      for (auto i : stack)
        elems.push_back(nonzero[i]);
      const auto basis = extract_generators(n, elems);
      if (basis.size() == stack.size()) { // independent set: a fresh basis
        // span signature: sorted member list
        std::vector<std::uint32_t> span;
        for (std::uint32_t mask = 1; mask < (1u << basis.size()); ++mask) {
          PauliOperator prod(n);
          for (std::size_t j = 0; j < basis.size(); ++j)
            if ((mask >> j) & 1)
              prod = multiply(basis[j], prod);
          std::uint32_t code = 0;
          for (std::size_t q = 0; q < n; ++q) {
            if (prod.x_bits().get(q))
              code |= 1u << q;
            if (prod.z_bits().get(q))
              code |= 1u << (n + q);
          }
          span.push_back(code);
        }
        std::sort(span.begin(), span.end());
        if (seen.insert(span).second)
          out.push_back(basis);
      }
    }
    if (stack.size() == 2 * n)
      return;
    for (std::size_t i = begin; i < count; ++i) {
      stack.push_back(i);
      rec(i + 1);
      stack.pop_back();
    }
  };
  rec(0);
  return out;
}

bool criterion_brute_force() {
  bool ok = true;
  // exhaustive over every subgroup at n <= 2
  for (std::size_t n = 1; n <= 2; ++n) {
    const auto subgroups = all_subgroups(n);
    // 2^{2n} - ... : 3 proper nontrivial + full at n=1; 66 nontrivial at n=2
    for (const auto &basis : subgroups) {
      const auto res = brute_force_minimal_ddgs(basis, n, 2 * n);
      ok &= res.minimal_size == basis.size();
      if (!ok)
        return false;
    }
  }

  // P_2 specifically: no size-3 set decouples, and P_2 itself does
  {
    const auto p2 = full_pauli_ddgs(2);
    GeneratorSet b2(2);
    for (const auto &g : p2.omega.generators())
      b2.push_back_unchecked(g);
    const auto res = brute_force_minimal_ddgs(b2, 2, 4);
    ok &= res.minimal_size == 4; // search visited and rejected sizes 1..3
    ok &= res.b_hat_self_decouples;
  }

  // n = 3: seeded sample of subgroups, plus the rank-6 saturation case
  std::mt19937_64 rng(314159);
  std::vector<GeneratorSet> samples;
  for (int t = 0; t < 12; ++t) {
    std::vector<PauliOperator> elems;
    const int draws = 1 + t % 6;
    for (int i = 0; i < draws; ++i)
      elems.push_back(testutil::random_pauli(rng, 3));
    const auto basis = extract_generators(3, elems);
    if (!basis.empty())
      samples.push_back(basis);
  }
  {
    GeneratorSet p3(3);
    for (const auto &g : full_pauli_ddgs(3).omega.generators())
      p3.push_back_unchecked(g);
    samples.push_back(p3);
  }
  for (const auto &basis : samples) {
    const auto res = brute_force_minimal_ddgs(basis, 3, 6);
    ok &= res.minimal_size == basis.size();
    if (!ok)
      return false;
  }
  return ok;
}

// --- criterion 4: centralizer oracle --------------------------------------

bool criterion_centralizer_oracle() {
  bool ok = true;
  std::mt19937_64 rng(271828);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int t = 0; t < 50; ++t) {
      std::vector<PauliOperator> elems;
      const int count = 1 + static_cast<int>(rng() % (2 * n));
      for (int i = 0; i < count; ++i)
        elems.push_back(testutil::random_pauli(rng, n));
      const auto omega = extract_generators(n, elems);
      ok &= same_span(centralizer(omega),
                      testutil::centralizer_bruteforce(omega));
      if (!ok)
        return false;
    }
  }
  for (const auto &code : catalog_all()) {
    const auto cent = centralizer(sldd_ddgs(code).omega);
    const auto sg = extract_generators(code.n, code.stabilizers_and_gauges());
    ok &= same_span(cent, sg);
  }
  return ok;
}

// --- criterion 5: decoupling-order scaling --------------------------------

bool criterion_scaling() {
  bool ok = true;
  const auto grid = log_spaced(1e-3, 1e-1, 6);
  std::vector<PauliOperator> xz = {PauliOperator::parse("X"),
                                   PauliOperator::parse("Z")};
  const DdgsResult omega{GeneratorSet::from(1, xz), DdgsKind::full_pauli,
                         "P_1"};
  for (std::uint64_t seed : {101u, 202u, 303u}) {
    const auto model = random_noise(1, 1, 1, 1.0, seed);

    const auto cdd1 =
        decoupling_order_fit(cdd_sequence(omega, 1), model, omega, grid);
    std::printf("    seed %llu: CDD1 slope %.3f, ",
                static_cast<unsigned long long>(seed), cdd1.fitted_slope);
    ok &= in_band(cdd1.fitted_slope, 1.7, 2.6);

    const auto nudd2 =
        decoupling_order_fit(nudd_sequence(omega, 2), model, omega, grid);
    std::printf("NUDD2 slope %.3f, ", nudd2.fitted_slope);
    ok &= in_band(nudd2.fitted_slope, 2.6, 3.6);

    const auto base = decoupling_order_fit(identity_sequence(1), model,
                                           omega, grid, std::nullopt, 1);
    std::printf("baseline slope %.3f\n", base.fitted_slope);
    ok &= in_band(base.fitted_slope, 0.7, 1.3);
  }
  return ok;
}

// --- criterion 6: syndrome preservation -----------------------------------

bool criterion_syndrome() {
  bool ok = true;
  const auto code = catalog("repetition", 3);
  const auto omega = sldd_ddgs(code);
  const auto seq = cdd_sequence(omega, 1);
  const auto full = full_pauli_ddgs(3);
  const auto full_seq = cdd_sequence(full, 1);
  std::printf("    interval advantage: %zu (SLDD, |omega|=%zu) vs %zu "
              "(full Pauli, |omega|=%zu)\n",
              seq.interval_count(), omega.size(), full_seq.interval_count(),
              full.size());
  ok &= seq.interval_count() == 16;
  ok &= full_seq.interval_count() == 64;

  const auto model = random_noise(3, 1, 2, 1.0, 404);
  const auto grid = log_spaced(1e-3, 1e-1, 6);
  const auto rep = decoupling_order_fit(seq, model, omega, grid, code);
  std::printf("    H_eff leakage slope %.3f, max H_0 leakage %.3e\n",
              rep.leakage_slope,
              *std::max_element(rep.h0_leakage.begin(),
                                rep.h0_leakage.end()));
  ok &= rep.leakage_slope >= 1.7;
  for (const auto v : rep.h0_leakage)
    ok &= v <= 1e-10;
  return ok;
}

// --- criterion 7: first-order analytic filter -----------------------------

bool criterion_first_order() {
  bool ok = true;
  std::vector<DdgsResult> omegas;
  omegas.push_back(full_pauli_ddgs(1));
  omegas.push_back(full_pauli_ddgs(2));
  omegas.push_back(full_pauli_ddgs(3));
  omegas.push_back(sldd_ddgs(catalog("repetition", 3)));
  omegas.push_back(sldd_ddgs(catalog("four_two_two")));
  omegas.push_back(sldd_ddgs(catalog("bacon_shor", 2)));
  omegas.push_back(sldd_ddgs(catalog("bacon_shor", 3)));
  omegas.push_back(DdgsResult{cat_state_stabilizers(3), DdgsKind::custom,
                              "cat(3)"});
  for (const auto &omega : omegas) {
    if (omega.size() > 6)
      continue;
    const auto errors = coset_error_basis(omega);
    for (std::size_t order = 1; order <= 3; ++order) {
      ok &= first_order_filter_check(cdd_sequence(omega, order), omega,
                                     errors);
      ok &= first_order_filter_check(nudd_sequence(omega, order), omega,
                                     errors);
      if (!ok) {
        std::printf("    FAILED at %s order %zu\n", omega.source.c_str(),
                    order);
        return false;
      }
    }
  }
  return ok;
}

// --- criterion 8: domain planner ------------------------------------------

bool criterion_planner() {
  bool ok = true;
  std::mt19937_64 rng(161803);

  // doubling k_total with f = 2 raises W by exactly p
  for (int t = 0; t < 100; ++t) {
    const std::size_t k_total = 2 + rng() % (1u << 20);
    const std::size_t p = 1 + rng() % 5;
    const CostModel model{SequenceFamily::NUDD, 1}; // f = 2
    const auto a = plan_domains(k_total, 7, 1, 0, model, p);
    const auto b = plan_domains(2 * k_total, 7, 1, 0, model, p);
    ok &= b.generator_budget == a.generator_budget + p;
  }

  // budget boundary decided by exact integer comparison; monotone in k_total
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 3 + rng() % 7;
    const std::size_t k = 1;
    const std::size_t r = (n > 2) ? rng() % (n - 2) : 0;
    const std::size_t k_total = 1 + rng() % 1000000;
    const std::size_t p = 1 + rng() % 6;
    const std::size_t order = 1 + rng() % 3;
    const auto fam = (rng() & 1) ? SequenceFamily::CDD : SequenceFamily::NUDD;
    const CostModel model{fam, order};
    const auto plan = plan_domains(k_total, n, k, r, model, p);

    const BigInt f = model.f_of_n();
    const BigInt budget = boost::multiprecision::pow(
        BigInt(k_total), static_cast<unsigned>(p));
    // defining property of W: f^W <= k_total^p < f^(W+1)
    const BigInt w = plan.generator_budget;
    const BigInt f_w = boost::multiprecision::pow(
        f, static_cast<unsigned>(w));
    ok &= f_w <= budget && f_w * f > budget;

    if (plan.levels > 0) {
      ok &= plan.within_budget;
      ok &= plan.cost_per_domain <= budget;
      const auto next =
          count_parameters(n, k, r, plan.levels + 1);
      ok &= next.omega_size > w; // R is maximal
      ok &= plan.domain_count * plan.domain_size_logical >= k_total;
    } else {
      ok &= !plan.within_budget;
      ok &= count_parameters(n, k, r, 1).omega_size > w;
    }

    const auto bigger = plan_domains(k_total * 2, n, k, r, model, p);
    ok &= bigger.generator_budget >= plan.generator_budget;
    ok &= bigger.levels >= plan.levels;
    if (!ok)
      return false;
  }
  return ok;
}

} // namespace

int main() {
  std::printf("slddlab acceptance suite\n========================\n");
  report(1, "cardinality identities (SLDD, full Pauli, concatenated)",
         criterion_cardinalities());
  report(2, "exact cost relations (Bacon-Shor power identity)",
         criterion_costs());
  report(3, "Theorem-1 brute force: minimal DDGS size = rank(B)",
         criterion_brute_force());
  report(4, "centralizer matches exhaustive enumeration",
         criterion_centralizer_oracle());
  report(5, "decoupling-order scaling (CDD1/NUDD2/baseline, 3 seeds)",
         criterion_scaling());
  report(6, "syndrome preservation under SLDD CDD1 (repetition-3)",
         criterion_syndrome());
  report(7, "first-order analytic filter (both families, N <= 3)",
         criterion_first_order());
  report(8, "domain planner: exact budgets, monotonicity",
         criterion_planner());
  if (g_failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criteria FAILED\n", g_failures);
  return 1;
}
