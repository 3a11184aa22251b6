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

#include "doctest.h"

#include <random>

#include "slddlab/ddgs.hpp"
#include "slddlab/gf2.hpp"
#include "test_util.hpp"

using namespace sldd;

TEST_CASE("full_pauli_ddgs sizes and trivial centralizer") {
  const auto p1 = full_pauli_ddgs(1);
  REQUIRE(p1.size() == 2);
  CHECK(p1.omega[0].str() == "X");
  CHECK(p1.omega[1].str() == "Z");
  CHECK(full_pauli_ddgs(3).size() == 6);
  for (std::size_t n = 1; n <= 4; ++n)
    CHECK(centralizer(full_pauli_ddgs(n).omega).size() == 0);
  CHECK_THROWS(full_pauli_ddgs(0));
}

TEST_CASE("sldd sizes: n + k - r") {
  CHECK(sldd_ddgs(catalog("steane")).size() == 8);
  CHECK(sldd_ddgs(catalog("bacon_shor", 3)).size() == 6);
  CHECK(sldd_ddgs(catalog("four_two_two")).size() == 6);
  CHECK(full_pauli_ddgs(4).size() == 8);
  for (const auto &code : catalog_all())
    CHECK(sldd_ddgs(code).size() == code.n + code.k - code.r);
}

TEST_CASE("sldd rejects invalid codes") {
  auto code = catalog("steane");
  std::vector<PauliOperator> stabs = code.stabilizers.generators();
  stabs[0] = code.logicals[0].x;
  code.stabilizers = extract_generators(7, stabs);
  CHECK_THROWS(sldd_ddgs(code));
}

TEST_CASE("centralizer of SLDD spans exactly the stabilizer-gauge group") {
  for (const auto &code : catalog_all()) {
    CAPTURE(code.name);
    const auto omega = sldd_ddgs(code);
    const auto cent = centralizer(omega.omega);
    const auto sg = extract_generators(code.n, code.stabilizers_and_gauges());
    CHECK(same_span(cent, sg));
    if (code.r == 0)
      CHECK(same_span(cent, code.stabilizers));
  }
}

TEST_CASE("concatenated SLDD sizes follow the level-count formula") {
  const auto rep = concatenate(catalog("repetition", 3), 2);
  CHECK(concatenated_sldd_ddgs(rep).size() == 10); // 3^2 - 1 + 2

  const auto steane2 = concatenate(catalog("steane"), 2);
  CHECK(concatenated_sldd_ddgs(steane2).size() == 50);

  for (const char *name : {"steane", "five_qubit"}) {
    const auto code = catalog(name);
    const auto r1 = concatenated_sldd_ddgs(concatenate(code, 1));
    const auto direct = sldd_ddgs(code);
    CHECK(r1.size() == direct.size());
    CHECK(same_span(r1.omega, direct.omega));
  }
}

TEST_CASE("union_compose embeds disjoint parts") {
  const auto single = full_pauli_ddgs(1);
  const auto joined = union_compose(2, {{single, {0}}, {single, {1}}});
  CHECK(joined.size() == 4);
  CHECK(same_span(joined.omega, full_pauli_ddgs(2).omega));

  const auto rep = sldd_ddgs(catalog("repetition", 3));
  DdgsResult cat{cat_state_stabilizers(3), DdgsKind::custom, "cat(3)"};
  const auto big = union_compose(6, {{rep, {0, 1, 2}}, {cat, {3, 4, 5}}});
  CHECK(big.size() == 7);
  CHECK(big.n_qubits() == 6);

  const auto empty = union_compose(2, {});
  CHECK(empty.size() == 0);

  CHECK_THROWS(union_compose(2, {{single, {0}}, {single, {0}}}));
  CHECK_THROWS(union_compose(1, {{single, {1}}}));
}

TEST_CASE("decouples: closed-form cases") {
  const auto p2 = full_pauli_ddgs(2);
  GeneratorSet b2(2);
  for (const auto &g : p2.omega.generators())
    b2.push_back_unchecked(g);
  CHECK(decouples(p2, b2)); // P_2 decouples itself: trivial centralizer

  DdgsResult just_z{GeneratorSet::from(1, {PauliOperator::parse("Z")}),
                    DdgsKind::custom, "Z"};
  const auto span_z = GeneratorSet::from(1, {PauliOperator::parse("Z")});
  CHECK_FALSE(decouples(just_z, span_z)); // Z centralizes itself
}

TEST_CASE("decouples: SLDD vs its coset error basis, and minimality") {
  for (const char *name : {"repetition", "four_two_two", "five_qubit"}) {
    CAPTURE(name);
    const auto code = catalog(name, name == std::string("repetition") ? 3 : 0);
    const auto omega = sldd_ddgs(code);
    const auto errors = coset_error_basis(omega);
    CHECK(errors.size() == omega.size()); // Theorem-2 style saturation
    CHECK(decouples(omega, errors));

    // dropping any one generator breaks decoupling
    for (std::size_t drop = 0; drop < omega.size(); ++drop) {
      std::vector<PauliOperator> fewer;
      for (std::size_t i = 0; i < omega.size(); ++i)
        if (i != drop)
          fewer.push_back(omega.omega[i]);
      DdgsResult smaller{GeneratorSet::from(code.n, fewer), DdgsKind::custom,
                         "minus one"};
      CHECK_FALSE(decouples(smaller, errors));
    }
  }
}

TEST_CASE("coset_error_basis complements the centralizer") {
  std::mt19937_64 rng(41);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int t = 0; t < 10; ++t) {
      std::vector<PauliOperator> elems;
      const int count = 1 + static_cast<int>(rng() % (2 * n));
      for (int i = 0; i < count; ++i)
        elems.push_back(testutil::random_pauli(rng, n));
      const auto omega_set = extract_generators(n, elems);
      if (omega_set.empty())
        continue;
      DdgsResult omega{omega_set, DdgsKind::custom, "random"};
      const auto cent = centralizer(omega_set);
      const auto errors = coset_error_basis(omega);
      CHECK(errors.size() == 2 * n - cent.size());
      CHECK(subgroup_intersection_trivial(cent, errors));
    }
  }
}

TEST_CASE("brute force: single-axis error group") {
  const auto span_z = GeneratorSet::from(1, {PauliOperator::parse("Z")});
  const auto res = brute_force_minimal_ddgs(span_z, 1, 2);
  CHECK(res.minimal_size == 1);
  REQUIRE(res.witness.size() == 1);
  CHECK(res.witness[0].str() == "X"); // lexicographically least witness
  CHECK_FALSE(res.b_hat_self_decouples); // Z centralizes its own span
}

TEST_CASE("brute force: full Pauli groups saturate at 2n") {
  const auto p1 = full_pauli_ddgs(1);
  GeneratorSet b1(1);
  for (const auto &g : p1.omega.generators())
    b1.push_back_unchecked(g);
  const auto r1 = brute_force_minimal_ddgs(b1, 1, 2);
  CHECK(r1.minimal_size == 2);
  CHECK(r1.b_hat_self_decouples);

  const auto p2 = full_pauli_ddgs(2);
  GeneratorSet b2(2);
  for (const auto &g : p2.omega.generators())
    b2.push_back_unchecked(g);
  const auto r2 = brute_force_minimal_ddgs(b2, 2, 4);
  CHECK(r2.minimal_size == 4); // no size-3 subset decouples P_2
  CHECK(r2.b_hat_self_decouples);
}

TEST_CASE("brute force minimal size equals rank (n <= 2, random subgroups)") {
  std::mt19937_64 rng(43);
  for (std::size_t n = 1; n <= 2; ++n) {
    for (int t = 0; t < 12; ++t) {
      std::vector<PauliOperator> elems;
      const int count = 1 + static_cast<int>(rng() % (2 * n));
      for (int i = 0; i < count; ++i)
        elems.push_back(testutil::random_pauli(rng, n));
      const auto basis = extract_generators(n, elems);
      if (basis.empty())
        continue;
      const auto res = brute_force_minimal_ddgs(basis, n, 2 * n);
      CHECK(res.minimal_size == basis.size());
    }
  }
}

TEST_CASE("brute force is deterministic across schedules") {
  const auto basis = GeneratorSet::from(
      2, {PauliOperator::parse("XZ"), PauliOperator::parse("ZI")});
  const auto par = brute_force_minimal_ddgs(basis, 2, 4, true);
  const auto ser = brute_force_minimal_ddgs(basis, 2, 4, false);
  CHECK(par.minimal_size == ser.minimal_size);
  REQUIRE(par.witness.size() == ser.witness.size());
  for (std::size_t i = 0; i < par.witness.size(); ++i)
    CHECK(par.witness[i] == ser.witness[i]);
}

TEST_CASE("brute force refuses oversized problems") {
  const auto basis = GeneratorSet::from(1, {PauliOperator::parse("Z")});
  CHECK_THROWS(brute_force_minimal_ddgs(basis, 4, 2));
}

TEST_CASE("sequence cost: exact big integers") {
  CHECK(sequence_cost(6, {SequenceFamily::CDD, 1}) == 64);
  CHECK(sequence_cost(0, {SequenceFamily::CDD, 1}) == 1);
  CHECK(sequence_cost(0, {SequenceFamily::NUDD, 1}) == 1);
  CHECK(sequence_cost(8, {SequenceFamily::NUDD, 2}) == 6561); // 3^8
  CHECK(sequence_cost(14, {SequenceFamily::NUDD, 2}) ==
        BigInt(4782969)); // 3^14
  // CDD cost >= NUDD cost at equal omega size, monotone in both arguments
  for (std::size_t sz = 1; sz <= 8; ++sz)
    for (std::size_t ord = 1; ord <= 3; ++ord) {
      CHECK(sequence_cost(sz, {SequenceFamily::CDD, ord}) >=
            sequence_cost(sz, {SequenceFamily::NUDD, ord}));
      CHECK(sequence_cost(sz + 1, {SequenceFamily::CDD, ord}) >
            sequence_cost(sz, {SequenceFamily::CDD, ord}));
      CHECK(sequence_cost(sz, {SequenceFamily::CDD, ord + 1}) >
            sequence_cost(sz, {SequenceFamily::CDD, ord}));
      CHECK(sequence_cost(sz, {SequenceFamily::NUDD, ord + 1}) >
            sequence_cost(sz, {SequenceFamily::NUDD, ord}));
    }
}

TEST_CASE("bacon-shor cost identity: c_SLDD^m == c_fullPauli(m^2)") {
  for (std::size_t m = 2; m <= 4; ++m) {
    const auto code = catalog("bacon_shor", m);
    const auto omega = sldd_ddgs(code);
    CHECK(omega.size() == 2 * m);
    for (std::size_t ord = 1; ord <= 3; ++ord)
      for (auto fam : {SequenceFamily::CDD, SequenceFamily::NUDD}) {
        const CostModel model{fam, ord};
        const BigInt c_sldd = sequence_cost(omega.size(), model);
        const BigInt c_full =
            sequence_cost(full_pauli_ddgs(m * m).size(), model);
        CHECK(boost::multiprecision::pow(c_sldd, static_cast<unsigned>(m)) ==
              c_full);
      }
  }
}

TEST_CASE("plan_domains: worked example") {
  const CostModel nudd1{SequenceFamily::NUDD, 1}; // f = 2
  const auto plan = plan_domains(1u << 20, 7, 1, 0, nudd1, 3);
  CHECK(plan.generator_budget == 60);
  CHECK(plan.levels == 2);
  CHECK(plan.omega_size_per_domain == 50);
  CHECK(plan.domain_size_logical == 1);
  CHECK(plan.domain_physical_qubits == 49);
  CHECK(plan.domain_count == (1u << 20));
  CHECK(plan.within_budget);

  // doubling k_total raises the budget by exactly p when f = 2
  const auto plan2 = plan_domains(1u << 21, 7, 1, 0, nudd1, 3);
  CHECK(plan2.generator_budget == plan.generator_budget + 3);
  CHECK(plan2.levels >= plan.levels);
}

TEST_CASE("plan_domains: feasibility and sentinel") {
  const CostModel cdd1{SequenceFamily::CDD, 1};
  // big budget: R >= 1 and within budget
  const auto ok = plan_domains(4096, 3, 1, 0, cdd1, 4);
  CHECK(ok.levels >= 1);
  CHECK(ok.within_budget);

  // k_total = 1: budget W = 0 < omega_size(R=1) -> sentinel
  const auto bad = plan_domains(1, 7, 1, 0, cdd1, 3);
  CHECK(bad.levels == 0);
  CHECK_FALSE(bad.within_budget);
  CHECK(bad.domain_count == 0);
}

TEST_CASE("plan_domains: monotone in k_total (property)") {
  std::mt19937_64 rng(47);
  const CostModel nudd2{SequenceFamily::NUDD, 2};
  for (int t = 0; t < 200; ++t) {
    const std::size_t k_total = 1 + rng() % 100000;
    const auto a = plan_domains(k_total, 5, 1, 0, nudd2, 2);
    const auto b = plan_domains(2 * k_total, 5, 1, 0, nudd2, 2);
    CHECK(b.generator_budget >= a.generator_budget);
    CHECK(b.levels >= a.levels);
    CHECK(b.domain_size_logical >= a.domain_size_logical);
  }
}
