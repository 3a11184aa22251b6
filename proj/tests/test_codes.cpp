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

#include <sstream>

#include "slddlab/codes.hpp"
#include "slddlab/dense.hpp"
#include "slddlab/gf2.hpp"
#include "test_util.hpp"

using namespace sldd;

TEST_CASE("catalog codes validate cleanly with the advertised parameters") {
  struct Expect {
    const char *name;
    std::size_t param, n, k, r, q;
  };
  const Expect cases[] = {
      {"repetition", 3, 3, 1, 0, 2}, {"five_qubit", 0, 5, 1, 0, 4},
      {"steane", 0, 7, 1, 0, 6},     {"four_two_two", 0, 4, 2, 0, 2},
      {"bacon_shor", 2, 4, 1, 1, 2}, {"bacon_shor", 3, 9, 1, 4, 4},
      {"bacon_shor", 4, 16, 1, 9, 6}};
  for (const auto &e : cases) {
    CAPTURE(e.name);
    const auto code = catalog(e.name, e.param);
    CHECK(code.n == e.n);
    CHECK(code.k == e.k);
    CHECK(code.r == e.r);
    CHECK(code.q_count() == e.q);
    CHECK(validate(code).empty());
  }
  CHECK(catalog("bacon_shor", 3).d == 3);
  CHECK_THROWS(catalog("nonexistent"));
  CHECK_THROWS(catalog("repetition", 4));
  CHECK_THROWS(catalog("bacon_shor", 1));
}

TEST_CASE("repetition(3) uses the conventional stabilizers") {
  const auto code = catalog("repetition", 3);
  CHECK(code.stabilizers[0].str() == "ZZI");
  CHECK(code.stabilizers[1].str() == "IZZ");
}

TEST_CASE("validate flags a corrupted Steane code") {
  auto code = catalog("steane");
  // swap one stabilizer for the logical X: breaks commutation and rank
  std::vector<PauliOperator> stabs = code.stabilizers.generators();
  stabs[0] = code.logicals[0].x;
  code.stabilizers = extract_generators(7, stabs);
  const auto report = validate(code);
  CHECK_FALSE(report.empty());
}

TEST_CASE("validate reports count violations without throwing") {
  auto code = catalog("four_two_two");
  code.logicals.pop_back();
  const auto report = validate(code);
  REQUIRE_FALSE(report.empty());
  bool mentions_count = false;
  for (const auto &r : report)
    if (r.find("logical pair count") != std::string::npos)
      mentions_count = true;
  CHECK(mentions_count);
}

TEST_CASE("stabilizer projector has rank 2^(k+r) (dense oracle, n <= 9)") {
  for (const auto &code : catalog_all()) {
    if (code.n > 9)
      continue;
    CAPTURE(code.name);
    const auto saved = dense_qubit_limit();
    set_dense_qubit_limit(10);
    const Eigen::Index dim = Eigen::Index{1} << code.n;
    Matrix proj = Matrix::Identity(dim, dim);
    for (const auto &s : code.stabilizers.generators())
      proj = 0.5 * (proj + to_matrix(s) * proj);
    CHECK((proj * proj - proj).norm() < 1e-9);
    const double rank = proj.trace().real();
    const double expected =
        static_cast<double>(Eigen::Index{1} << (code.k + code.r));
    CHECK(rank == doctest::Approx(expected).epsilon(1e-9));
    set_dense_qubit_limit(saved);
  }
}

TEST_CASE("cat state stabilizers") {
  const auto a2 = cat_state_stabilizers(2);
  REQUIRE(a2.size() == 2);
  CHECK(a2[0].str() == "XX");
  CHECK(a2[1].str() == "ZZ");

  const auto a3 = cat_state_stabilizers(3);
  REQUIRE(a3.size() == 3);
  CHECK(a3[0].str() == "XXX");
  CHECK(a3[1].str() == "ZZI");
  CHECK(a3[2].str() == "IZZ");

  for (std::size_t a = 2; a <= 5; ++a) {
    const auto gs = cat_state_stabilizers(a);
    CHECK(gs.size() == a);
    for (std::size_t i = 0; i < gs.size(); ++i)
      for (std::size_t j = i + 1; j < gs.size(); ++j)
        CHECK(commutes(gs[i], gs[j]));
  }
  // a=4 is self-centralizing: 2n - a = a when n = a
  const auto a4 = cat_state_stabilizers(4);
  const auto cent = centralizer(a4);
  CHECK(cent.size() == 4);
  CHECK(same_span(cent, a4));
  CHECK_THROWS(cat_state_stabilizers(1));
}

TEST_CASE("count_parameters matches the closed forms") {
  const auto c1 = count_parameters(7, 1, 0, 2);
  CHECK(c1.n_R == 49);
  CHECK(c1.q_R == 48);
  CHECK(c1.l_R == 1);
  CHECK(c1.g_R == 0);
  CHECK(c1.omega_size == 50);

  const auto c2 = count_parameters(9, 1, 4, 1);
  CHECK(c2.omega_size == 6); // 9 - 5 + 2 = 2m for m=3

  const auto c3 = count_parameters(5, 1, 0, 1);
  CHECK(c3.omega_size == 6);

  // Q(R) = n(R) - L(R) - G(R) by construction
  const auto c4 = count_parameters(9, 1, 4, 3);
  CHECK(c4.q_R == c4.n_R - c4.l_R - c4.g_R);

  CHECK_THROWS(count_parameters(3, 3, 0, 1));
  CHECK_THROWS(count_parameters(5, 0, 1, 1));
  CHECK_THROWS(count_parameters(5, 1, 0, 0));
}

TEST_CASE("concatenate: R=1 reproduces the base code") {
  for (const char *name : {"steane", "four_two_two"}) {
    const auto code = catalog(name);
    const auto cc = concatenate(code, 1);
    CHECK(cc.n_total == code.n);
    CHECK(cc.per_level_stabilizers.size() == 1);
    CHECK(cc.per_level_stabilizers[0].size() == code.q_count());
    CHECK(cc.top_logicals.size() == code.k);
  }
  const auto steane = concatenate(catalog("steane"), 1);
  CHECK(steane.total_stabilizer_count() + 2 * steane.top_logicals.size() == 8);
}

TEST_CASE("concatenate: structural counts match count_parameters") {
  struct Case {
    const char *name;
    std::size_t param, levels;
  };
  for (const auto &tc : {Case{"steane", 0, 2}, Case{"repetition", 3, 2},
                         Case{"repetition", 3, 3}}) {
    CAPTURE(tc.name);
    CAPTURE(tc.levels);
    const auto code = catalog(tc.name, tc.param);
    const auto cc = concatenate(code, tc.levels);
    const auto counts = count_parameters(code.n, 1, 0, tc.levels);
    CHECK(BigInt(cc.n_total) == counts.n_R);
    CHECK(BigInt(cc.total_stabilizer_count()) == counts.q_R);

    // the union of all levels plus top logicals is GF(2)-independent
    std::vector<BitVec> rows;
    for (const auto &lvl : cc.per_level_stabilizers)
      for (const auto &g : lvl.generators())
        rows.push_back(g.symplectic_row());
    for (const auto &pr : cc.top_logicals) {
      rows.push_back(pr.x.symplectic_row());
      rows.push_back(pr.z.symplectic_row());
    }
    CHECK(BigInt(gf2::rank(rows, 2 * cc.n_total)) == counts.omega_size);
  }
  const auto cc = concatenate(catalog("steane"), 2);
  CHECK(cc.n_total == 49);
  CHECK(cc.total_stabilizer_count() == 48);
}

TEST_CASE("concatenate: levels commute upward, logicals are detected") {
  const auto cc = concatenate(catalog("repetition", 3), 2);
  // level-q stabilizers commute with all level-q' >= q stabilizers
  for (std::size_t q = 0; q < cc.per_level_stabilizers.size(); ++q)
    for (std::size_t q2 = q; q2 < cc.per_level_stabilizers.size(); ++q2)
      for (const auto &a : cc.per_level_stabilizers[q].generators())
        for (const auto &b : cc.per_level_stabilizers[q2].generators())
          CHECK(commutes(a, b));

  // a level-(q-1) logical, lifted into a level-q block, anticommutes with
  // at least one level-q stabilizer generator; the repetition code does
  // not detect phase errors, so only its X logical qualifies
  const auto base = catalog("repetition", 3);
  {
    std::vector<std::size_t> map = {0, 1, 2};
    const auto lifted = base.logicals[0].x.embed(9, map);
    bool detected = false;
    for (const auto &s : cc.per_level_stabilizers[1].generators())
      if (!commutes(lifted, s))
        detected = true;
    CHECK(detected);
  }
}

TEST_CASE("concatenate: steane level-1 logicals anticommute with level 2") {
  const auto base = catalog("steane");
  const auto cc = concatenate(base, 2);
  for (std::size_t blk = 0; blk < 7; ++blk) {
    std::vector<std::size_t> map(7);
    for (std::size_t t = 0; t < 7; ++t)
      map[t] = blk * 7 + t;
    for (const auto &lg : {base.logicals[0].x, base.logicals[0].z}) {
      const auto lifted = lg.embed(49, map);
      bool detected = false;
      for (const auto &s : cc.per_level_stabilizers[1].generators())
        if (!commutes(lifted, s))
          detected = true;
      CHECK(detected);
    }
  }
}

TEST_CASE("concatenate rejects unsupported shapes") {
  CHECK_THROWS(concatenate(catalog("four_two_two"), 2)); // k = 2
  CHECK_THROWS(concatenate(catalog("bacon_shor", 3), 2)); // r > 0
  CHECK_THROWS(concatenate(catalog("steane"), 0));
}

TEST_CASE("code file format round-trips the catalog") {
  for (const auto &code : catalog_all()) {
    CAPTURE(code.name);
    const auto text = format_code_file(code);
    const auto back = parse_code_file(text);
    CHECK(back.n == code.n);
    CHECK(back.k == code.k);
    CHECK(back.r == code.r);
    CHECK(back.d == code.d);
    CHECK(back.name == code.name);
    REQUIRE(back.stabilizers.size() == code.stabilizers.size());
    for (std::size_t i = 0; i < code.stabilizers.size(); ++i)
      CHECK(back.stabilizers[i] == code.stabilizers[i]);
    REQUIRE(back.logicals.size() == code.logicals.size());
    for (std::size_t i = 0; i < code.logicals.size(); ++i) {
      CHECK(back.logicals[i].x == code.logicals[i].x);
      CHECK(back.logicals[i].z == code.logicals[i].z);
    }
    REQUIRE(back.gauges.size() == code.gauges.size());
    for (std::size_t i = 0; i < code.gauges.size(); ++i) {
      CHECK(back.gauges[i].x == code.gauges[i].x);
      CHECK(back.gauges[i].z == code.gauges[i].z);
    }
  }
}

TEST_CASE("code file parser embeds the validation report on bad input") {
  const std::string bad = "[[3,1,0,1]] broken\n"
                          "S:\n"
                          "ZZI\n"
                          "XII\n" // anticommutes with a would-be logical
                          "LX:\n"
                          "XXX\n"
                          "LZ:\n"
                          "ZII\n";
  try {
    parse_code_file(bad);
    FAIL("expected rejection");
  } catch (const std::invalid_argument &e) {
    const std::string msg = e.what();
    CHECK(msg.find("validation") != std::string::npos);
  }
  CHECK_THROWS(parse_code_file(std::string("not a header")));
}
