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

#include <omp.h>

#include "slddlab/verifier.hpp"

using namespace sldd;

namespace {

DdgsResult test_omega() {
  const auto code = catalog("repetition", 3);
  return sldd_ddgs(code);
}

} // namespace

TEST_CASE("twirl: OpenMP kernel matches the serial reference") {
  const auto omega = test_omega();
  const auto model = random_noise(3, 1, 2, 1.0, 77);
  const Matrix h = model.assemble();
  const auto [h0_ser, hr_ser] =
      moos_decompose(h, omega, 1, ExecPolicy::serial);
  const auto [h0_par, hr_par] =
      moos_decompose(h, omega, 1, ExecPolicy::parallel);
  CHECK((h0_ser - h0_par).norm() < 1e-13 * h.norm());
  CHECK((hr_ser - hr_par).norm() < 1e-13 * h.norm());
}

TEST_CASE("twirl: parallel kernel is bitwise stable across thread counts") {
  const auto omega = test_omega();
  const auto model = random_noise(3, 1, 2, 1.0, 78);
  const Matrix h = model.assemble();

  const int saved = omp_get_max_threads();
  std::vector<Matrix> results;
  for (int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    auto [h0, hr] = moos_decompose(h, omega, 1, ExecPolicy::parallel);
    results.push_back(std::move(h0));
  }
  omp_set_num_threads(saved);
  CHECK((results[0] - results[1]).norm() == 0.0);
  CHECK((results[0] - results[2]).norm() == 0.0);
}

TEST_CASE("twirl: chunked reduction stays close to the linear sum") {
  // steane SLDD has 2^8 subset products, so chunks really group masks and
  // the parallel kernel's summation order differs from the reference
  const auto omega = sldd_ddgs(catalog("steane"));
  const auto model = random_noise(7, 0, 2, 1.0, 80, 64);
  const Matrix h = model.assemble();
  const auto [h0_ser, hr_ser] =
      moos_decompose(h, omega, 0, ExecPolicy::serial);
  const auto [h0_par, hr_par] =
      moos_decompose(h, omega, 0, ExecPolicy::parallel);
  CHECK((h0_ser - h0_par).norm() < 1e-12 * h.norm());

  const int saved = omp_get_max_threads();
  omp_set_num_threads(2);
  auto [h0_par2, hr_par2] = moos_decompose(h, omega, 0, ExecPolicy::parallel);
  omp_set_num_threads(saved);
  CHECK((h0_par - h0_par2).norm() == 0.0);
}

TEST_CASE("grid evaluation: serial and parallel reports are identical") {
  const auto omega = test_omega();
  const auto model = random_noise(3, 1, 2, 1.0, 79);
  const auto seq = cdd_sequence(omega, 1);
  const auto grid = log_spaced(1e-3, 1e-1, 5);
  const auto code = catalog("repetition", 3);

  const auto ser = decoupling_order_fit(seq, model, omega, grid, code, 0,
                                        ExecPolicy::serial);
  const auto par = decoupling_order_fit(seq, model, omega, grid, code, 0,
                                        ExecPolicy::parallel);
  CHECK(report_to_json(ser) == report_to_json(par));

  const int saved = omp_get_max_threads();
  omp_set_num_threads(3);
  const auto par3 = decoupling_order_fit(seq, model, omega, grid, code, 0,
                                         ExecPolicy::parallel);
  omp_set_num_threads(saved);
  CHECK(report_to_json(par3) == report_to_json(par));
}
