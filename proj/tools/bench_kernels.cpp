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

// Timing harness comparing the serial reference kernels against their
// OpenMP counterparts. Results must agree (spot-checked here); speedups
// depend on the host core count.

#include <chrono>
#include <cstdio>
#include <functional>

#include <omp.h>

#include "slddlab/verifier.hpp"

using namespace sldd;
namespace chrono = std::chrono;

namespace {

double time_ms(const std::function<void()> &fn, int reps) {
  fn(); // warm-up
  const auto t0 = chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i)
    fn();
  const auto t1 = chrono::steady_clock::now();
  return chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

void row(const char *name, double serial_ms, double parallel_ms) {
  std::printf("%-28s %10.3f ms %10.3f ms %8.2fx\n", name, serial_ms,
              parallel_ms, serial_ms / parallel_ms);
}

} // namespace

int main() {
  std::printf("threads available: %d\n\n", omp_get_max_threads());
  std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "openmp",
              "speedup");

  {
    const auto omega = sldd_ddgs(catalog("steane"));
    const auto model = random_noise(7, 0, 2, 1.0, 2024, 64);
    const Matrix h = model.assemble();
    const double ser = time_ms(
        [&] { moos_decompose(h, omega, 0, ExecPolicy::serial); }, 3);
    const double par = time_ms(
        [&] { moos_decompose(h, omega, 0, ExecPolicy::parallel); }, 3);
    row("twirl steane (2^8 masks)", ser, par);
    auto [s0, sr] = moos_decompose(h, omega, 0, ExecPolicy::serial);
    auto [p0, pr] = moos_decompose(h, omega, 0, ExecPolicy::parallel);
    if ((s0 - p0).norm() > 1e-12 * h.norm()) {
      std::printf("MISMATCH in twirl kernels\n");
      return 1;
    }
  }

  {
    const auto code = catalog("repetition", 3);
    const auto omega = sldd_ddgs(code);
    const auto model = random_noise(3, 1, 2, 1.0, 2025);
    const auto seq = cdd_sequence(omega, 1);
    const auto grid = log_spaced(1e-3, 1e-1, 8);
    const double ser = time_ms(
        [&] {
          decoupling_order_fit(seq, model, omega, grid, code, 0,
                               ExecPolicy::serial);
        },
        3);
    const double par = time_ms(
        [&] {
          decoupling_order_fit(seq, model, omega, grid, code, 0,
                               ExecPolicy::parallel);
        },
        3);
    row("order fit rep3 (8 T-points)", ser, par);
  }

  {
    std::vector<PauliOperator> gens;
    for (const char *s : {"XZZ", "ZXI", "IZX", "ZZY"})
      gens.push_back(PauliOperator::parse(s));
    const auto basis = GeneratorSet::from(3, gens);
    const double ser = time_ms(
        [&] { brute_force_minimal_ddgs(basis, 3, 4, false); }, 1);
    const double par = time_ms(
        [&] { brute_force_minimal_ddgs(basis, 3, 4, true); }, 1);
    row("brute force n=3 rank-4", ser, par);
  }

  return 0;
}
