// Copyright 2026 The qclone developers.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the process exits with the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "qclone/measures.hpp"
#include "qclone/oracle.hpp"
#include "qclone/report.hpp"
#include "qclone/verify.hpp"

namespace {

using qclone::CloneSpec;
using qclone::Rational;

struct Criterion {
  std::string name;
  std::vector<std::string> failures;

  void expect(bool condition, const std::string& description) {
    if (!condition) failures.push_back(description);
  }
};

int run(Criterion& criterion, int index, std::chrono::steady_clock::time_point started) {
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  const bool pass = criterion.failures.empty();
  std::printf("[%s] criterion %d: %s (%lld ms)", pass ? "PASS" : "FAIL", index,
              criterion.name.c_str(), static_cast<long long>(elapsed.count()));
  if (!pass) {
    std::printf(" (%zu failures; first: %s)", criterion.failures.size(),
                criterion.failures.front().c_str());
  }
  std::printf("\n");
  std::fflush(stdout);
  return pass ? 0 : 1;
}

std::chrono::steady_clock::time_point now() { return std::chrono::steady_clock::now(); }

int benchmark_one_to_two() {
  const auto started = now();
  Criterion criterion{"1->2 benchmark: concurrences, EoF, fidelity, tangle", {}};

  const auto clones = qclone::concurrence_x_form(qclone::two_clone_state(CloneSpec(1, 2)));
  criterion.expect(clones.exact.has_value() && *clones.exact == Rational(1, 3),
                   "two-clone concurrence != 1/3 exactly");

  const auto mixed =
      qclone::concurrence_x_form(qclone::clone_ancilla_state(CloneSpec(1, 2)));
  criterion.expect(mixed.exact.has_value() && *mixed.exact == Rational(2, 3),
                   "clone-ancilla concurrence != 2/3 exactly");

  criterion.expect(
      std::abs(qclone::eof_from_concurrence(clones.value) - 0.1873) <= 5e-4,
      "EoF(1/3) misses 0.1873 +- 5e-4");
  criterion.expect(
      std::abs(qclone::eof_from_concurrence(mixed.value) - 0.55) <= 5e-3,
      "EoF(2/3) misses 0.55 +- 5e-3");

  criterion.expect(qclone::single_clone_fidelity(CloneSpec(1, 2)) == Rational(5, 6),
                   "fidelity != 5/6 exactly");

  const auto pure = qclone::one_to_two_pure_state();
  criterion.expect(qclone::three_tangle(pure) <= 1e-12, "three-tangle exceeds 1e-12");
  criterion.expect(std::abs(qclone::tangle_sum(pure) - 1.0) <= 1e-10,
                   "tangle sum misses 1 +- 1e-10");
  return run(criterion, 1, started);
}

int separability_thresholds() {
  const auto started = now();
  Criterion criterion{"separability thresholds for two clones", {}};
  auto exact_zero = [](int n, int m) {
    return qclone::concurrence_x_form(qclone::two_clone_state(CloneSpec(n, m))).exact_zero;
  };
  for (int m = 3; m <= 100; ++m) {
    criterion.expect(exact_zero(1, m), "(1," + std::to_string(m) + ") not exactly zero");
  }
  for (int m = 4; m <= 100; ++m) {
    criterion.expect(exact_zero(2, m), "(2," + std::to_string(m) + ") not exactly zero");
  }
  for (int m = 3; m <= 100; ++m) {
    criterion.expect(exact_zero(m - 2, m),
                     "(" + std::to_string(m - 2) + "," + std::to_string(m) +
                         ") not exactly zero");
  }
  for (int n = 1; n <= 99; ++n) {
    criterion.expect(!exact_zero(n, n + 1),
                     "(" + std::to_string(n) + "," + std::to_string(n + 1) +
                         ") not strictly positive");
  }
  return run(criterion, 2, started);
}

int clone_ancilla_curve() {
  const auto started = now();
  Criterion criterion{"clone-ancilla concurrence curve", {}};
  for (long m = 2; m <= 1000; ++m) {
    const double from_state =
        qclone::concurrence_x_form(qclone::clone_ancilla_state(CloneSpec(1, m))).value;
    const double closed = qclone::clone_ancilla_concurrence_closed(m);
    criterion.expect(std::abs(from_state - closed) <= 1e-12,
                     "closed form mismatch at M=" + std::to_string(m));
  }
  bool positive = true;
  for (long long m = 2; m <= 1000000; ++m) {
    if (!((m + 2) * (m + 2) > m * (m - 2))) positive = false;
  }
  criterion.expect(positive, "(M+2)^2 > M(M-2) fails below 10^6");

  const auto rows = qclone::parse_csv(
      qclone::render_fig1(1000, qclone::OutputFormat::csv));
  double previous = 1.0;
  bool decreasing = true;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double value = std::stod(rows[i][1]);
    if (!(value < previous)) decreasing = false;
    previous = value;
  }
  criterion.expect(decreasing, "emitted series is not monotone decreasing");
  return run(criterion, 3, started);
}

int tripartite_structure() {
  const auto started = now();
  Criterion criterion{"three-clone mixtures and partial-transpose verdicts", {}};

  const auto mix13 = qclone::three_clone_state(CloneSpec(1, 3));
  criterion.expect(mix13.p0() == Rational(1, 2) && mix13.p1() == Rational(1, 3) &&
                       mix13.p2() == Rational(1, 6) && mix13.p3() == Rational(0),
                   "weights of (1,3) are not (1/2,1/3,1/6,0)");
  const auto mix23 = qclone::three_clone_state(CloneSpec(2, 3));
  criterion.expect(mix23.p0() == Rational(3, 4) && mix23.p1() == Rational(1, 4) &&
                       mix23.p2() == Rational(0) && mix23.p3() == Rational(0),
                   "weights of (2,3) are not (3/4,1/4,0,0)");

  auto npt = [](int n, int m) {
    return qclone::ppt_three_clone(qclone::three_clone_state(CloneSpec(n, m))).is_npt;
  };
  for (int n = 2; n <= 99; ++n) {
    criterion.expect(npt(n, n + 1), "(" + std::to_string(n) + "," +
                                        std::to_string(n + 1) + ") not NPT");
  }
  for (int n = 1; n <= 98; ++n) {
    criterion.expect(npt(n, n + 2), "(" + std::to_string(n) + "," +
                                        std::to_string(n + 2) + ") not NPT");
  }
  criterion.expect(npt(1, 3), "(1,3) not NPT");
  criterion.expect(npt(1, 4), "(1,4) not NPT");
  for (int m = 5; m <= 100; ++m) {
    criterion.expect(!npt(1, m), "(1," + std::to_string(m) + ") not PPT");
  }
  return run(criterion, 4, started);
}

int oracle_equivalence() {
  const auto started = now();
  Criterion criterion{"brute-force oracle equivalence up to M = 7", {}};
  const auto report = qclone::run_oracle_verification(7, 100);
  for (const auto& check : report.checks) {
    criterion.expect(check.pass, check.name + " deviation " +
                                     qclone::format_decimal(check.max_deviation) +
                                     " at " + check.worst_case);
  }
  return run(criterion, 5, started);
}

int fidelity_law() {
  const auto started = now();
  Criterion criterion{"single-clone fidelity law (2M+1)/(3M)", {}};
  for (long m = 1; m <= 100; ++m) {
    criterion.expect(
        qclone::single_clone_fidelity(CloneSpec(1, m)) == Rational(2 * m + 1, 3 * m),
        "law fails at M=" + std::to_string(m));
  }
  criterion.expect(qclone::single_clone_fidelity(CloneSpec(1, 2)) == Rational(5, 6),
                   "M=2 value is not 5/6");
  for (int m = 1; m <= 7; ++m) {
    const auto state = qclone::oracle::full_output_state(CloneSpec(1, m));
    const auto rho = qclone::oracle::partial_trace(state, {0});
    criterion.expect(std::abs(rho.entries()(0, 0).real() -
                              qclone::single_clone_fidelity(CloneSpec(1, m)).to_double()) <=
                         1e-12,
                     "oracle disagrees at M=" + std::to_string(m));
  }
  return run(criterion, 6, started);
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  int failures = 0;
  failures += benchmark_one_to_two();
  failures += separability_thresholds();
  failures += clone_ancilla_curve();
  failures += tripartite_structure();
  failures += oracle_equivalence();
  failures += fidelity_law();
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  std::printf("%d/6 criteria passed in %lld ms\n", 6 - failures,
              static_cast<long long>(elapsed.count()));
  return failures;
}
