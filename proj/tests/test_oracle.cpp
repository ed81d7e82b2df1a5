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

#include <doctest.h>

#include <cmath>

#include "qclone/measures.hpp"
#include "qclone/oracle.hpp"
#include "qclone/reduced_states.hpp"
#include "qclone/verify.hpp"

using qclone::CloneSpec;
using qclone::Rational;
namespace oracle = qclone::oracle;

TEST_CASE("dicke vectors") {
  const auto half = oracle::dicke_vector(2, 1);
  CHECK(half.amplitudes.size() == 4);
  CHECK(std::abs(half.amplitudes(0b01).real() - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(half.amplitudes(0b10).real() - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(half.amplitudes(0b00)) == 0.0);

  const auto ground = oracle::dicke_vector(3, 0);
  CHECK(ground.amplitudes(0b000) == std::complex<double>(1.0, 0.0));

  const auto wbar = oracle::dicke_vector(3, 2);
  for (int index : {0b011, 0b101, 0b110}) {
    CHECK(std::abs(wbar.amplitudes(index).real() - 1.0 / std::sqrt(3.0)) < 1e-15);
  }

  CHECK_THROWS_AS(oracle::dicke_vector(14, 0), std::length_error);
  CHECK_THROWS_AS(oracle::dicke_vector(3, 4), std::domain_error);
  CHECK_THROWS_AS(oracle::dicke_vector(3, -1), std::domain_error);
}

TEST_CASE("full output state of the 1->2 cloner matches the pure-state form") {
  const auto dense = oracle::full_output_state(CloneSpec(1, 2));
  const auto exact = qclone::one_to_two_pure_state();
  REQUIRE(dense.num_qubits == 3);
  for (int i = 0; i < 8; ++i) {
    CHECK(std::abs(dense.amplitudes(i) - exact.amplitude(i)) < 1e-15);
  }
}

TEST_CASE("identity cloner output is the all-zero product state") {
  for (int n : {1, 2, 4}) {
    const auto dense = oracle::full_output_state(CloneSpec(n, n));
    CHECK(std::abs(dense.amplitudes(0) - std::complex<double>(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(dense.amplitudes.squaredNorm() - 1.0) < 1e-12);
  }
}

TEST_CASE("size cap") {
  CHECK_THROWS_AS(oracle::full_output_state(CloneSpec(1, 8)), std::length_error);
  CHECK_NOTHROW(oracle::full_output_state(CloneSpec(1, 7)));
}

TEST_CASE("partial trace basics") {
  const auto dense = oracle::full_output_state(CloneSpec(1, 2));

  // keeping everything gives the rank-one projector onto the state
  const auto projector = oracle::partial_trace(dense, {0, 1, 2});
  Eigen::MatrixXcd expected = dense.amplitudes * dense.amplitudes.adjoint();
  CHECK((projector.entries() - expected).cwiseAbs().maxCoeff() < 1e-15);

  CHECK_THROWS_AS(oracle::partial_trace(dense, {0, 3}), std::domain_error);
  CHECK_THROWS_AS(oracle::partial_trace(dense, {1, 1}), std::domain_error);
  CHECK_THROWS_AS(oracle::partial_trace(dense, {}), std::domain_error);

  // tracing a density matrix agrees with tracing the state
  const auto via_state = oracle::partial_trace(dense, {0, 1});
  const auto via_matrix = oracle::partial_trace(projector, {0, 1});
  CHECK((via_state.entries() - via_matrix.entries()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("partial traces reproduce the analytic constructors") {
  for (int m = 2; m <= 5; ++m) {
    for (int n = 1; n <= m; ++n) {
      const CloneSpec spec(n, m);
      const auto state = oracle::full_output_state(spec);

      const auto rho_cc = oracle::partial_trace(state, {0, 1});
      CHECK((rho_cc.entries() - qclone::two_clone_state(spec).to_matrix())
                .cwiseAbs()
                .maxCoeff() < 1e-12);

      const auto rho_ca = oracle::partial_trace(state, {0, m});
      CHECK((rho_ca.entries() - qclone::clone_ancilla_state(spec).to_matrix())
                .cwiseAbs()
                .maxCoeff() < 1e-12);

      if (m >= 3) {
        const auto rho_triple = oracle::partial_trace(state, {0, 1, 2});
        CHECK((rho_triple.entries() - qclone::three_clone_state(spec).to_matrix())
                  .cwiseAbs()
                  .maxCoeff() < 1e-12);
      }

      const auto rho_single = oracle::partial_trace(state, {0});
      CHECK(std::abs(rho_single.entries()(0, 0).real() -
                     qclone::single_clone_fidelity(spec).to_double()) < 1e-12);
    }
  }
}

TEST_CASE("any clone pair reduces identically") {
  const auto state = oracle::full_output_state(CloneSpec(2, 4));
  const auto reference = oracle::partial_trace(state, {0, 1});
  for (int i = 0; i < 4; ++i) {
    for (int k = i + 1; k < 4; ++k) {
      const auto rho = oracle::partial_trace(state, {i, k});
      CHECK((rho.entries() - reference.entries()).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("schmidt spectrum equals the squared amplitudes") {
  const CloneSpec spec(2, 4);
  const auto state = oracle::full_output_state(spec);
  // the clone/ancilla split is already bi-orthogonal, so the reduced
  // clone-register spectrum must be the amp_sq list
  const auto rho_clones = oracle::partial_trace(state, {0, 1, 2, 3});
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho_clones.entries());
  std::vector<double> spectrum(solver.eigenvalues().data(),
                               solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(spectrum.begin(), spectrum.end(), std::greater<>());
  const auto weights = qclone::output_state(spec).amp_sq;
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    const double expected = i < weights.size() ? weights[i].to_double() : 0.0;
    CHECK(std::abs(spectrum[i] - expected) < 1e-12);
  }
}

TEST_CASE("partial transpose detects the three-clone entanglement pattern") {
  const auto npt_state = oracle::partial_trace(
      oracle::full_output_state(CloneSpec(1, 3)), {0, 1, 2});
  CHECK(oracle::partial_transpose_min_eig(npt_state, 0) < -1e-6);

  const auto product = oracle::partial_trace(
      oracle::full_output_state(CloneSpec(3, 3)), {0, 1, 2});
  CHECK(oracle::partial_transpose_min_eig(product, 0) > -1e-12);

  const auto ppt_state = oracle::partial_trace(
      oracle::full_output_state(CloneSpec(1, 5)), {0, 1, 2});
  CHECK(oracle::partial_transpose_min_eig(ppt_state, 0) > -1e-10);
}

TEST_CASE("fidelity does not depend on the input state") {
  CHECK(oracle::universality_check(CloneSpec(1, 2), 100) < 1e-10);
  CHECK(oracle::universality_check(CloneSpec(2, 4), 100) < 1e-10);
  CHECK(oracle::universality_check(CloneSpec(3, 3), 50) < 1e-12);
}

TEST_CASE("verification report") {
  const auto report = qclone::run_oracle_verification(3, 25);
  CHECK(report.all_pass());
  CHECK(report.checks.size() == 8);
  CHECK_THROWS_AS(qclone::run_oracle_verification(8), std::domain_error);
  CHECK_THROWS_AS(qclone::run_oracle_verification(3, 0), std::domain_error);
}
