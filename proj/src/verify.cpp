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

#include "qclone/verify.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "qclone/measures.hpp"
#include "qclone/oracle.hpp"
#include "qclone/reduced_states.hpp"

namespace qclone {
namespace {

struct Accumulator {
  double max_deviation = 0.0;
  std::string worst_case;

  void record(double deviation, int n, int m) {
    if (deviation >= max_deviation) {
      max_deviation = deviation;
      worst_case = "(n=" + std::to_string(n) + " m=" + std::to_string(m) + ")";
    }
  }
};

double entrywise_distance(const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y) {
  return (x - y).cwiseAbs().maxCoeff();
}

// Squared singular values of the clone/ancilla bipartition, descending.
std::vector<double> schmidt_spectrum(const oracle::DenseStateVector& state, int m) {
  const long rows = 1L << m;
  const long cols = 1L << (m - 1);
  Eigen::MatrixXcd reshaped(rows, cols);
  for (long r = 0; r < rows; ++r) {
    reshaped.row(r) = state.amplitudes.segment(r * cols, cols).transpose();
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(reshaped);
  std::vector<double> spectrum;
  for (long i = 0; i < svd.singularValues().size(); ++i) {
    const double sv = svd.singularValues()(i);
    spectrum.push_back(sv * sv);
  }
  std::sort(spectrum.begin(), spectrum.end(), std::greater<>());
  return spectrum;
}

}  // namespace

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const VerificationCheck& c) { return c.pass; });
}

VerificationReport run_oracle_verification(int m_cap, int trials, unsigned seed) {
  if (m_cap < 1 || 2 * m_cap - 1 > oracle::kMaxQubits) {
    throw std::domain_error("run_oracle_verification: m_cap must be between 1 and 7");
  }
  if (trials < 1) {
    throw std::domain_error("run_oracle_verification: trials must be positive");
  }

  Accumulator two_clone, clone_ancilla, three_clone, fidelity, schmidt,
      permutation, ppt_margin, universality;

  for (int m = 1; m <= m_cap; ++m) {
    for (int n = 1; n <= m; ++n) {
      const CloneSpec spec(n, m);
      const oracle::DenseStateVector state = oracle::full_output_state(spec);

      if (m >= 2) {
        std::vector<int> first_pair{0, 1};
        const auto rho_pair = oracle::partial_trace(state, first_pair);
        two_clone.record(
            entrywise_distance(two_clone_state(spec).to_matrix(), rho_pair.entries()),
            n, m);

        const auto rho_ca = oracle::partial_trace(state, {0, m});
        clone_ancilla.record(
            entrywise_distance(clone_ancilla_state(spec).to_matrix(), rho_ca.entries()),
            n, m);

        // symmetry: every clone pair and every (clone, ancilla-qubit)
        // choice must reproduce the same reduced states
        for (int i = 0; i < m; ++i) {
          for (int k = i + 1; k < m; ++k) {
            const auto rho_ik = oracle::partial_trace(state, {i, k});
            permutation.record(
                entrywise_distance(rho_ik.entries(), rho_pair.entries()), n, m);
          }
          for (int k = m; k < 2 * m - 1; ++k) {
            const auto rho_ik = oracle::partial_trace(state, {i, k});
            permutation.record(
                entrywise_distance(rho_ik.entries(), rho_ca.entries()), n, m);
          }
        }
      }

      if (m >= 3) {
        const auto rho_triple = oracle::partial_trace(state, {0, 1, 2});
        three_clone.record(
            entrywise_distance(three_clone_state(spec).to_matrix(),
                               rho_triple.entries()),
            n, m);

        // exact verdict vs the sign of the numerically transposed matrix
        const double min_eig = oracle::partial_transpose_min_eig(rho_triple, 0);
        const bool exact_npt = ppt_three_clone(three_clone_state(spec)).is_npt;
        const double violation =
            exact_npt ? std::max(0.0, min_eig + 1e-10) : std::max(0.0, -1e-10 - min_eig);
        ppt_margin.record(violation, n, m);
      }

      const auto rho_single = oracle::partial_trace(state, {0});
      fidelity.record(std::abs(rho_single.entries()(0, 0).real() -
                               single_clone_fidelity(spec).to_double()),
                      n, m);

      if (m >= 1) {
        const auto spectrum = schmidt_spectrum(state, m);
        const auto analytic = output_state(spec);
        double deviation = 0.0;
        for (std::size_t i = 0; i < spectrum.size(); ++i) {
          const double expected = i < analytic.amp_sq.size()
                                      ? analytic.amp_sq[i].to_double()
                                      : 0.0;
          deviation = std::max(deviation, std::abs(spectrum[i] - expected));
        }
        schmidt.record(deviation, n, m);
      }

      universality.record(oracle::universality_check(spec, trials, seed + m * 31 + n),
                          n, m);
    }
  }

  VerificationReport report;
  report.m_cap = m_cap;
  report.trials = trials;
  auto add = [&report](const std::string& name, const Accumulator& acc,
                       double tolerance) {
    report.checks.push_back(VerificationCheck{
        name, acc.max_deviation, tolerance, acc.worst_case,
        acc.max_deviation <= tolerance});
  };
  add("two_clone_vs_partial_trace", two_clone, 1e-12);
  add("clone_ancilla_vs_partial_trace", clone_ancilla, 1e-12);
  add("three_clone_vs_partial_trace", three_clone, 1e-12);
  add("single_clone_fidelity_vs_partial_trace", fidelity, 1e-12);
  add("schmidt_spectrum_vs_amp_sq", schmidt, 1e-12);
  add("clone_permutation_symmetry", permutation, 1e-12);
  add("ppt_sign_consistency", ppt_margin, 0.0);
  add("fidelity_input_independence", universality, 1e-10);
  return report;
}

}  // namespace qclone
