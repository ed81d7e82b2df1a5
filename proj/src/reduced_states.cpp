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

#include "qclone/reduced_states.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qclone {
namespace {

int standard_index(const std::string& label) {
  if (label.size() != 2 || (label[0] != '0' && label[0] != '1') ||
      (label[1] != '0' && label[1] != '1')) {
    throw std::invalid_argument("XFormTwoQubitState: bad basis label '" + label + "'");
  }
  return 2 * (label[0] - '0') + (label[1] - '0');
}

}  // namespace

XFormTwoQubitState::XFormTwoQubitState(std::array<std::string, 4> basis_labels,
                                       Rational a, Rational b, RadicalSum c,
                                       Rational d, Rational e)
    : basis_labels_(std::move(basis_labels)),
      a_(std::move(a)),
      b_(std::move(b)),
      d_(std::move(d)),
      e_(std::move(e)),
      c_(std::move(c)) {
  if (a_ + b_ + d_ + e_ != Rational(1)) {
    throw std::invalid_argument("XFormTwoQubitState: trace != 1");
  }
  if (a_.sign() < 0 || b_.sign() < 0 || d_.sign() < 0 || e_.sign() < 0) {
    throw std::invalid_argument("XFormTwoQubitState: negative diagonal entry");
  }
  if ((c_.squared() - RadicalSum(b_ * d_)).sign() > 0) {
    throw std::invalid_argument("XFormTwoQubitState: c^2 > b*d (not positive semidefinite)");
  }
}

Eigen::Matrix4cd XFormTwoQubitState::to_matrix() const {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  const std::array<Rational, 4> diagonal{a_, b_, d_, e_};
  for (int i = 0; i < 4; ++i) {
    m(standard_index(basis_labels_[i]), standard_index(basis_labels_[i])) =
        diagonal[i].to_double();
  }
  const int row = standard_index(basis_labels_[1]);
  const int col = standard_index(basis_labels_[2]);
  m(row, col) = c_.to_double();
  m(col, row) = c_.to_double();
  return m;
}

ThreeCloneMixture::ThreeCloneMixture(Rational p0, Rational p1, Rational p2,
                                     Rational p3)
    : p0_(std::move(p0)), p1_(std::move(p1)), p2_(std::move(p2)), p3_(std::move(p3)) {
  if (p0_.sign() < 0 || p1_.sign() < 0 || p2_.sign() < 0 || p3_.sign() < 0) {
    throw std::invalid_argument("ThreeCloneMixture: negative weight");
  }
  if (p0_ + p1_ + p2_ + p3_ != Rational(1)) {
    throw std::invalid_argument("ThreeCloneMixture: weights do not sum to 1");
  }
}

Eigen::MatrixXcd ThreeCloneMixture::to_matrix() const {
  Eigen::VectorXcd w100 = Eigen::VectorXcd::Zero(8);
  w100(0b001) = w100(0b010) = w100(0b100) = 1.0 / std::sqrt(3.0);
  Eigen::VectorXcd w110 = Eigen::VectorXcd::Zero(8);
  w110(0b011) = w110(0b101) = w110(0b110) = 1.0 / std::sqrt(3.0);

  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(8, 8);
  m(0, 0) = p0_.to_double();
  m += p1_.to_double() * (w100 * w100.adjoint());
  m += p2_.to_double() * (w110 * w110.adjoint());
  m(7, 7) = p3_.to_double();
  return m;
}

PureThreeQubitState::PureThreeQubitState(std::array<std::complex<double>, 8> amplitudes)
    : amplitudes_(amplitudes) {
  double norm_sq = 0.0;
  for (const auto& amplitude : amplitudes_) norm_sq += std::norm(amplitude);
  if (std::abs(norm_sq - 1.0) > 1e-12) {
    throw std::invalid_argument("PureThreeQubitState: state is not normalized");
  }
}

XFormTwoQubitState two_clone_state(const CloneSpec& spec) {
  const long m = spec.m_outputs;
  if (m < 2) {
    throw std::domain_error("two_clone_state: no pair of clones exists for M < 2");
  }
  const Rational pair_count(mpz_class(m) * (m - 1));
  const std::vector<Rational> weights = output_state(spec).amp_sq;
  Rational a(0), c(0), e(0);
  for (int j = 0; j <= m - spec.n_inputs; ++j) {
    const Rational& w = weights[j];
    a += w * Rational(mpz_class(m - j) * (m - j - 1)) / pair_count;
    c += w * Rational(mpz_class(j) * (m - j)) / pair_count;
    e += w * Rational(mpz_class(j) * (j - 1)) / pair_count;
  }
  return XFormTwoQubitState({"00", "01", "10", "11"}, a, c, RadicalSum(c), c, e);
}

XFormTwoQubitState clone_ancilla_state(const CloneSpec& spec) {
  const long n = spec.n_inputs;
  const long m = spec.m_outputs;
  if (m < 2) {
    throw std::domain_error("clone_ancilla_state: no ancilla qubit exists for M < 2");
  }
  const Rational pair_count(mpz_class(m) * (m - 1));
  const std::vector<Rational> weights = output_state(spec).amp_sq;
  Rational a(0), b(0), d(0), e(0);
  RadicalSum c;
  for (int j = 0; j <= m - n; ++j) {
    const Rational& w = weights[j];
    a += w * Rational(mpz_class(j) * (m - j)) / pair_count;
    b += w * Rational(mpz_class(m - j) * (m - 1 - j)) / pair_count;
    d += w * Rational(mpz_class(j) * j) / pair_count;
    e += w * Rational(mpz_class(j) * (m - 1 - j)) / pair_count;
    if (j <= m - n - 1) {
      // cross term between excitation numbers j and j+1:
      //   amp_j amp_{j+1} (j+1) sqrt((M-j)(M-1-j)) / (M(M-1))
      // rewritten with rational weight w = amp_j^2 so that the radicand
      // is the small integer (M-N-j)(M-1-j).
      const RadicalSum root = RadicalSum::sqrt_of_product(
          {static_cast<std::uint64_t>(m - n - j), static_cast<std::uint64_t>(m - 1 - j)});
      c += RadicalSum(w * Rational(j + 1) / pair_count) * root;
    }
  }
  return XFormTwoQubitState({"01", "00", "11", "10"}, a, b, c, d, e);
}

ThreeCloneMixture three_clone_state(const CloneSpec& spec) {
  const long n = spec.n_inputs;
  const long m = spec.m_outputs;
  if (m < 3) {
    throw std::domain_error("three_clone_state: no triple of clones exists for M < 3");
  }
  const std::vector<Rational> weights = output_state(spec).amp_sq;
  Rational p0(0), p1(0), p2(0), p3(0);
  for (int j = 0; j <= m - n; ++j) {
    const Rational w = weights[j] / Rational(binomial(m, j));
    p0 += w * Rational(binomial(m - 3, j));
    p1 += w * Rational(binomial(m - 3, j - 1) * 3);
    p2 += w * Rational(binomial(m - 3, j - 2) * 3);
    p3 += w * Rational(binomial(m - 3, j - 3));
  }
  return ThreeCloneMixture(p0, p1, p2, p3);
}

Rational single_clone_fidelity(const CloneSpec& spec) {
  const long m = spec.m_outputs;
  const std::vector<Rational> weights = output_state(spec).amp_sq;
  Rational fidelity(0);
  for (int j = 0; j <= m - spec.n_inputs; ++j) {
    fidelity += weights[j] * Rational(m - j, m);
  }
  return fidelity;
}

PureThreeQubitState one_to_two_pure_state() {
  std::array<std::complex<double>, 8> amplitudes{};
  amplitudes[0b000] = std::sqrt(2.0 / 3.0);
  amplitudes[0b011] = std::sqrt(1.0 / 6.0);
  amplitudes[0b101] = std::sqrt(1.0 / 6.0);
  return PureThreeQubitState(amplitudes);
}

}  // namespace qclone
