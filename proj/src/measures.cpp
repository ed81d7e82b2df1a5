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

#include "qclone/measures.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace qclone {
namespace {

using Complex = std::complex<double>;

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

// Bit of `qubit` (0 = leftmost) in a 3-qubit basis index.
int bit_of(int index, int qubit) { return (index >> (2 - qubit)) & 1; }

// Reduction of a 3-qubit pure state onto the ordered qubit pair (q1, q2).
Eigen::Matrix4cd reduce_to_pair(const PureThreeQubitState& state, int q1, int q2) {
  const int traced = 3 - q1 - q2;
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  for (int i = 0; i < 8; ++i) {
    for (int k = 0; k < 8; ++k) {
      if (bit_of(i, traced) != bit_of(k, traced)) continue;
      const int row = 2 * bit_of(i, q1) + bit_of(i, q2);
      const int col = 2 * bit_of(k, q1) + bit_of(k, q2);
      rho(row, col) += state.amplitude(i) * std::conj(state.amplitude(k));
    }
  }
  return rho;
}

Eigen::Matrix2cd reduce_to_single(const PureThreeQubitState& state, int q) {
  Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
  for (int i = 0; i < 8; ++i) {
    for (int k = 0; k < 8; ++k) {
      bool match = true;
      for (int other = 0; other < 3; ++other) {
        if (other != q && bit_of(i, other) != bit_of(k, other)) match = false;
      }
      if (!match) continue;
      rho(bit_of(i, q), bit_of(k, q)) += state.amplitude(i) * std::conj(state.amplitude(k));
    }
  }
  return rho;
}

Eigen::Matrix4cd spin_flip_matrix() {
  // sigma_y (x) sigma_y
  Eigen::Matrix4cd flip = Eigen::Matrix4cd::Zero();
  flip(0, 3) = -1.0;
  flip(1, 2) = 1.0;
  flip(2, 1) = 1.0;
  flip(3, 0) = -1.0;
  return flip;
}


Eigen::Matrix<Complex, 8, 8> three_qubit_pauli(int p0, int p1, int p2) {
  // 1 = X, 2 = Y
  Eigen::Matrix2cd pauli[3];
  pauli[1] << Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0);
  pauli[2] << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  Eigen::Matrix<Complex, 8, 8> op;
  const int choice[3] = {p0, p1, p2};
  for (int row = 0; row < 8; ++row) {
    for (int col = 0; col < 8; ++col) {
      Complex value(1, 0);
      for (int q = 0; q < 3; ++q) {
        value *= pauli[choice[q]](bit_of(row, q), bit_of(col, q));
      }
      op(row, col) = value;
    }
  }
  return op;
}

}  // namespace

ConcurrenceValue concurrence_x_form(const XFormTwoQubitState& state) {
  ConcurrenceValue result;
  const Rational outer_product = state.a() * state.e();
  result.exact_zero =
      (state.c().squared() - RadicalSum(outer_product)).sign() <= 0;
  if (result.exact_zero) {
    result.value = 0.0;
    result.exact = Rational(0);
    return result;
  }
  if (state.c().is_rational()) {
    if (const auto root = outer_product.sqrt_exact()) {
      const Rational exact = Rational(2) * (state.c().as_rational().abs() - *root);
      result.exact = exact;
      result.value = exact.to_double();
      return result;
    }
  }
  result.value = clamp01(2.0 * (std::abs(state.c().to_double()) -
                                std::sqrt(outer_product.to_double())));
  return result;
}

double eof_from_concurrence(double concurrence) {
  if (!(concurrence >= 0.0 && concurrence <= 1.0)) {
    throw std::domain_error("eof_from_concurrence: concurrence must be in [0, 1]");
  }
  const double x = (1.0 + std::sqrt(1.0 - concurrence * concurrence)) / 2.0;
  auto entropy_term = [](double p) {
    return p > 0.0 ? -p * std::log2(p) : 0.0;
  };
  return entropy_term(x) + entropy_term(1.0 - x);
}

double clone_ancilla_concurrence_closed(long m_outputs) {
  if (m_outputs < 2) {
    throw std::domain_error("clone_ancilla_concurrence_closed: M >= 2 required");
  }
  const double m = static_cast<double>(m_outputs);
  return ((m + 2.0) / m - std::sqrt((m - 2.0) / m)) / 3.0;
}

double wootters_concurrence(const Eigen::Matrix4cd& rho) {
  constexpr double tolerance = 1e-10;
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tolerance) {
    throw std::invalid_argument("wootters_concurrence: matrix is not Hermitian");
  }
  if (std::abs(rho.trace().real() - 1.0) > tolerance ||
      std::abs(rho.trace().imag()) > tolerance) {
    throw std::invalid_argument("wootters_concurrence: trace is not 1");
  }
  const Eigen::Matrix4cd hermitian = (rho + rho.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> spectral(hermitian);
  if (spectral.eigenvalues().minCoeff() < -tolerance) {
    throw std::invalid_argument("wootters_concurrence: matrix is not positive semidefinite");
  }

  // The roots are the singular values of conj(sqrt(rho)) * flip * sqrt(rho):
  // its Gram matrix is sqrt(rho) flip conj(rho) flip sqrt(rho), which shares
  // the spectrum of rho flip conj(rho) flip. Singular values stay accurate
  // in absolute terms, so vanishing roots do not pick up sqrt(eps) noise.
  Eigen::Vector4d clamped = spectral.eigenvalues().cwiseMax(0.0);
  const double floor = clamped.maxCoeff() * 1e-14;
  for (int i = 0; i < 4; ++i) {
    if (clamped(i) < floor) clamped(i) = 0.0;
  }
  const Eigen::Matrix4cd sqrt_rho = spectral.eigenvectors() *
                                    clamped.cwiseSqrt().asDiagonal() *
                                    spectral.eigenvectors().adjoint();
  const Eigen::Matrix4cd flipped = sqrt_rho.conjugate() * spin_flip_matrix() * sqrt_rho;
  Eigen::JacobiSVD<Eigen::Matrix4cd> svd(flipped);
  const Eigen::Vector4d roots = svd.singularValues();  // descending
  return std::max(0.0, roots(0) - roots(1) - roots(2) - roots(3));
}

double three_tangle(const PureThreeQubitState& state) {
  const Eigen::Matrix2cd rho_first = reduce_to_single(state, 0);
  const double c_one_rest_sq = 4.0 * rho_first.determinant().real();
  const double c01 = wootters_concurrence(reduce_to_pair(state, 0, 1));
  const double c02 = wootters_concurrence(reduce_to_pair(state, 0, 2));
  return clamp01(c_one_rest_sq - c01 * c01 - c02 * c02);
}

double tangle_sum(const PureThreeQubitState& state) {
  const double c01 = wootters_concurrence(reduce_to_pair(state, 0, 1));
  const double c02 = wootters_concurrence(reduce_to_pair(state, 0, 2));
  const double c12 = wootters_concurrence(reduce_to_pair(state, 1, 2));
  return c01 * c01 + c02 * c02 + c12 * c12;
}

PptVerdict ppt_three_clone(const ThreeCloneMixture& mixture) {
  PptVerdict verdict;
  if (mixture.p1() * mixture.p1() > Rational(3) * mixture.p0() * mixture.p2()) {
    verdict.is_npt = true;
    verdict.witness = PptWitness::p1_squared_gt_3p0p2;
  } else if (mixture.p2() * mixture.p2() > Rational(3) * mixture.p1() * mixture.p3()) {
    verdict.is_npt = true;
    verdict.witness = PptWitness::p2_squared_gt_3p1p3;
  }
  return verdict;
}

double mermin_value(const PureThreeQubitState& state) {
  Eigen::Matrix<Complex, 8, 1> psi;
  for (int i = 0; i < 8; ++i) psi(i) = state.amplitude(i);
  const Eigen::Matrix<Complex, 8, 8> mermin_op =
      three_qubit_pauli(1, 1, 1) - three_qubit_pauli(1, 2, 2) -
      three_qubit_pauli(2, 1, 2) - three_qubit_pauli(2, 2, 1);
  return (psi.adjoint() * mermin_op * psi)(0).real();
}

}  // namespace qclone
