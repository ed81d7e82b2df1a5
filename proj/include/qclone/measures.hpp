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

#pragma once

#include <Eigen/Dense>

#include <optional>

#include "qclone/reduced_states.hpp"

namespace qclone {

// Concurrence of a two-qubit state. The zero/nonzero decision is made by
// exact arithmetic whenever the state comes from the X-form constructors;
// `exact` carries the exact value when it happens to be rational.
struct ConcurrenceValue {
  double value = 0.0;
  bool exact_zero = false;
  std::optional<Rational> exact;
};

enum class PptWitness {
  none,
  p1_squared_gt_3p0p2,
  p2_squared_gt_3p1p3,
};

// Partial-transpose verdict for a three-clone mixture. is_npt = true
// certifies entanglement; is_npt = false means no free tripartite
// entanglement is detected (it does not certify separability). When both
// inequalities hold, the first one is reported as the witness.
struct PptVerdict {
  bool is_npt = false;
  PptWitness witness = PptWitness::none;
};

// Concurrence of an X-form state: 2 max(|c| - sqrt(a*e), 0), where a and
// e are the outer diagonal entries. exact_zero is decided by the exact
// comparison c^2 <= a*e.
ConcurrenceValue concurrence_x_form(const XFormTwoQubitState& state);

// Entanglement of formation as a function of concurrence: the binary
// entropy of (1 + sqrt(1 - C^2))/2, with the convention 0*log2(0) = 0.
double eof_from_concurrence(double concurrence);

// Closed-form clone-ancilla concurrence for one input copy:
//   (1/3) ((M+2)/M - sqrt((M-2)/M)),  M >= 2.
// Strictly positive for every finite M and vanishing as M -> infinity.
double clone_ancilla_concurrence_closed(long m_outputs);

// General two-qubit concurrence (spin-flip construction): the eigenvalues
// of rho (sy(x)sy) conj(rho) (sy(x)sy) give C = max(0, l1 - l2 - l3 - l4)
// with l_i the square roots in decreasing order. Input must be Hermitian,
// unit trace, and positive semidefinite within 1e-10.
double wootters_concurrence(const Eigen::Matrix4cd& rho);

// Residual three-way entanglement of a pure three-qubit state:
//   tau = C^2_{1(23)} - C^2_{12} - C^2_{13}.
// Zero on the W class, one on GHZ.
double three_tangle(const PureThreeQubitState& state);

// Sum of the squared pairwise concurrences of the three two-qubit
// reductions.
double tangle_sum(const PureThreeQubitState& state);

// Exact partial-transpose test for a three-clone mixture: non-positive
// iff p1^2 > 3 p0 p2 or p2^2 > 3 p1 p3.
PptVerdict ppt_three_clone(const ThreeCloneMixture& mixture);

// Expectation of the three-qubit operator XXX - XYY - YXY - YYX.
// Classical bound 2, maximal value 4 (GHZ).
double mermin_value(const PureThreeQubitState& state);

}  // namespace qclone
