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

#include <array>
#include <complex>
#include <string>

#include "qclone/cloner.hpp"
#include "qclone/radical.hpp"
#include "qclone/rational.hpp"

namespace qclone {

// Two-qubit density matrix with the X sparsity pattern
//
//     ( a  .  .  . )
//     ( .  b  c  . )        diagonal (a, b, d, e) in basis_labels order,
//     ( .  c  d  . )        real coherence c between basis_labels[1]
//     ( .  .  .  e )        and basis_labels[2].
//
// basis_labels records the two-qubit basis ordering the entries refer to;
// two-clone states use {00,01,10,11} while clone-ancilla states use the
// permuted ordering {01,00,11,10}, which places their |00><11| coherence
// in the same matrix position. The coherence is held as an exact
// RadicalSum: it is rational for two-clone states and for one input copy,
// but genuinely irrational for clone-ancilla states with N >= 2.
//
// Construction validates a + b + d + e = 1, nonnegative diagonal, and
// c^2 <= b*d, all exactly.
class XFormTwoQubitState {
 public:
  XFormTwoQubitState(std::array<std::string, 4> basis_labels, Rational a,
                     Rational b, RadicalSum c, Rational d, Rational e);

  const std::array<std::string, 4>& basis_labels() const { return basis_labels_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const RadicalSum& c() const { return c_; }
  const Rational& d() const { return d_; }
  const Rational& e() const { return e_; }

  // Dense matrix in the standard {|00>,|01>,|10>,|11>} ordering, with the
  // entries placed according to basis_labels.
  Eigen::Matrix4cd to_matrix() const;

 private:
  std::array<std::string, 4> basis_labels_;
  Rational a_, b_, d_, e_;
  RadicalSum c_;
};

// Three-clone reduced state: a mixture of the projectors onto |000>, the
// one- and two-excitation three-qubit W states, and |111>, with exact
// weights p0..p3 (nonnegative, summing to 1). The multiplicity factor of
// the W projectors is folded into the stored weights.
class ThreeCloneMixture {
 public:
  ThreeCloneMixture(Rational p0, Rational p1, Rational p2, Rational p3);

  const Rational& p0() const { return p0_; }
  const Rational& p1() const { return p1_; }
  const Rational& p2() const { return p2_; }
  const Rational& p3() const { return p3_; }

  Eigen::MatrixXcd to_matrix() const;  // dense 8x8

 private:
  Rational p0_, p1_, p2_, p3_;
};

// Pure state of three qubits, indexed by basis strings 000..111 with
// qubit 0 the leftmost (most significant) position. Unit norm within 1e-12.
class PureThreeQubitState {
 public:
  explicit PureThreeQubitState(std::array<std::complex<double>, 8> amplitudes);

  const std::array<std::complex<double>, 8>& amplitudes() const { return amplitudes_; }
  std::complex<double> amplitude(int basis_index) const { return amplitudes_.at(basis_index); }

 private:
  std::array<std::complex<double>, 8> amplitudes_;
};

// Reduced state of two clones, basis {00,01,10,11}; requires M >= 2.
// The diagonal entries b and d coincide with the coherence c.
XFormTwoQubitState two_clone_state(const CloneSpec& spec);

// Reduced state of one clone and one ancilla qubit, basis {01,00,11,10}
// (first label character = clone, second = ancilla); requires M >= 2.
XFormTwoQubitState clone_ancilla_state(const CloneSpec& spec);

// Reduced state of three clones; requires M >= 3.
ThreeCloneMixture three_clone_state(const CloneSpec& spec);

// Overlap of one output copy's reduced state with the input |0>, exact.
// Equals a + c of the two-clone state for M >= 2 and 1 for M = N.
Rational single_clone_fidelity(const CloneSpec& spec);

// Total output of the 1->2 cloner as a pure state of (original, clone,
// ancilla): sqrt(2/3)|000> + sqrt(1/6)(|011> + |101>).
PureThreeQubitState one_to_two_pure_state();

}  // namespace qclone
