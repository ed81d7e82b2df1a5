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

#include <vector>

#include "qclone/cloner.hpp"

// Brute-force ground truth: the cloner output expanded in the full
// 2^(2M-1)-dimensional tensor-product space, with literal partial traces.
// Everything here is double precision and independent of the exact
// analytic constructors it is used to check.
//
// Qubit ordering convention: qubit 0 is the leftmost (most significant)
// position of a basis string; the M clones are qubits 0..M-1 and the
// M-1 ancilla qubits are M..2M-2.
namespace qclone::oracle {

inline constexpr int kMaxQubits = 13;  // 8192 amplitudes

// Pure state of num_qubits qubits; unit norm within 1e-12.
struct DenseStateVector {
  int num_qubits = 0;
  Eigen::VectorXcd amplitudes;
};

// Density matrix on num_qubits qubits. Construction checks Hermiticity
// and unit trace within 1e-12 always, and a minimum eigenvalue >= -1e-10
// for dimensions up to 64 (an eigendecomposition is unreasonable beyond).
class DenseDensityMatrix {
 public:
  DenseDensityMatrix(int num_qubits, Eigen::MatrixXcd entries);

  int num_qubits() const { return num_qubits_; }
  const Eigen::MatrixXcd& entries() const { return entries_; }

 private:
  int num_qubits_;
  Eigen::MatrixXcd entries_;
};

// Normalized fully symmetric state of n_qubits qubits with n_excited
// excitations: the equal superposition of all basis strings of that weight.
DenseStateVector dicke_vector(int n_qubits, int n_excited);

DenseStateVector tensor_product(const DenseStateVector& left,
                                const DenseStateVector& right);

DenseStateVector apply_single_qubit(const DenseStateVector& state, int qubit,
                                    const Eigen::Matrix2cd& gate);

// The full cloner output: sum_j amp_j dicke(M, j) (x) dicke(M-1, j).
// Requires 2M-1 <= kMaxQubits, i.e. M <= 7.
DenseStateVector full_output_state(const CloneSpec& spec);

// Reduced state on the kept qubits, in the order given by `keep`.
DenseDensityMatrix partial_trace(const DenseStateVector& state,
                                 const std::vector<int>& keep);
DenseDensityMatrix partial_trace(const DenseDensityMatrix& rho,
                                 const std::vector<int>& keep);

// Minimum eigenvalue after transposing the given qubit.
double partial_transpose_min_eig(const DenseDensityMatrix& rho, int subsystem);

// Applies the cloner to `trials` Haar-random pure input states (the clone
// register rotated into the {psi, psi_perp} basis, the ancilla register
// into its complex conjugate) and returns the maximum deviation of the
// single-clone fidelity from the computational-basis input's fidelity.
double universality_check(const CloneSpec& spec, int trials,
                          unsigned seed = 20260808u);

}  // namespace qclone::oracle
