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

#include "qclone/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace qclone::oracle {
namespace {

using Complex = std::complex<double>;

int bit_position(int num_qubits, int qubit) { return num_qubits - 1 - qubit; }

void check_norm(const Eigen::VectorXcd& amplitudes) {
  if (std::abs(amplitudes.squaredNorm() - 1.0) > 1e-12) {
    throw std::invalid_argument("DenseStateVector: state is not normalized");
  }
}

void check_keep_indices(int num_qubits, const std::vector<int>& keep) {
  if (keep.empty()) {
    throw std::domain_error("partial_trace: no qubits kept");
  }
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= num_qubits) {
      throw std::domain_error("partial_trace: qubit index " +
                              std::to_string(keep[i]) + " out of range");
    }
    for (std::size_t k = i + 1; k < keep.size(); ++k) {
      if (keep[i] == keep[k]) {
        throw std::domain_error("partial_trace: duplicate qubit index " +
                                std::to_string(keep[i]));
      }
    }
  }
}

// Scatters the bits of `kept_value` / `traced_value` into a full basis index.
long assemble_index(int num_qubits, const std::vector<int>& keep,
                    const std::vector<int>& traced, long kept_value,
                    long traced_value) {
  long index = 0;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    const long bit = (kept_value >> (keep.size() - 1 - i)) & 1;
    index |= bit << bit_position(num_qubits, keep[i]);
  }
  for (std::size_t i = 0; i < traced.size(); ++i) {
    const long bit = (traced_value >> (traced.size() - 1 - i)) & 1;
    index |= bit << bit_position(num_qubits, traced[i]);
  }
  return index;
}

std::vector<int> complement_of(int num_qubits, const std::vector<int>& keep) {
  std::vector<int> traced;
  for (int q = 0; q < num_qubits; ++q) {
    if (std::find(keep.begin(), keep.end(), q) == keep.end()) traced.push_back(q);
  }
  return traced;
}

}  // namespace

DenseDensityMatrix::DenseDensityMatrix(int num_qubits, Eigen::MatrixXcd entries)
    : num_qubits_(num_qubits), entries_(std::move(entries)) {
  const long dim = 1L << num_qubits_;
  if (entries_.rows() != dim || entries_.cols() != dim) {
    throw std::invalid_argument("DenseDensityMatrix: dimension mismatch");
  }
  if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument("DenseDensityMatrix: not Hermitian");
  }
  if (std::abs(entries_.trace().real() - 1.0) > 1e-12 ||
      std::abs(entries_.trace().imag()) > 1e-12) {
    throw std::invalid_argument("DenseDensityMatrix: trace is not 1");
  }
  if (dim <= 64) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(entries_);
    if (solver.eigenvalues().minCoeff() < -1e-10) {
      throw std::invalid_argument("DenseDensityMatrix: negative eigenvalue");
    }
  }
}

DenseStateVector dicke_vector(int n_qubits, int n_excited) {
  if (n_qubits < 0 || n_qubits > kMaxQubits) {
    throw std::length_error("dicke_vector: qubit count " + std::to_string(n_qubits) +
                            " exceeds the size cap of " + std::to_string(kMaxQubits));
  }
  if (n_excited < 0 || n_excited > n_qubits) {
    throw std::domain_error("dicke_vector: excitation count out of range");
  }
  const long dim = 1L << n_qubits;
  Eigen::VectorXcd amplitudes = Eigen::VectorXcd::Zero(dim);
  const double amplitude =
      1.0 / std::sqrt(binomial(n_qubits, n_excited).get_d());
  for (long i = 0; i < dim; ++i) {
    if (std::popcount(static_cast<unsigned long>(i)) == n_excited) {
      amplitudes(i) = amplitude;
    }
  }
  return DenseStateVector{n_qubits, std::move(amplitudes)};
}

DenseStateVector tensor_product(const DenseStateVector& left,
                                const DenseStateVector& right) {
  const int num_qubits = left.num_qubits + right.num_qubits;
  if (num_qubits > kMaxQubits) {
    throw std::length_error("tensor_product: qubit count exceeds the size cap");
  }
  const long right_dim = 1L << right.num_qubits;
  Eigen::VectorXcd amplitudes(1L << num_qubits);
  for (long i = 0; i < left.amplitudes.size(); ++i) {
    amplitudes.segment(i * right_dim, right_dim) =
        left.amplitudes(i) * right.amplitudes;
  }
  return DenseStateVector{num_qubits, std::move(amplitudes)};
}

DenseStateVector apply_single_qubit(const DenseStateVector& state, int qubit,
                                    const Eigen::Matrix2cd& gate) {
  if (qubit < 0 || qubit >= state.num_qubits) {
    throw std::domain_error("apply_single_qubit: qubit index out of range");
  }
  const long stride = 1L << bit_position(state.num_qubits, qubit);
  Eigen::VectorXcd amplitudes = state.amplitudes;
  for (long base = 0; base < amplitudes.size(); ++base) {
    if ((base & stride) != 0) continue;
    const Complex zero_part = amplitudes(base);
    const Complex one_part = amplitudes(base | stride);
    amplitudes(base) = gate(0, 0) * zero_part + gate(0, 1) * one_part;
    amplitudes(base | stride) = gate(1, 0) * zero_part + gate(1, 1) * one_part;
  }
  return DenseStateVector{state.num_qubits, std::move(amplitudes)};
}

DenseStateVector full_output_state(const CloneSpec& spec) {
  const int m = spec.m_outputs;
  if (2 * m - 1 > kMaxQubits) {
    throw std::length_error("full_output_state: 2M-1 = " + std::to_string(2 * m - 1) +
                            " qubits exceeds the size cap of " +
                            std::to_string(kMaxQubits));
  }
  const int num_qubits = 2 * m - 1;
  Eigen::VectorXcd amplitudes = Eigen::VectorXcd::Zero(1L << num_qubits);
  for (int j = 0; j <= m - spec.n_inputs; ++j) {
    const double amplitude = std::sqrt(amp_sq(spec, j).to_double());
    const DenseStateVector term =
        tensor_product(dicke_vector(m, j), dicke_vector(m - 1, j));
    amplitudes += amplitude * term.amplitudes;
  }
  check_norm(amplitudes);
  return DenseStateVector{num_qubits, std::move(amplitudes)};
}

DenseDensityMatrix partial_trace(const DenseStateVector& state,
                                 const std::vector<int>& keep) {
  check_keep_indices(state.num_qubits, keep);
  const std::vector<int> traced = complement_of(state.num_qubits, keep);
  const long kept_dim = 1L << keep.size();
  const long traced_dim = 1L << traced.size();
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(kept_dim, kept_dim);
  for (long t = 0; t < traced_dim; ++t) {
    for (long row = 0; row < kept_dim; ++row) {
      const Complex row_amp =
          state.amplitudes(assemble_index(state.num_qubits, keep, traced, row, t));
      if (row_amp == Complex(0, 0)) continue;
      for (long col = 0; col < kept_dim; ++col) {
        const Complex col_amp = state.amplitudes(
            assemble_index(state.num_qubits, keep, traced, col, t));
        rho(row, col) += row_amp * std::conj(col_amp);
      }
    }
  }
  return DenseDensityMatrix(static_cast<int>(keep.size()), std::move(rho));
}

DenseDensityMatrix partial_trace(const DenseDensityMatrix& rho,
                                 const std::vector<int>& keep) {
  check_keep_indices(rho.num_qubits(), keep);
  const std::vector<int> traced = complement_of(rho.num_qubits(), keep);
  const long kept_dim = 1L << keep.size();
  const long traced_dim = 1L << traced.size();
  Eigen::MatrixXcd reduced = Eigen::MatrixXcd::Zero(kept_dim, kept_dim);
  for (long t = 0; t < traced_dim; ++t) {
    for (long row = 0; row < kept_dim; ++row) {
      for (long col = 0; col < kept_dim; ++col) {
        reduced(row, col) += rho.entries()(
            assemble_index(rho.num_qubits(), keep, traced, row, t),
            assemble_index(rho.num_qubits(), keep, traced, col, t));
      }
    }
  }
  return DenseDensityMatrix(static_cast<int>(keep.size()), std::move(reduced));
}

double partial_transpose_min_eig(const DenseDensityMatrix& rho, int subsystem) {
  if (subsystem < 0 || subsystem >= rho.num_qubits()) {
    throw std::domain_error("partial_transpose_min_eig: qubit index out of range");
  }
  const long dim = rho.entries().rows();
  const long mask = 1L << bit_position(rho.num_qubits(), subsystem);
  Eigen::MatrixXcd transposed(dim, dim);
  for (long row = 0; row < dim; ++row) {
    for (long col = 0; col < dim; ++col) {
      const long swapped_row = (row & ~mask) | (col & mask);
      const long swapped_col = (col & ~mask) | (row & mask);
      transposed(row, col) = rho.entries()(swapped_row, swapped_col);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(transposed);
  return solver.eigenvalues().minCoeff();
}

double universality_check(const CloneSpec& spec, int trials, unsigned seed) {
  const int m = spec.m_outputs;
  const DenseStateVector base = full_output_state(spec);

  auto single_clone_overlap = [&](const DenseStateVector& output,
                                  const Eigen::Vector2cd& input) {
    const DenseDensityMatrix rho = partial_trace(output, {0});
    return (input.adjoint() * rho.entries() * input)(0).real();
  };

  const double reference =
      single_clone_overlap(base, Eigen::Vector2cd(1.0, 0.0));

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double max_deviation = 0.0;
  for (int t = 0; t < trials; ++t) {
    Eigen::Vector2cd input(Complex(gauss(rng), gauss(rng)),
                           Complex(gauss(rng), gauss(rng)));
    input.normalize();
    // |0> -> psi, |1> -> psi_perp on the clones; the complex-conjugate
    // rotation on the ancilla register.
    Eigen::Matrix2cd rotation;
    rotation << input(0), -std::conj(input(1)), input(1), std::conj(input(0));
    DenseStateVector rotated = base;
    for (int q = 0; q < m; ++q) {
      rotated = apply_single_qubit(rotated, q, rotation);
    }
    const Eigen::Matrix2cd conjugate_rotation = rotation.conjugate();
    for (int q = m; q < 2 * m - 1; ++q) {
      rotated = apply_single_qubit(rotated, q, conjugate_rotation);
    }
    const double fidelity = single_clone_overlap(rotated, input);
    max_deviation = std::max(max_deviation, std::abs(fidelity - reference));
  }
  return max_deviation;
}

}  // namespace qclone::oracle
