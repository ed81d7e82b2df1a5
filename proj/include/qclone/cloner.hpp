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

#include <vector>

#include "qclone/rational.hpp"

namespace qclone {

// Parameters of a symmetric universal cloner taking N identical input
// qubits to M approximate copies (1 <= N <= M). The transformation is
// fixed to the computational-basis input |0>; universality makes the
// entanglement structure input-independent (verified by the oracle).
struct CloneSpec {
  int n_inputs;
  int m_outputs;

  CloneSpec(int n, int m);
};

// C(n, k) over arbitrary-precision integers; 0 whenever the selection is
// empty (k < 0, k > n, or n < 0) so that sums with binomial factors can
// run over unrestricted index ranges.
mpz_class binomial(long n, long k);

mpz_class factorial(unsigned long n);

// Squared Schmidt coefficient of the cloner output for clone-excitation
// index j, as an exact rational:
//   ((N+1)/(M+1)) * (M-N)! (M-j)! / ((M-N-j)! M!),  0 <= j <= M-N.
// The output state pairs the M-qubit symmetric state with j excitations
// against the (M-1)-qubit ancilla symmetric state with j excitations, so
// these weights are a complete description of the output.
Rational amp_sq(const CloneSpec& spec, int j);

// Cloner output in Schmidt form: the list of squared amplitudes indexed
// by j = 0..M-N. Entries are strictly positive and sum to 1 exactly.
struct SchmidtOutputState {
  CloneSpec spec;
  std::vector<Rational> amp_sq;
};

SchmidtOutputState output_state(const CloneSpec& spec);

}  // namespace qclone
