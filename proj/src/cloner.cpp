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

#include "qclone/cloner.hpp"

#include <stdexcept>
#include <string>

namespace qclone {

CloneSpec::CloneSpec(int n, int m) : n_inputs(n), m_outputs(m) {
  if (n < 1 || m < n) {
    throw std::domain_error("CloneSpec: need 1 <= N <= M, got N=" +
                            std::to_string(n) + " M=" + std::to_string(m));
  }
}

mpz_class binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

mpz_class factorial(unsigned long n) {
  mpz_class result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

Rational amp_sq(const CloneSpec& spec, int j) {
  const long n = spec.n_inputs;
  const long m = spec.m_outputs;
  if (j < 0 || j > m - n) {
    throw std::domain_error("amp_sq: index j out of range, need 0 <= j <= M-N = " +
                            std::to_string(m - n) + ", got j=" + std::to_string(j));
  }
  const Rational prefactor(n + 1, m + 1);
  mpz_class num = factorial(m - n) * factorial(m - j);
  mpz_class den = factorial(m - n - j) * factorial(m);
  return prefactor * Rational(std::move(num), std::move(den));
}

SchmidtOutputState output_state(const CloneSpec& spec) {
  const long n = spec.n_inputs;
  const long m = spec.m_outputs;
  SchmidtOutputState state{spec, {}};
  state.amp_sq.reserve(m - n + 1);
  // iterative product form of the factorial expression:
  //   w_0 = (N+1)/(M+1),  w_{j+1} = w_j (M-N-j)/(M-j)
  Rational weight(n + 1, m + 1);
  for (long j = 0; j <= m - n; ++j) {
    state.amp_sq.push_back(weight);
    weight *= Rational(m - n - j, m - j);
  }
  return state;
}

}  // namespace qclone
