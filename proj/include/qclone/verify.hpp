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

#include <string>
#include <vector>

namespace qclone {

struct VerificationCheck {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  std::string worst_case;  // "(N,M)" label of the worst grid point
  bool pass = false;
};

struct VerificationReport {
  int m_cap = 0;
  int trials = 0;
  std::vector<VerificationCheck> checks;

  bool all_pass() const;
};

// Runs the full oracle-equivalence suite over every (N, M) with
// 1 <= N <= M <= m_cap: entrywise agreement of all analytic reduced-state
// constructors with literal partial traces, the Schmidt spectrum of the
// clone/ancilla bipartition, clone-permutation symmetry, the sign of the
// partially transposed three-clone state against the exact verdict, and
// input-independence of the fidelity over random trials. m_cap <= 7.
VerificationReport run_oracle_verification(int m_cap, int trials = 100,
                                           unsigned seed = 20260808u);

}  // namespace qclone
