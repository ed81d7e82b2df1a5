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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "qclone/report.hpp"
#include "qclone/verify.hpp"

namespace {

// Exit codes: 0 success, 1 domain/usage error, 2 verification failure.
constexpr int kExitSuccess = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerificationFailure = 2;

// Buffered so that every command writes its output in one shot.
void write_document(const std::string& path, const std::string& document) {
  if (path.empty()) {
    std::cout << document;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + path);
  }
  out << document;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qclone: entanglement structure of the optimal universal N->M qubit "
      "cloner (exact reduced states, concurrence, EoF, PPT tests, and a "
      "brute-force verification oracle)"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "csv";
  std::string output_path;
  app.add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--output", output_path,
                 "write to this file instead of standard output");

  int pair_n = 0, pair_m = 0;
  std::string kind_name = "clones";
  auto* pair_cmd = app.add_subcommand(
      "pair", "two-qubit reduced state with concurrence, EoF and fidelity");
  pair_cmd->add_option("--n", pair_n, "number of input copies N")->required();
  pair_cmd->add_option("--m", pair_m, "number of output copies M")->required();
  pair_cmd->add_option("--kind", kind_name, "which qubit pair to reduce to")
      ->check(CLI::IsMember({"clones", "clone-ancilla"}))
      ->capture_default_str();

  long fig1_m_max = 0;
  auto* fig1_cmd = app.add_subcommand(
      "fig1", "clone-ancilla concurrence series C(1,M) for M = 2..m-max");
  fig1_cmd->add_option("--m-max", fig1_m_max, "largest M in the series")->required();

  int tri_n = 0, tri_m = 0;
  auto* tri_cmd = app.add_subcommand(
      "tripartite", "three-clone mixture weights and partial-transpose verdict");
  tri_cmd->add_option("--n", tri_n, "number of input copies N")->required();
  tri_cmd->add_option("--m", tri_m, "number of output copies M")->required();

  int state_n = 0, state_m = 0;
  auto* state_cmd = app.add_subcommand(
      "state", "squared Schmidt amplitudes of the cloner output");
  state_cmd->add_option("--n", state_n, "number of input copies N")->required();
  state_cmd->add_option("--m", state_m, "number of output copies M")->required();

  int verify_m_cap = 5;
  int verify_trials = 100;
  unsigned verify_seed = 20260808u;
  auto* verify_cmd = app.add_subcommand(
      "verify", "brute-force oracle equivalence suite over all N <= M <= m-cap");
  verify_cmd->add_option("--m-cap", verify_m_cap, "largest M to verify (at most 7)")
      ->check(CLI::Range(1, 7))
      ->capture_default_str();
  verify_cmd->add_option("--trials", verify_trials, "random inputs per grid point")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify_seed, "random seed")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    const qclone::OutputFormat format = format_name == "json"
                                            ? qclone::OutputFormat::json
                                            : qclone::OutputFormat::csv;
    std::string document;
    int exit_code = kExitSuccess;
    if (*pair_cmd) {
      const qclone::PairKind kind = kind_name == "clones"
                                        ? qclone::PairKind::clones
                                        : qclone::PairKind::clone_ancilla;
      document = qclone::render_pair(
          qclone::make_sweep_row(qclone::CloneSpec(pair_n, pair_m), kind), format);
    } else if (*fig1_cmd) {
      document = qclone::render_fig1(fig1_m_max, format);
    } else if (*tri_cmd) {
      document = qclone::render_tripartite(qclone::CloneSpec(tri_n, tri_m), format);
    } else if (*state_cmd) {
      document = qclone::render_state(qclone::CloneSpec(state_n, state_m), format);
    } else if (*verify_cmd) {
      const qclone::VerificationReport report =
          qclone::run_oracle_verification(verify_m_cap, verify_trials, verify_seed);
      document = qclone::render_verification(report, format);
      if (!report.all_pass()) exit_code = kExitVerificationFailure;
    }
    write_document(output_path, document);
    return exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
