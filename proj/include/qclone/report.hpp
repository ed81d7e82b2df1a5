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

#include "qclone/measures.hpp"
#include "qclone/reduced_states.hpp"
#include "qclone/verify.hpp"

// Table and document rendering for the command-line front end.
//
// Conventions (stable contract for scripting):
//  - rationals render in lowest terms as "p/q" (always with the slash);
//  - decimals render with 12 significant digits in CSV; JSON documents
//    carry full-precision numbers next to the exact strings;
//  - CSV documents are one header line plus data rows, newline-terminated,
//    and round-trip byte-identically through parse_csv/render_csv_rows.
namespace qclone {

enum class OutputFormat { csv, json };

enum class PairKind { clones, clone_ancilla };

// One row of a pairwise-entanglement table.
struct SweepRow {
  CloneSpec spec;
  PairKind kind;
  XFormTwoQubitState state;
  ConcurrenceValue concurrence;
  double eof;
  Rational fidelity;
};

SweepRow make_sweep_row(const CloneSpec& spec, PairKind kind);

std::string render_pair(const SweepRow& row, OutputFormat format);
std::string render_fig1(long m_max, OutputFormat format);
std::string render_tripartite(const CloneSpec& spec, OutputFormat format);
std::string render_state(const CloneSpec& spec, OutputFormat format);
std::string render_verification(const VerificationReport& report, OutputFormat format);

// 12 significant digits ("%.12g").
std::string format_decimal(double value);

// The radical-sum coherence renders exactly ("p/q") when rational and as a
// 12-digit decimal otherwise.
std::string format_coherence(const RadicalSum& value);

std::string witness_name(PptWitness witness);

std::vector<std::vector<std::string>> parse_csv(const std::string& document);
std::string render_csv_rows(const std::vector<std::vector<std::string>>& rows);

}  // namespace qclone
