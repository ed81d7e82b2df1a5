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

#include "qclone/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

namespace qclone {
namespace {

using nlohmann::json;

json exact_and_value(const Rational& r) {
  return json{{"exact", r.str()}, {"value", r.to_double()}};
}

json exact_and_value(const RadicalSum& r) {
  json entry{{"value", r.to_double()}};
  if (r.is_rational()) {
    entry["exact"] = r.as_rational().str();
  } else {
    entry["exact"] = nullptr;
  }
  return entry;
}

json concurrence_json(const ConcurrenceValue& c) {
  json entry{{"value", c.value}, {"exact_zero", c.exact_zero}};
  if (c.exact.has_value()) {
    entry["exact"] = c.exact->str();
  } else {
    entry["exact"] = nullptr;
  }
  return entry;
}

std::string bool_name(bool value) { return value ? "true" : "false"; }

}  // namespace

std::string format_decimal(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

std::string format_coherence(const RadicalSum& value) {
  return value.is_rational() ? value.as_rational().str()
                             : format_decimal(value.to_double());
}

std::string witness_name(PptWitness witness) {
  switch (witness) {
    case PptWitness::p1_squared_gt_3p0p2:
      return "p1^2>3*p0*p2";
    case PptWitness::p2_squared_gt_3p1p3:
      return "p2^2>3*p1*p3";
    case PptWitness::none:
      break;
  }
  return "none";
}

SweepRow make_sweep_row(const CloneSpec& spec, PairKind kind) {
  XFormTwoQubitState state = kind == PairKind::clones ? two_clone_state(spec)
                                                      : clone_ancilla_state(spec);
  ConcurrenceValue concurrence = concurrence_x_form(state);
  const double eof = eof_from_concurrence(concurrence.value);
  return SweepRow{spec, kind, std::move(state), std::move(concurrence), eof,
                  single_clone_fidelity(spec)};
}

std::string render_pair(const SweepRow& row, OutputFormat format) {
  const bool full_diagonal = row.kind == PairKind::clone_ancilla;
  if (format == OutputFormat::csv) {
    std::vector<std::string> header{"N", "M", "a"};
    if (full_diagonal) header.push_back("b");
    header.push_back("c");
    if (full_diagonal) header.push_back("d");
    header.insert(header.end(), {"e", "concurrence", "concurrence_exact_zero",
                                 "eof", "fidelity"});

    std::vector<std::string> data{std::to_string(row.spec.n_inputs),
                                  std::to_string(row.spec.m_outputs),
                                  row.state.a().str()};
    if (full_diagonal) data.push_back(row.state.b().str());
    data.push_back(format_coherence(row.state.c()));
    if (full_diagonal) data.push_back(row.state.d().str());
    data.insert(data.end(),
                {row.state.e().str(), format_decimal(row.concurrence.value),
                 bool_name(row.concurrence.exact_zero), format_decimal(row.eof),
                 row.fidelity.str()});
    return render_csv_rows({header, data});
  }

  json doc{{"n", row.spec.n_inputs},
           {"m", row.spec.m_outputs},
           {"kind", row.kind == PairKind::clones ? "clones" : "clone-ancilla"},
           {"basis", row.state.basis_labels()},
           {"a", exact_and_value(row.state.a())},
           {"b", exact_and_value(row.state.b())},
           {"c", exact_and_value(row.state.c())},
           {"d", exact_and_value(row.state.d())},
           {"e", exact_and_value(row.state.e())},
           {"concurrence", concurrence_json(row.concurrence)},
           {"eof", row.eof},
           {"fidelity", exact_and_value(row.fidelity)}};
  return doc.dump(2) + "\n";
}

std::string render_fig1(long m_max, OutputFormat format) {
  if (m_max < 2) {
    throw std::domain_error("fig1: m_max must be at least 2");
  }
  if (format == OutputFormat::csv) {
    std::vector<std::vector<std::string>> rows{{"M", "concurrence"}};
    for (long m = 2; m <= m_max; ++m) {
      rows.push_back({std::to_string(m),
                      format_decimal(clone_ancilla_concurrence_closed(m))});
    }
    return render_csv_rows(rows);
  }
  json series = json::array();
  for (long m = 2; m <= m_max; ++m) {
    series.push_back(json{{"m", m}, {"concurrence", clone_ancilla_concurrence_closed(m)}});
  }
  return series.dump(2) + "\n";
}

std::string render_tripartite(const CloneSpec& spec, OutputFormat format) {
  const ThreeCloneMixture mixture = three_clone_state(spec);
  const PptVerdict verdict = ppt_three_clone(mixture);
  if (format == OutputFormat::csv) {
    return render_csv_rows(
        {{"N", "M", "p0", "p1", "p2", "p3", "npt", "witness"},
         {std::to_string(spec.n_inputs), std::to_string(spec.m_outputs),
          mixture.p0().str(), mixture.p1().str(), mixture.p2().str(),
          mixture.p3().str(), bool_name(verdict.is_npt),
          witness_name(verdict.witness)}});
  }
  json doc{{"n", spec.n_inputs},
           {"m", spec.m_outputs},
           {"p0", exact_and_value(mixture.p0())},
           {"p1", exact_and_value(mixture.p1())},
           {"p2", exact_and_value(mixture.p2())},
           {"p3", exact_and_value(mixture.p3())},
           {"npt", verdict.is_npt},
           {"witness", witness_name(verdict.witness)}};
  return doc.dump(2) + "\n";
}

std::string render_state(const CloneSpec& spec, OutputFormat format) {
  const SchmidtOutputState state = output_state(spec);
  if (format == OutputFormat::csv) {
    std::vector<std::vector<std::string>> rows{{"N", "M", "j", "amp_sq"}};
    for (std::size_t j = 0; j < state.amp_sq.size(); ++j) {
      rows.push_back({std::to_string(spec.n_inputs), std::to_string(spec.m_outputs),
                      std::to_string(j), state.amp_sq[j].str()});
    }
    return render_csv_rows(rows);
  }
  json weights = json::array();
  for (std::size_t j = 0; j < state.amp_sq.size(); ++j) {
    json entry = exact_and_value(state.amp_sq[j]);
    entry["j"] = j;
    weights.push_back(entry);
  }
  json doc{{"n", spec.n_inputs}, {"m", spec.m_outputs}, {"amp_sq", weights}};
  return doc.dump(2) + "\n";
}

std::string render_verification(const VerificationReport& report,
                                OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::vector<std::vector<std::string>> rows{
        {"check", "max_deviation", "tolerance", "worst_case", "pass"}};
    for (const auto& check : report.checks) {
      rows.push_back({check.name, format_decimal(check.max_deviation),
                      format_decimal(check.tolerance), check.worst_case,
                      bool_name(check.pass)});
    }
    return render_csv_rows(rows);
  }
  json checks = json::array();
  for (const auto& check : report.checks) {
    checks.push_back(json{{"name", check.name},
                          {"max_deviation", check.max_deviation},
                          {"tolerance", check.tolerance},
                          {"worst_case", check.worst_case},
                          {"pass", check.pass}});
  }
  json doc{{"m_cap", report.m_cap},
           {"trials", report.trials},
           {"all_pass", report.all_pass()},
           {"checks", checks}};
  return doc.dump(2) + "\n";
}

std::vector<std::vector<std::string>> parse_csv(const std::string& document) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream lines(document);
  std::string line;
  while (std::getline(lines, line)) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream cells(line);
    while (std::getline(cells, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.push_back("");
    rows.push_back(std::move(fields));
  }
  return rows;
}

std::string render_csv_rows(const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ',';
      out << row[i];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace qclone
