/*
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

// Specimen datasets: CSV ingestion, per-row evaluation of the capacity
// predictors, and Mean/STD/CoV statistics of N_test / N_u.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <exception>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <thread>
#include <utility>
#include <vector>

#include "cfst/capacity.hpp"
#include "cfst/section.hpp"

namespace cfst {

inline constexpr std::string_view kDatasetHeader =
    "source_id,D_mm,t_mm,L_mm,fy_MPa,fu_MPa,Es_MPa,fc_measured_MPa,fc_kind,dmax_mm,Ntest_kN";

struct SpecimenRecord {
  std::size_t line = 0;  ///< 1-based line in the source file
  std::string source_id;
  double D = 0.0;
  double t = 0.0;
  double L = 0.0;
  double fy = 0.0;
  std::optional<double> fu;
  std::optional<double> Es;
  double fc_measured = 0.0;
  SpecimenKind fc_kind = SpecimenKind::CYL150;
  bool fc_kind_defaulted = false;
  std::optional<double> dmax;
  double N_test_kN = 0.0;
};

struct RowError {
  std::size_t line = 0;
  std::string message;
};

struct ParsedDataset {
  std::vector<SpecimenRecord> records;
  std::vector<RowError> errors;
};

/// A record resolved into a column: strength converted, defaults applied.
struct ResolvedSpecimen {
  ColumnSpec column;
  ConvertedStrength strength;
  std::vector<std::string> defaulted;  ///< names of defaulted inputs
};

inline ResolvedSpecimen resolve_specimen(const SpecimenRecord& r,
                                         std::optional<double> Ec_override = std::nullopt) {
  const auto strength = convert_strength({r.fc_measured, r.fc_kind});
  ColumnSpec column(CircularSection{r.D, r.t, r.L}, SteelMaterial::make(r.fy, r.fu, r.Es),
                    ConcreteMaterial::make(strength.fc, r.dmax, Ec_override));
  std::vector<std::string> defaulted;
  if (!r.fu) defaulted.emplace_back("fu");
  if (!r.Es) defaulted.emplace_back("Es");
  if (!r.dmax) defaulted.emplace_back("dmax");
  if (r.fc_kind_defaulted) defaulted.emplace_back("fc_kind");
  if (!Ec_override) defaulted.emplace_back("Ec");
  return {std::move(column), strength, std::move(defaulted)};
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

/// Splits one CSV line; double-quoted fields may contain commas and "".
inline std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (quoted) throw InputError("unterminated quoted field");
  fields.push_back(std::move(cur));
  return fields;
}

inline double parse_number(std::string_view field, std::string_view name) {
  const auto s = trim(field);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v))
    throw InputError("malformed number in " + std::string(name) + ": '" + std::string(s) + "'");
  return v;
}

inline std::optional<double> parse_optional(std::string_view field, std::string_view name) {
  if (trim(field).empty()) return std::nullopt;
  return parse_number(field, name);
}

}  // namespace detail

/// Parses a dataset. The header must match kDatasetHeader exactly; a bad
/// header throws. Row problems are collected with their line numbers and
/// never abort the file.
inline ParsedDataset parse_dataset(std::string_view text) {
  ParsedDataset out;
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

  std::size_t pos = 0;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto line = detail::trim(raw);
    if (!header_seen) {
      if (line != kDatasetHeader)
        throw InputError("dataset header does not match: expected '" + std::string(kDatasetHeader) + "'");
      header_seen = true;
      continue;
    }
    if (line.empty()) continue;

    try {
      const auto f = detail::split_csv_line(line);
      if (f.size() != 11)
        throw InputError("expected 11 fields, found " + std::to_string(f.size()));
      SpecimenRecord r;
      r.line = line_no;
      r.source_id = std::string(detail::trim(f[0]));
      r.D = detail::parse_number(f[1], "D_mm");
      r.t = detail::parse_number(f[2], "t_mm");
      r.L = detail::parse_number(f[3], "L_mm");
      r.fy = detail::parse_number(f[4], "fy_MPa");
      r.fu = detail::parse_optional(f[5], "fu_MPa");
      r.Es = detail::parse_optional(f[6], "Es_MPa");
      r.fc_measured = detail::parse_number(f[7], "fc_measured_MPa");
      const auto kind = detail::trim(f[8]);
      if (kind.empty()) {
        r.fc_kind_defaulted = true;
      } else if (auto k = parse_specimen_kind(kind)) {
        r.fc_kind = *k;
      } else {
        throw InputError("unknown fc_kind '" + std::string(kind) + "'");
      }
      r.dmax = detail::parse_optional(f[9], "dmax_mm");
      r.N_test_kN = detail::parse_number(f[10], "Ntest_kN");
      if (!(r.N_test_kN > 0.0)) throw InputError("Ntest_kN must be positive");
      (void)resolve_specimen(r);  // geometry, material and conversion checks
      out.records.push_back(std::move(r));
    } catch (const InputError& e) {
      out.errors.push_back({line_no, e.what()});
    }
  }
  if (!header_seen) throw InputError("dataset is empty (no header)");
  return out;
}

struct StatsSummary {
  MethodId method = MethodId::ACI;
  std::size_t n_applicable = 0;
  std::size_t n_total = 0;
  std::optional<double> mean;
  std::optional<double> std;  ///< sample (n-1) standard deviation
  std::optional<double> cov;
};

/// Mean, sample standard deviation and coefficient of variation of ratios.
inline StatsSummary summarize_ratios(MethodId method, const std::vector<double>& ratios,
                                     std::size_t n_total) {
  StatsSummary s;
  s.method = method;
  s.n_applicable = ratios.size();
  s.n_total = n_total;
  if (ratios.empty()) return s;
  double sum = 0.0;
  for (double r : ratios) sum += r;
  const double mean = sum / static_cast<double>(ratios.size());
  s.mean = mean;
  if (ratios.size() >= 2) {
    double ss = 0.0;
    for (double r : ratios) ss += (r - mean) * (r - mean);
    s.std = std::sqrt(ss / static_cast<double>(ratios.size() - 1));
    if (mean > 0.0) s.cov = *s.std / mean;
  }
  return s;
}

struct EvaluationSettings {
  CapacitySettings capacity;
  std::optional<double> Ec_override;
  unsigned threads = 1;  ///< 0 selects the hardware concurrency
};

struct RowEvaluation {
  const SpecimenRecord* record = nullptr;
  ConvertedStrength strength;
  std::vector<std::string> defaulted;
  std::vector<CapacityPrediction> predictions;  ///< same order as the method list
};

struct DatasetEvaluation {
  std::vector<MethodId> methods;
  std::vector<RowEvaluation> rows;  ///< same order as the input records
  std::vector<StatsSummary> summaries;
};

inline RowEvaluation evaluate_record(const SpecimenRecord& r, const std::vector<MethodId>& methods,
                                     const EvaluationSettings& settings) {
  auto resolved = resolve_specimen(r, settings.Ec_override);
  RowEvaluation row;
  row.record = &r;
  row.strength = resolved.strength;
  row.defaulted = std::move(resolved.defaulted);
  row.predictions.reserve(methods.size());
  for (MethodId m : methods) row.predictions.push_back(predict(m, resolved.column, settings.capacity));
  return row;
}

/// Runs every method on every record. Rows are independent and may be
/// evaluated on several threads; output order and statistics depend only on
/// the input order. The records must outlive the result.
inline DatasetEvaluation evaluate_dataset(const std::vector<SpecimenRecord>& records,
                                          const std::vector<MethodId>& methods,
                                          const EvaluationSettings& settings = {}) {
  DatasetEvaluation out;
  out.methods = methods;
  out.rows.resize(records.size());

  unsigned threads = settings.threads == 0 ? std::thread::hardware_concurrency() : settings.threads;
  if (threads == 0) threads = 1;
  if (threads > records.size()) threads = static_cast<unsigned>(std::max<std::size_t>(records.size(), 1));

  if (threads <= 1) {
    for (std::size_t i = 0; i < records.size(); ++i)
      out.rows[i] = evaluate_record(records[i], methods, settings);
  } else {
    std::vector<std::exception_ptr> failures(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < records.size(); i += threads)
            out.rows[i] = evaluate_record(records[i], methods, settings);
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& f : failures)
      if (f) std::rethrow_exception(f);
  }

  for (std::size_t k = 0; k < methods.size(); ++k) {
    std::vector<double> ratios;
    for (const auto& row : out.rows) {
      const auto& p = row.predictions[k];
      if (p.applicable()) ratios.push_back(row.record->N_test_kN * 1000.0 / p.N);
    }
    out.summaries.push_back(summarize_ratios(methods[k], ratios, records.size()));
  }
  return out;
}

}  // namespace cfst
