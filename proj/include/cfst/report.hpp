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

// Text exports: curve and response CSV, prediction reports, per-row dataset
// CSV and the JSON statistics summary. All output is deterministic for a
// given input; no timestamps or locale-dependent formatting.

#include <fmt/format.h>

#include <cstddef>
#include <map>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "cfst/axial_response.hpp"
#include "cfst/capacity.hpp"
#include "cfst/curves.hpp"
#include "cfst/dataset.hpp"

namespace cfst {

inline constexpr std::string_view kRatioOrientation = "N_test/N_u";

inline std::string curve_csv(const StressStrainCurve& curve) {
  std::string out = "strain,stress_MPa\n";
  for (const auto& p : curve.points) out += fmt::format("{:.10g},{:.10g}\n", p.strain, p.stress);
  return out;
}

inline std::string response_csv(const AxialResponse& r) {
  std::string out = "eps,N_kN\n";
  for (const auto& p : r.points) out += fmt::format("{:.10g},{:.10g}\n", p.strain, p.N / 1000.0);
  return out;
}

inline std::string oliveira_mode_name(OliveiraMode m) {
  return m == OliveiraMode::AS_PRINTED ? "as-printed" : "corrected";
}

inline std::string violations_text(const ApplicabilityReport& r) {
  std::string s;
  for (const auto& v : r.violations) {
    if (!s.empty()) s += "; ";
    s += fmt::format("{} (actual {:.4g})", v.limit, v.actual);
  }
  return s;
}

inline std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string s;
  for (const auto& i : items) {
    if (!s.empty()) s += sep;
    s += i;
  }
  return s;
}

inline std::string intermediates_text(const std::map<std::string, double>& m) {
  std::string s;
  for (const auto& [k, v] : m) {
    if (!s.empty()) s += ' ';
    s += fmt::format("{}={:.6g}", k, v);
  }
  return s;
}

inline nlohmann::json settings_json(const EvaluationSettings& s) {
  nlohmann::json j;
  j["K_e"] = s.capacity.K_e;
  j["K"] = s.capacity.K;
  j["r_cc"] = s.capacity.r_cc;
  j["fck_factor"] = s.capacity.fck_factor;
  j["zhong_miao_p0"] = s.capacity.zhong_miao_p0;
  j["oliveira_mode"] = oliveira_mode_name(s.capacity.oliveira_mode);
  j["Ec_override"] = s.Ec_override ? nlohmann::json(*s.Ec_override) : nlohmann::json(nullptr);
  return j;
}

inline nlohmann::json prediction_json(const CapacityPrediction& p) {
  nlohmann::json j;
  j["method"] = std::string(to_string(p.method));
  j["N_u_kN"] = p.kN();
  j["applicable"] = p.applicable();
  j["violations"] = nlohmann::json::array();
  for (const auto& v : p.applicability.violations)
    j["violations"].push_back({{"limit", v.limit}, {"bound", v.bound}, {"actual", v.actual}});
  j["intermediates"] = p.intermediates;
  j["diagnostics"] = p.diagnostics;
  return j;
}

inline nlohmann::json summary_json(const StatsSummary& s) {
  auto opt = [](const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
  return {{"method", std::string(to_string(s.method))},
          {"n_applicable", s.n_applicable},
          {"n_total", s.n_total},
          {"mean", opt(s.mean)},
          {"std", opt(s.std)},
          {"cov", opt(s.cov)}};
}

/// Summary document: ratio orientation, the settings in force, and one
/// entry per method.
inline nlohmann::json evaluation_summary_json(const DatasetEvaluation& ev, const EvaluationSettings& s) {
  nlohmann::json j;
  j["ratio"] = std::string(kRatioOrientation);
  j["std_estimator"] = "sample (n-1)";
  j["config"] = settings_json(s);
  j["summaries"] = nlohmann::json::array();
  for (const auto& sum : ev.summaries) j["summaries"].push_back(summary_json(sum));
  return j;
}

/// Per-row CSV: resolved inputs, defaulted markers, then one load column and
/// one applicability flag per method. Rows that failed to parse are listed
/// with their error and empty predictions.
inline std::string evaluation_rows_csv(const DatasetEvaluation& ev, const std::vector<RowError>& errors = {}) {
  std::string out =
      "line,source_id,D_mm,t_mm,L_mm,fy_MPa,fu_MPa,Es_MPa,fc_measured_MPa,fc_kind,dmax_mm,Ntest_kN,"
      "fc_MPa,fc_class,defaulted,error";
  for (MethodId m : ev.methods) out += fmt::format(",N_u_kN_{0},applicable_{0}", to_string(m));
  out += '\n';

  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  };

  std::size_t next_error = 0;
  auto flush_errors_before = [&](std::size_t line) {
    while (next_error < errors.size() && errors[next_error].line < line) {
      const auto& e = errors[next_error++];
      out += fmt::format("{},,,,,,,,,,,,,,,{}", e.line, quote(e.message));
      for (std::size_t k = 0; k < ev.methods.size(); ++k) out += ",,";
      out += '\n';
    }
  };

  for (const auto& row : ev.rows) {
    const auto& r = *row.record;
    flush_errors_before(r.line);
    const double fu = r.fu ? *r.fu : std::max(1.25 * r.fy, r.fy + 50.0);
    const double Es = r.Es ? *r.Es : kDefaultSteelModulus;
    const double dmax = r.dmax ? *r.dmax : kDefaultAggregateSize;
    out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{:.6g},{},{},", r.line, quote(r.source_id), r.D,
                       r.t, r.L, r.fy, fu, Es, r.fc_measured, to_string(r.fc_kind), dmax, r.N_test_kN,
                       row.strength.fc, to_string(row.strength.cls), join(row.defaulted, ";"));
    for (const auto& p : row.predictions) out += fmt::format(",{:.1f},{}", p.kN(), p.applicable() ? 1 : 0);
    out += '\n';
  }
  flush_errors_before(static_cast<std::size_t>(-1));
  return out;
}

}  // namespace cfst
