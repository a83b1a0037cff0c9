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

// Command-line front end. The logic lives here so tests can drive it with
// in-memory streams; cfst_main.cpp only forwards argv.
//
//   cfst predict  --D --t --L --fy [--fu --Es] --fc [--fc-kind] [--method all|id,...]
//   cfst curve    <column> --material steel|concrete [--n 200] [--eps-max]
//   cfst cdpm     <column> [--n 200] [--eps-max 0.03]
//   cfst respond  <column> [--n 200] [--eps-max 0.03]
//   cfst batch    --input FILE [--method ...] [--out FILE] [--summary FILE]
//
// Exit codes: 0 success, 2 usage or input error.

#include <fmt/format.h>

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cfst/cfst.hpp"

namespace cfst::cli {

inline constexpr int kExitUsage = 2;

struct ColumnArgs {
  double D = 0.0;
  double t = 0.0;
  double L = 0.0;
  double fy = 0.0;
  std::optional<double> fu;
  std::optional<double> Es;
  double fc = 0.0;
  std::string fc_kind = "CYL150";
  std::optional<double> dmax;
};

struct ConfigArgs {
  double K_e = 0.6;
  double K = 1.0;
  double r_cc = 1.0;
  double fck_factor = 0.67;
  double p0 = 0.0;
  std::string oliveira_mode = "as-printed";
  std::optional<double> Ec;
  std::string format = "table";
  std::string out_file;
};

struct ResolvedColumn {
  ColumnSpec column;
  ConvertedStrength strength;
};

inline void add_column_options(CLI::App& cmd, ColumnArgs& a) {
  cmd.add_option("--D", a.D, "outer diameter (mm)")->required();
  cmd.add_option("--t", a.t, "wall thickness (mm)")->required();
  cmd.add_option("--L", a.L, "column length (mm)")->required();
  cmd.add_option("--fy", a.fy, "steel yield strength (MPa)")->required();
  cmd.add_option("--fu", a.fu, "steel ultimate strength (MPa); default max(1.25 fy, fy + 50)");
  cmd.add_option("--Es", a.Es, "steel modulus (MPa); default 200000");
  cmd.add_option("--fc", a.fc, "measured concrete strength (MPa)")->required();
  cmd.add_option("--fc-kind", a.fc_kind, "specimen kind of --fc")
      ->check(CLI::IsMember({"CYL150", "CYL100", "CUBE150", "CUBE100"}));
  cmd.add_option("--dmax", a.dmax, "maximum aggregate size (mm); default 20");
}

inline void add_config_options(CLI::App& cmd, ConfigArgs& c) {
  cmd.add_option("--ke", c.K_e, "EC4 stiffness factor K_e")->check(CLI::PositiveNumber);
  cmd.add_option("--keff", c.K, "effective length factor K")->check(CLI::PositiveNumber);
  cmd.add_option("--rcc", c.r_cc, "CISC C_fs/C_f ratio")->check(CLI::PositiveNumber);
  cmd.add_option("--fck-factor", c.fck_factor, "DBJ f_ck / f_cu,150")->check(CLI::PositiveNumber);
  cmd.add_option("--p0", c.p0, "Zhong-Miao p_0 (MPa)")->check(CLI::NonNegativeNumber);
  cmd.add_option("--oliveira-mode", c.oliveira_mode, "De Oliveira slenderness factor")
      ->check(CLI::IsMember({"as-printed", "corrected"}));
  cmd.add_option("--ec", c.Ec, "concrete modulus override (MPa)")->check(CLI::PositiveNumber);
}

inline void add_output_options(CLI::App& cmd, ConfigArgs& c, bool with_format) {
  if (with_format)
    cmd.add_option("--format", c.format, "output format")->check(CLI::IsMember({"table", "json", "csv"}));
  cmd.add_option("--out", c.out_file, "write output to FILE instead of stdout");
}

inline ResolvedColumn resolve_column(const ColumnArgs& a, const ConfigArgs& c) {
  const auto kind = parse_specimen_kind(a.fc_kind);
  if (!kind) throw InputError("unknown --fc-kind " + a.fc_kind);
  const auto strength = convert_strength({a.fc, *kind});
  ColumnSpec col(CircularSection{a.D, a.t, a.L}, SteelMaterial::make(a.fy, a.fu, a.Es),
                 ConcreteMaterial::make(strength.fc, a.dmax, c.Ec));
  return {std::move(col), strength};
}

inline EvaluationSettings make_settings(const ConfigArgs& c) {
  EvaluationSettings s;
  s.capacity.K_e = c.K_e;
  s.capacity.K = c.K;
  s.capacity.r_cc = c.r_cc;
  s.capacity.fck_factor = c.fck_factor;
  s.capacity.zhong_miao_p0 = c.p0;
  s.capacity.oliveira_mode = c.oliveira_mode == "corrected" ? OliveiraMode::CORRECTED : OliveiraMode::AS_PRINTED;
  s.Ec_override = c.Ec;
  return s;
}

inline std::vector<MethodId> parse_method_list(const std::string& spec) {
  if (spec.empty() || spec == "all") return {kAllMethods.begin(), kAllMethods.end()};
  std::vector<MethodId> methods;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto m = parse_method(item);
    if (!m) throw InputError("unknown method '" + item + "'");
    methods.push_back(*m);
  }
  if (methods.empty()) throw InputError("empty --method list");
  return methods;
}

inline void emit(const std::string& text, const std::string& file, std::ostream& out) {
  if (file.empty()) {
    out << text;
    return;
  }
  std::ofstream f(file, std::ios::binary);
  if (!f) throw InputError("cannot write " + file);
  f << text;
}

inline std::string column_echo(const ResolvedColumn& r) {
  const auto& c = r.column;
  auto mark = [](bool d) { return d ? " (defaulted)" : ""; };
  return fmt::format(
      "# column: D={} t={} L={} mm, f_y={} f_u={}{} E_s={}{} MPa, f_c'={:.6g} MPa ({}), E_c={:.6g}{} MPa, "
      "d_max={}{} mm, xi_c={:.4g}\n",
      c.D(), c.t(), c.L(), c.fy(), c.fu(), mark(c.steel().fu_defaulted), c.Es(), mark(c.steel().Es_defaulted),
      c.fc(), to_string(r.strength.cls), c.Ec(), mark(!c.concrete().Ec_override), c.concrete().dmax,
      mark(c.concrete().dmax_defaulted), c.xi_c());
}

inline std::string render_predictions(const ResolvedColumn& rc, const std::vector<CapacityPrediction>& preds,
                                      const EvaluationSettings& settings, const std::string& format) {
  if (format == "json") {
    const auto& c = rc.column;
    nlohmann::json j;
    j["column"] = {{"D_mm", c.D()},
                   {"t_mm", c.t()},
                   {"L_mm", c.L()},
                   {"fy_MPa", c.fy()},
                   {"fu_MPa", c.fu()},
                   {"fu_defaulted", c.steel().fu_defaulted},
                   {"Es_MPa", c.Es()},
                   {"Es_defaulted", c.steel().Es_defaulted},
                   {"fc_MPa", c.fc()},
                   {"fc_class", std::string(to_string(rc.strength.cls))},
                   {"Ec_MPa", c.Ec()},
                   {"Ec_defaulted", !c.concrete().Ec_override.has_value()},
                   {"dmax_mm", c.concrete().dmax},
                   {"dmax_defaulted", c.concrete().dmax_defaulted},
                   {"xi_c", c.xi_c()}};
    j["config"] = settings_json(settings);
    j["predictions"] = nlohmann::json::array();
    for (const auto& p : preds) j["predictions"].push_back(prediction_json(p));
    return j.dump(2) + "\n";
  }
  if (format == "csv") {
    std::string out = "method,N_u_kN,applicable,violations,diagnostics,intermediates\n";
    auto q = [](const std::string& s) { return s.empty() ? s : "\"" + s + "\""; };
    for (const auto& p : preds)
      out += fmt::format("{},{:.1f},{},{},{},{}\n", to_string(p.method), p.kN(), p.applicable() ? 1 : 0,
                         q(violations_text(p.applicability)), q(join(p.diagnostics, ";")),
                         q(intermediates_text(p.intermediates)));
    return out;
  }
  std::string out = column_echo(rc);
  out += fmt::format("{:<12} {:>10}  {:<10}  {}\n", "method", "N_u_kN", "applicable", "notes");
  for (const auto& p : preds) {
    std::string notes = violations_text(p.applicability);
    if (!p.diagnostics.empty()) notes += (notes.empty() ? "" : "; ") + join(p.diagnostics, ",");
    const std::string inter = intermediates_text(p.intermediates);
    if (!inter.empty()) notes += (notes.empty() ? "" : "; ") + inter;
    std::string line = fmt::format("{:<12} {:>10.1f}  {:<10}  {}", to_string(p.method), p.kN(),
                                   p.applicable() ? "yes" : "no", notes);
    line.erase(line.find_last_not_of(' ') + 1);
    out += line + "\n";
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

/// Runs the CLI with the given arguments; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Axial capacity, constitutive curves and CDPM cards for circular CFST stub columns", "cfst"};
  app.require_subcommand(1);

  ColumnArgs col;
  ConfigArgs cfg;
  std::string methods = "all";
  std::string material;
  std::size_t n = 200;
  std::optional<double> eps_max;
  std::string input, summary_file;
  unsigned threads = 1;

  auto* predict = app.add_subcommand("predict", "ultimate axial load by each method");
  add_column_options(*predict, col);
  add_config_options(*predict, cfg);
  add_output_options(*predict, cfg, true);
  predict->add_option("--method", methods, "all or a comma-separated list of method ids");

  auto* curve = app.add_subcommand("curve", "sampled stress-strain curve as CSV");
  add_column_options(*curve, col);
  curve->add_option("--ec", cfg.Ec, "concrete modulus override (MPa)")->check(CLI::PositiveNumber);
  add_output_options(*curve, cfg, false);
  curve->add_option("--material", material, "steel or concrete")
      ->required()
      ->check(CLI::IsMember({"steel", "concrete"}));
  curve->add_option("--n", n, "number of samples (>= 2)");
  curve->add_option("--eps-max", eps_max, "last strain; default 0.03 (concrete) or eps_u (steel)");

  auto* cdpm = app.add_subcommand("cdpm", "concrete damaged plasticity material card");
  add_column_options(*cdpm, col);
  cdpm->add_option("--ec", cfg.Ec, "concrete modulus override (MPa)")->check(CLI::PositiveNumber);
  add_output_options(*cdpm, cfg, false);
  cdpm->add_option("--n", n, "compression table samples");
  cdpm->add_option("--eps-max", eps_max, "last strain of the compression table; default 0.03");

  auto* respond = app.add_subcommand("respond", "axial load-strain response by fiber superposition");
  add_column_options(*respond, col);
  respond->add_option("--ec", cfg.Ec, "concrete modulus override (MPa)")->check(CLI::PositiveNumber);
  add_output_options(*respond, cfg, false);
  respond->add_option("--n", n, "number of samples (>= 8)");
  respond->add_option("--eps-max", eps_max, "last strain; default 0.03");

  auto* batch = app.add_subcommand("batch", "evaluate a specimen dataset");
  add_config_options(*batch, cfg);
  batch->add_option("--input", input, "dataset CSV")->required();
  batch->add_option("--method", methods, "all or a comma-separated list of method ids");
  batch->add_option("--out", cfg.out_file, "per-row CSV output file (default stdout)");
  batch->add_option("--summary", summary_file, "JSON summary output file (default stdout)");
  batch->add_option("--threads", threads, "worker threads; 0 = hardware concurrency");

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front())
      err << sub->help();
    return kExitUsage;
  }

  try {
    if (predict->parsed()) {
      const auto rc = resolve_column(col, cfg);
      const auto settings = make_settings(cfg);
      std::vector<CapacityPrediction> preds;
      for (MethodId m : parse_method_list(methods)) preds.push_back(cfst::predict(m, rc.column, settings.capacity));
      emit(render_predictions(rc, preds, settings, cfg.format), cfg.out_file, out);
    } else if (curve->parsed()) {
      const auto rc = resolve_column(col, cfg);
      StressStrainCurve c;
      if (material == "steel") {
        const double e = eps_max ? *eps_max : steel_curve_params(rc.column.steel()).eps_u;
        c = sample_steel_curve(rc.column.steel(), n, e);
      } else {
        c = sample_concrete_curve(rc.column, n, eps_max.value_or(0.03));
      }
      emit(curve_csv(c), cfg.out_file, out);
    } else if (cdpm->parsed()) {
      const auto rc = resolve_column(col, cfg);
      emit(material_card(rc.column, n, eps_max.value_or(0.03)), cfg.out_file, out);
    } else if (respond->parsed()) {
      const auto rc = resolve_column(col, cfg);
      const auto r = response_curve(rc.column, eps_max.value_or(0.03), n);
      emit(response_csv(r), cfg.out_file, out);
      err << fmt::format("peak_load_kN={:.1f} peak_strain={:.6g} residual_load_kN={:.1f}\n", r.peak_load / 1000.0,
                         r.peak_strain, r.residual_load / 1000.0);
    } else if (batch->parsed()) {
      const auto parsed = parse_dataset(read_file(input));
      for (const auto& e : parsed.errors) err << fmt::format("{}:{}: {}\n", input, e.line, e.message);
      auto settings = make_settings(cfg);
      settings.threads = threads;
      const auto ev = evaluate_dataset(parsed.records, parse_method_list(methods), settings);
      emit(evaluation_rows_csv(ev, parsed.errors), cfg.out_file, out);
      emit(evaluation_summary_json(ev, settings).dump(2) + "\n", summary_file, out);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}

}  // namespace cfst::cli
