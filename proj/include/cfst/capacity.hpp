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

// Ultimate axial load predictors for circular CFST stub columns: five design
// codes, seven published formulas and the eta_c / eta_s design formula.
//
// Every predictor returns its load even when the column falls outside the
// method's published limits; the applicability report is a filter for
// statistics, not a failure. Non-physical intermediates are surfaced as
// diagnostics and never clamped.

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cfst/section.hpp"

namespace cfst {

enum class MethodId {
  EC4,
  AISC,
  CISC,
  DBJ,
  ACI,
  OSHEA,
  YU,
  LIU,
  SUN,
  ZHONG_MIAO,
  GUO,
  DE_OLIVEIRA,
  PROPOSED,
};

inline constexpr std::array<MethodId, 13> kAllMethods{
    MethodId::EC4,  MethodId::AISC, MethodId::CISC, MethodId::DBJ,        MethodId::ACI,
    MethodId::OSHEA, MethodId::YU,  MethodId::LIU,  MethodId::SUN,        MethodId::ZHONG_MIAO,
    MethodId::GUO,  MethodId::DE_OLIVEIRA, MethodId::PROPOSED};

inline std::string_view to_string(MethodId m) {
  switch (m) {
    case MethodId::EC4: return "EC4";
    case MethodId::AISC: return "AISC";
    case MethodId::CISC: return "CISC";
    case MethodId::DBJ: return "DBJ";
    case MethodId::ACI: return "ACI";
    case MethodId::OSHEA: return "OSHEA";
    case MethodId::YU: return "YU";
    case MethodId::LIU: return "LIU";
    case MethodId::SUN: return "SUN";
    case MethodId::ZHONG_MIAO: return "ZHONG_MIAO";
    case MethodId::GUO: return "GUO";
    case MethodId::DE_OLIVEIRA: return "DE_OLIVEIRA";
    case MethodId::PROPOSED: return "PROPOSED";
  }
  return "?";
}

/// Case-insensitive lookup by identifier ("ec4", "DE_OLIVEIRA", ...).
inline std::optional<MethodId> parse_method(std::string_view s) {
  std::string upper(s);
  for (char& c : upper)
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  for (MethodId m : kAllMethods)
    if (to_string(m) == upper) return m;
  return std::nullopt;
}

enum class OliveiraMode { AS_PRINTED, CORRECTED };

/// Values the published formulas leave open. Passed by value; never global.
struct CapacitySettings {
  double K_e = 0.6;            ///< EC4 concrete stiffness factor in (EI)_eff
  double K = 1.0;              ///< effective length factor
  double r_cc = 1.0;           ///< CISC C_fs / C_f
  double fck_factor = 0.67;    ///< DBJ characteristic / cube strength
  double zhong_miao_p0 = 0.0;  ///< Zhong-Miao p_0 (MPa)
  OliveiraMode oliveira_mode = OliveiraMode::AS_PRINTED;
};

struct Violation {
  std::string limit;  ///< printed bound, e.g. "f_c' ≥ 17.2 MPa"
  double bound = 0.0;
  double actual = 0.0;
};

struct ApplicabilityReport {
  std::vector<Violation> violations;
  bool applicable() const { return violations.empty(); }
};

namespace diag {
inline constexpr std::string_view kNonPhysicalConfinedStress = "NON_PHYSICAL_CONFINED_STRESS";
inline constexpr std::string_view kNonPhysicalSlendernessFactor = "NON_PHYSICAL_SLENDERNESS_FACTOR";
inline constexpr std::string_view kOutsideFittedRange = "OUTSIDE_FITTED_RANGE";
inline constexpr std::string_view kLiuConfiningPressureMismatch = "LIU_SIGMA_R_FORMS_DISAGREE";
inline constexpr std::string_view kAiscC3AboveCap = "AISC_C3_ABOVE_0.9";
inline constexpr std::string_view kDbjUhscConversion = "DBJ_FCK_UNDEFINED_FOR_UHSC";
inline constexpr std::string_view kOutsideDatabaseEnvelope = "OUTSIDE_DATABASE_ENVELOPE";
}  // namespace diag

struct CapacityPrediction {
  MethodId method = MethodId::ACI;
  double N = 0.0;  ///< ultimate load, N
  ApplicabilityReport applicability;
  std::map<std::string, double> intermediates;
  std::vector<std::string> diagnostics;

  double kN() const { return N / 1000.0; }
  bool applicable() const { return applicability.applicable(); }
};

namespace detail {

inline void require_max(ApplicabilityReport& r, std::string label, double actual, double bound) {
  if (!(actual <= bound)) r.violations.push_back({std::move(label), bound, actual});
}

inline void require_min(ApplicabilityReport& r, std::string label, double actual, double bound) {
  if (!(actual >= bound)) r.violations.push_back({std::move(label), bound, actual});
}

inline void require_range(ApplicabilityReport& r, std::string label, double actual, double lo,
                          double hi) {
  if (!(actual >= lo)) {
    r.violations.push_back({std::move(label), lo, actual});
  } else if (!(actual <= hi)) {
    r.violations.push_back({std::move(label), hi, actual});
  }
}

}  // namespace detail

/// Evaluates exactly the published bounds of a method. Methods without
/// published limits are always applicable.
inline ApplicabilityReport check_applicability(MethodId method, const ColumnSpec& c) {
  using detail::require_max;
  using detail::require_min;
  using detail::require_range;
  if (static_cast<int>(method) < 0 || static_cast<int>(method) > static_cast<int>(MethodId::PROPOSED))
    throw InputError("unknown method");
  ApplicabilityReport r;
  switch (method) {
    case MethodId::EC4:
    case MethodId::ACI:
      require_max(r, "D/t ≤ √(8E_s/f_y)", c.dt_ratio(), std::sqrt(8.0 * c.Es() / c.fy()));
      require_min(r, "f_c' ≥ 17.2 MPa", c.fc(), 17.2);
      break;
    case MethodId::AISC:
      require_max(r, "D/t ≤ 0.15E_s/f_y", c.dt_ratio(), 0.15 * c.Es() / c.fy());
      require_max(r, "f_y ≤ 525 MPa", c.fy(), 525.0);
      require_range(r, "21 ≤ f_c' ≤ 70 MPa", c.fc(), 21.0, 70.0);
      break;
    case MethodId::DBJ:
      require_max(r, "D/t ≤ 150·235/f_y", c.dt_ratio(), 150.0 * 235.0 / c.fy());
      require_range(r, "235 ≤ f_y ≤ 420 MPa", c.fy(), 235.0, 420.0);
      require_range(r, "24 ≤ f_c' ≤ 70 MPa", c.fc(), 24.0, 70.0);
      break;
    case MethodId::OSHEA:
      require_max(r, "D/t ≤ 200", c.dt_ratio(), 200.0);
      break;
    case MethodId::YU:
      require_range(r, "235 ≤ f_y ≤ 345 MPa", c.fy(), 235.0, 345.0);
      require_range(r, "30 ≤ f_c' ≤ 60 MPa", c.fc(), 30.0, 60.0);
      require_range(r, "0.2 ≤ ξ ≤ 2", c.xi_c(), 0.2, 2.0);
      break;
    case MethodId::GUO:
      require_max(r, "ξ ≤ 1.7", c.xi_c(), 1.7);
      break;
    case MethodId::DE_OLIVEIRA:
      require_range(r, "1 ≤ L/D ≤ 10", c.ld_ratio(), 1.0, 10.0);
      break;
    case MethodId::CISC:
    case MethodId::LIU:
    case MethodId::SUN:
    case MethodId::ZHONG_MIAO:
    case MethodId::PROPOSED:
      break;
  }
  return r;
}

inline CapacityPrediction make_prediction(MethodId m, const ColumnSpec& c) {
  CapacityPrediction p;
  p.method = m;
  p.applicability = check_applicability(m, c);
  return p;
}

// ---------------------------------------------------------------------------
// Design codes

inline CapacityPrediction predict_aci(const ColumnSpec& c) {
  auto p = make_prediction(MethodId::ACI, c);
  p.N = c.As() * c.fy() + 0.85 * c.Ac() * c.fc();
  return p;
}

/// EC4 steel coefficient, capped at 1.
inline double ec4_eta_a(double lambda_bar) { return std::min(0.25 * (3.0 + 2.0 * lambda_bar), 1.0); }

/// EC4 confinement coefficient, floored at 0.
inline double ec4_eta_c(double lambda_bar) {
  return std::max(4.9 - 18.5 * lambda_bar + 17.0 * lambda_bar * lambda_bar, 0.0);
}

struct Ec4Coefficients {
  double lambda_bar = 0.0;
  double eta_a = 0.0;
  double eta_c_ec4 = 0.0;
  double N_pl_Rk = 0.0;
  double N_cr = 0.0;
};

inline Ec4Coefficients ec4_coefficients(const ColumnSpec& c, const CapacitySettings& s = {}) {
  const auto I = section_inertias(c.section());
  const double EI_eff = c.Es() * I.steel + s.K_e * c.Ec() * I.core;
  const double l = s.K * c.L();
  Ec4Coefficients k;
  k.N_cr = kPi * kPi * EI_eff / (l * l);
  k.N_pl_Rk = c.fy() * c.As() + 0.85 * c.fc() * c.Ac();
  k.lambda_bar = std::sqrt(k.N_pl_Rk / k.N_cr);
  k.eta_a = ec4_eta_a(k.lambda_bar);
  k.eta_c_ec4 = ec4_eta_c(k.lambda_bar);
  return k;
}

inline CapacityPrediction predict_ec4(const ColumnSpec& c, const CapacitySettings& s = {}) {
  auto p = make_prediction(MethodId::EC4, c);
  const auto k = ec4_coefficients(c, s);
  p.N = k.eta_a * c.As() * c.fy() +
        c.Ac() * c.fc() * (1.0 + k.eta_c_ec4 * (c.t() * c.fy()) / (c.D() * c.fc()));
  p.intermediates = {{"lambda_bar", k.lambda_bar},
                     {"eta_a", k.eta_a},
                     {"eta_c_ec4", k.eta_c_ec4},
                     {"N_pl_Rk", k.N_pl_Rk},
                     {"N_cr", k.N_cr}};
  return p;
}

/// Column curve of AISC 360: inelastic branch while P_e > 0.44 P_0.
inline double aisc_strength(double P0, double Pe) {
  return Pe > 0.44 * P0 ? P0 * std::pow(0.658, P0 / Pe) : 0.877 * Pe;
}

inline CapacityPrediction predict_aisc(const ColumnSpec& c, const CapacitySettings& s = {}) {
  auto p = make_prediction(MethodId::AISC, c);
  const auto I = section_inertias(c.section());
  const double P0 = 0.95 * c.fc() * c.Ac() + c.fy() * c.As();
  const double C3 = 0.6 + 2.0 * c.As() / (c.As() + c.Ac());
  const double EI_eff = c.Es() * I.steel + C3 * c.Ec() * I.core;
  const double kl = s.K * c.L();
  const double Pe = kPi * kPi * EI_eff / (kl * kl);
  p.N = aisc_strength(P0, Pe);
  p.intermediates = {{"P_0", P0}, {"C_3", C3}, {"P_e", Pe}};
  if (C3 > 0.9) p.diagnostics.emplace_back(diag::kAiscC3AboveCap);
  return p;
}

inline CapacityPrediction predict_cisc(const ColumnSpec& c, const CapacitySettings& s = {}) {
  auto p = make_prediction(MethodId::CISC, c);
  const double ld = c.ld_ratio();
  double rho = 0.0, tau = 1.0, tau_p = 1.0;
  if (ld < 25.0) {
    rho = 0.02 * (25.0 - ld);
    tau = 1.0 / std::sqrt(1.0 + rho + rho * rho);
    tau_p = 1.0 + (25.0 * rho * rho * tau / c.dt_ratio()) * (c.fy() / (0.8 * c.fc()));
  }
  const auto I = section_inertias(c.section());
  const double base = tau * c.As() * c.fy() + tau_p * 0.85 * c.Ac() * c.fc();
  const double kl = s.K * c.L();
  const double Pe = kPi * kPi * (c.Es() * I.steel + 0.6 * c.Ec() * I.core / s.r_cc) / (kl * kl);
  const double lambda = std::sqrt(base / Pe);
  p.N = base * std::pow(1.0 + std::pow(lambda, 3.6), -0.556);
  p.intermediates = {{"rho", rho}, {"tau", tau}, {"tau_prime", tau_p}, {"lambda", lambda}};
  return p;
}

inline CapacityPrediction predict_dbj(const ColumnSpec& c, const CapacitySettings& s = {}) {
  auto p = make_prediction(MethodId::DBJ, c);
  // Back-convert f_c' to the 150 mm cube strength with the class factors.
  double cube_factor = 0.88;
  switch (classify_concrete(c.fc())) {
    case ConcreteClass::NSC: cube_factor = 0.88; break;
    case ConcreteClass::HSC: cube_factor = 0.98; break;
    case ConcreteClass::UHSC:
      cube_factor = 0.98;
      p.diagnostics.emplace_back(diag::kDbjUhscConversion);
      break;
  }
  const double fcu = c.fc() / cube_factor;
  const double fck = s.fck_factor * fcu;
  const double xi = c.fy() * c.As() / (fck * c.Ac());
  const double fsc = fck * (1.14 + 1.02 * xi);
  p.N = fsc * (c.As() + c.Ac());
  p.intermediates = {{"f_cu150", fcu}, {"f_ck", fck}, {"xi_dbj", xi}, {"f_sc", fsc}};
  return p;
}

// ---------------------------------------------------------------------------
// Published formulas

inline CapacityPrediction predict_oshea(const ColumnSpec& c) {
  auto p = make_prediction(MethodId::OSHEA, c);
  const double fc = c.fc();
  const double fy = c.fy();
  const double P_yield = 2.0 * fy * c.t() / (c.D() - 2.0 * c.t());
  const double pr = P_yield * (0.7 - std::sqrt(fc / fy)) * (10.0 / 3.0);
  double sigma_cp = 0.0;
  if (fc <= 50.0) {
    const double fl = 0.558 * std::sqrt(fc);
    sigma_cp = fc * (-1.228 + 2.172 * std::sqrt(1.0 + 7.46 * fl / fc) - 2.0 * pr / fc);
    p.intermediates["f_l"] = fl;
  } else {
    const double k = 1.25 * (1.0 + 0.062 * pr / fc) * std::pow(fc, -0.21);
    sigma_cp = fc * std::pow(pr / fc + 1.0, k);
    p.intermediates["k"] = k;
    if (fc > 100.0) p.diagnostics.emplace_back(diag::kOutsideFittedRange);
  }
  if (!(sigma_cp > 0.0)) p.diagnostics.emplace_back(diag::kNonPhysicalConfinedStress);
  p.intermediates["p"] = pr;
  p.intermediates["sigma_cp"] = sigma_cp;
  p.N = sigma_cp * c.Ac() + c.As() * fy;
  return p;
}

inline CapacityPrediction predict_yu(const ColumnSpec& c) {
  auto p = make_prediction(MethodId::YU, c);
  const double fcc = (1.14 + 1.34 * c.xi_c()) * c.fc();
  p.N = fcc * c.Ac();
  p.intermediates = {{"f_cc", fcc}};
  return p;
}

inline CapacityPrediction predict_liu(const ColumnSpec& c) {
  auto p = make_prediction(MethodId::LIU, c);
  const double sigma_v = 0.61 * c.fy();
  const double sigma_h = 0.54 * c.fy();
  const double sigma_r = 2.0 * c.t() * sigma_h / (c.D() - 2.0 * c.t());
  const double sigma_r_short = 1.08 * c.t() * c.fy() / c.D();
  const double sigma_cp = c.fc() + 4.1 * sigma_r;
  p.N = sigma_v * c.As() + sigma_cp * c.Ac();
  p.intermediates = {{"sigma_v", sigma_v},
                     {"sigma_h", sigma_h},
                     {"sigma_r", sigma_r},
                     {"sigma_r_simplified", sigma_r_short},
                     {"sigma_cp", sigma_cp}};
  if (std::abs(sigma_r - sigma_r_short) > 1e-9 * std::abs(sigma_r))
    p.diagnostics.emplace_back(diag::kLiuConfiningPressureMismatch);
  return p;
}

inline CapacityPrediction predict_sun(const ColumnSpec& c) {
  const double dt = c.dt_ratio();
  if (!(dt > 2.0)) throw InputError("Sun: D/t must exceed 2");
  auto p = make_prediction(MethodId::SUN, c);
  const double fcc = c.fc() * (1.0 + 8.2 * ((dt - 1.0) * c.fy()) / ((dt - 2.0) * (dt - 2.0) * c.fc()));
  p.N = fcc * c.Ac();
  p.intermediates = {{"f_cc", fcc}};
  return p;
}

inline CapacityPrediction predict_zhong_miao(const ColumnSpec& c, double p0 = 0.0) {
  if (!(p0 >= 0.0)) throw InputError("Zhong-Miao: p_0 must be non-negative");
  auto p = make_prediction(MethodId::ZHONG_MIAO, c);
  const double xi = c.xi_c();
  const double mu = -0.5 - 1.0 / (2.0 * (xi + 1.0));
  const double steel_factor = (mu + 2.0) / std::sqrt(3.0 * (mu * mu + mu + 1.0));
  const double Ns = steel_factor * c.fy() * c.As();
  const double Nc = (c.fc() + 4.0 * p0) * c.Ac();
  p.N = Ns + Nc;
  p.intermediates = {{"mu_prime", mu}, {"steel_factor", steel_factor}, {"N_s", Ns}, {"N_c", Nc},
                     {"p_0", p0}};
  return p;
}

inline CapacityPrediction predict_guo(const ColumnSpec& c) {
  auto p = make_prediction(MethodId::GUO, c);
  const double xi = c.xi_c();
  const double fcc = c.fc() * (1.0 + std::sqrt(xi) + 1.1 * xi);
  p.N = fcc * c.Ac();
  p.intermediates = {{"f_cc", fcc}};
  return p;
}

inline CapacityPrediction predict_oliveira(const ColumnSpec& c, OliveiraMode mode = OliveiraMode::AS_PRINTED) {
  auto p = make_prediction(MethodId::DE_OLIVEIRA, c);
  const double ld = c.ld_ratio();
  double lambda = 1.0;
  if (ld > 3.0) {
    lambda = mode == OliveiraMode::AS_PRINTED ? -0.18 * std::log(ld) : 1.0 - 0.18 * std::log(ld / 3.0);
  }
  if (!(lambda > 0.0)) p.diagnostics.emplace_back(diag::kNonPhysicalSlendernessFactor);
  p.N = (c.Ac() * c.fc() + c.As() * c.fy()) * lambda;
  p.intermediates = {{"lambda", lambda}};
  return p;
}

// ---------------------------------------------------------------------------
// eta_c / eta_s design formula

/// Steel diminution factor. Reported unclamped.
inline double eta_s(double alpha_s, double fc, double fy) {
  return (1.923 - 1.229 * std::log(0.003 * fy)) * std::pow(alpha_s * fc / fy, 0.47);
}

/// Concrete intensification factor. Reported unclamped.
inline double eta_c(double dt_ratio, double fc, double xi_c) {
  return 0.85 + 0.3 * std::pow(dt_ratio, 0.328) * std::pow(fc, 0.1) * xi_c;
}

struct ProposedFactors {
  double eta_c = 0.0;
  double eta_s = 0.0;
};

inline ProposedFactors proposed_factors(const ColumnSpec& c) {
  return {eta_c(c.dt_ratio(), c.fc(), c.xi_c()), eta_s(c.alpha_s(), c.fc(), c.fy())};
}

inline CapacityPrediction predict_proposed(const ColumnSpec& c) {
  auto p = make_prediction(MethodId::PROPOSED, c);
  const auto f = proposed_factors(c);
  p.N = f.eta_c * c.Ac() * c.fc() + f.eta_s * c.As() * c.fy();
  p.intermediates = {{"eta_c", f.eta_c}, {"eta_s", f.eta_s}};
  const bool outside = c.fy() < 185.7 || c.fy() > 853.0 || c.fc() < 12.5 || c.fc() > 185.6 ||
                       c.dt_ratio() < 10.1 || c.dt_ratio() > 220.9 || c.ld_ratio() < 0.8 ||
                       c.ld_ratio() > 5.0;
  if (outside) p.diagnostics.emplace_back(diag::kOutsideDatabaseEnvelope);
  return p;
}

inline CapacityPrediction predict(MethodId m, const ColumnSpec& c, const CapacitySettings& s = {}) {
  switch (m) {
    case MethodId::EC4: return predict_ec4(c, s);
    case MethodId::AISC: return predict_aisc(c, s);
    case MethodId::CISC: return predict_cisc(c, s);
    case MethodId::DBJ: return predict_dbj(c, s);
    case MethodId::ACI: return predict_aci(c);
    case MethodId::OSHEA: return predict_oshea(c);
    case MethodId::YU: return predict_yu(c);
    case MethodId::LIU: return predict_liu(c);
    case MethodId::SUN: return predict_sun(c);
    case MethodId::ZHONG_MIAO: return predict_zhong_miao(c, s.zhong_miao_p0);
    case MethodId::GUO: return predict_guo(c);
    case MethodId::DE_OLIVEIRA: return predict_oliveira(c, s.oliveira_mode);
    case MethodId::PROPOSED: return predict_proposed(c);
  }
  throw InputError("unknown method");
}

}  // namespace cfst
