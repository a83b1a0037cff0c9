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

// Confined core concrete: rational ascending branch up to the unconfined peak,
// a plateau at f_c' while the tube mobilises confinement, and an exponential
// softening branch decaying towards a residual stress.

#include <algorithm>
#include <cmath>

#include "cfst/section.hpp"

namespace cfst {

/// Strain at peak stress of unconfined concrete. Fitted for 6 <= f_c <= 105 MPa.
inline double peak_strain_unconfined(double fc) {
  return (-0.067 * fc * fc + 29.9 * fc + 1053.0) * 1e-6;
}

inline bool peak_strain_outside_fit(double fc) { return fc < 6.0 || fc > 105.0; }

/// Lateral confining pressure at ultimate (MPa). The f_c term in the
/// denominator is numerically negligible and kept as published.
inline double confining_pressure(double fy, double fc, double dt_ratio) {
  return (1.0 + 0.03224 * fy) / (1.0 + 1.52e-6 * std::pow(fc, -4.5)) *
         std::exp(-0.0212 * dt_ratio);
}

inline double confined_peak_strain(double eps_c0, double fr, double fc) {
  return eps_c0 * (1.0 + 17.4 * std::pow(fr / fc, 1.06));
}

/// Residual stress of the softening branch, capped at 0.25 f_c.
inline double residual_stress(double xi_c, double fc) {
  return std::min(0.7 * (1.0 - std::exp(-1.38 * xi_c)) * fc, 0.25 * fc);
}

struct SofteningShape {
  double alpha = 0.0;
  double beta = 1.2;
};

inline SofteningShape softening_params(double xi_c) {
  return {0.04 - 0.036 / (1.0 + std::exp(6.08 * xi_c - 3.49)), 1.2};
}

struct ConfinedConcreteParams {
  double eps_c0 = 0.0;
  double f_r = 0.0;
  double eps_cc = 0.0;
  double f_re = 0.0;
  double alpha = 0.0;
  double beta = 1.2;
};

/// Composes the confined-concrete parameters for a column. With
/// `confined == false` the confining pressure is forced to zero, so the
/// plateau collapses and softening starts at the unconfined peak.
inline ConfinedConcreteParams confined_concrete_params(const ColumnSpec& col, bool confined = true) {
  ConfinedConcreteParams p;
  p.eps_c0 = peak_strain_unconfined(col.fc());
  if (!(p.eps_c0 > 0.0)) throw InputError("concrete: f_c outside the peak-strain regression domain");
  p.f_r = confined ? confining_pressure(col.fy(), col.fc(), col.dt_ratio()) : 0.0;
  p.eps_cc = confined_peak_strain(p.eps_c0, p.f_r, col.fc());
  p.f_re = residual_stress(col.xi_c(), col.fc());
  const auto shape = softening_params(col.xi_c());
  p.alpha = shape.alpha;
  p.beta = shape.beta;
  return p;
}

inline double concrete_stress(double eps, double fc, double Ec, const ConfinedConcreteParams& p) {
  if (!(eps >= 0.0)) throw InputError("concrete: strain must be non-negative");
  if (eps < p.eps_c0) {
    const double A = Ec * p.eps_c0 / fc;
    const double B = (A - 1.0) * (A - 1.0) / 0.55 - 1.0;
    const double x = eps / p.eps_c0;
    return fc * (A * x + B * x * x) / (1.0 + (A - 2.0) * x + (B + 1.0) * x * x);
  }
  if (eps <= p.eps_cc) return fc;
  const double s = (eps - p.eps_cc) / p.alpha;
  return p.f_re + (fc - p.f_re) * std::exp(-std::pow(s, p.beta));
}

}  // namespace cfst
