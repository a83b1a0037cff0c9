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

// Full-range stress-strain law for the steel tube: linear elastic, yield
// plateau, power-law strain hardening up to f_u, then constant at f_u.

#include <cmath>

#include "cfst/section.hpp"

namespace cfst {

struct SteelCurveParams {
  double eps_y = 0.0;  ///< yield strain
  double eps_p = 0.0;  ///< onset of strain hardening
  double eps_u = 0.0;  ///< strain at f_u
  double p = 0.0;      ///< hardening exponent; 0 when degenerate
  double E_p = 0.0;    ///< modulus at hardening onset, 0.02 E_s
  bool degenerate = false;    ///< f_u == f_y: hardening replaced by plateau
  bool extrapolated = false;  ///< f_y above 800 MPa
};

inline SteelCurveParams steel_curve_params(const SteelMaterial& steel) {
  steel.validate();
  SteelCurveParams c;
  c.eps_y = steel.fy / steel.Es;
  c.E_p = 0.02 * steel.Es;
  if (steel.fy <= 300.0) {
    c.eps_p = 15.0 * c.eps_y;
    c.eps_u = 100.0 * c.eps_y;
  } else {
    c.eps_p = (15.0 - 0.018 * (steel.fy - 300.0)) * c.eps_y;
    c.eps_u = (100.0 - 0.15 * (steel.fy - 300.0)) * c.eps_y;
    c.extrapolated = steel.fy > 800.0;
  }
  if (!(c.eps_y < c.eps_p && c.eps_p < c.eps_u))
    throw InputError("steel: f_y too high for the hardening-strain extrapolation");
  if (steel.fu == steel.fy) {
    c.degenerate = true;
  } else {
    c.p = c.E_p * (c.eps_u - c.eps_p) / (steel.fu - steel.fy);
  }
  return c;
}

/// Stress at a non-negative strain magnitude.
inline double steel_stress(double eps, const SteelMaterial& steel, const SteelCurveParams& c) {
  if (!(eps >= 0.0)) throw InputError("steel: strain must be non-negative");
  if (eps <= c.eps_y) return eps == c.eps_y ? steel.fy : steel.Es * eps;
  if (eps <= c.eps_p || c.degenerate) return eps >= c.eps_u ? steel.fu : steel.fy;
  if (eps >= c.eps_u) return steel.fu;
  const double r = (c.eps_u - eps) / (c.eps_u - c.eps_p);
  return steel.fu - (steel.fu - steel.fy) * std::pow(r, c.p);
}

inline double steel_stress(double eps, const SteelMaterial& steel) {
  return steel_stress(eps, steel, steel_curve_params(steel));
}

}  // namespace cfst
