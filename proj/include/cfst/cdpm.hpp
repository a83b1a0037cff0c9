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

// Parameters for a concrete damaged plasticity material definition.

#include <algorithm>
#include <cmath>

#include "cfst/section.hpp"

namespace cfst {

inline constexpr double kMaxDilationAngle = 56.3;  // degrees
inline constexpr double kFlowEccentricity = 0.1;
inline constexpr double kViscosity = 0.0;

/// f_b0 / f_c', equibiaxial to uniaxial compressive strength.
inline double biaxial_ratio(double fc) { return 1.5 / std::pow(fc, 0.075); }

inline double kc(double fc) { return 5.5 / (5.0 + 2.0 * std::pow(fc, 0.075)); }

/// Dilation angle in degrees as a function of the confinement factor.
inline double dilation_angle(double xi_c) {
  const double psi = xi_c <= 0.5 ? kMaxDilationAngle * (1.0 - xi_c)
                                 : 6.672 * std::exp(7.4 / (4.64 + xi_c));
  return std::clamp(psi, 0.0, kMaxDilationAngle);
}

/// Tensile fracture energy in N/mm; d_max in mm.
inline double fracture_energy(double fc, double dmax) {
  return (0.00469 * dmax * dmax - 0.5 * dmax + 26.0) * std::pow(fc / 10.0, 0.7) * 1e-3;
}

struct CdpmParameterSet {
  double psi = 0.0;
  double ecc = kFlowEccentricity;
  double fb0_ratio = 0.0;
  double K_c = 0.0;
  double viscosity = kViscosity;
  double G_f = 0.0;
};

inline CdpmParameterSet cdpm_parameters(const ColumnSpec& col) {
  CdpmParameterSet p;
  p.psi = dilation_angle(col.xi_c());
  p.fb0_ratio = biaxial_ratio(col.fc());
  p.K_c = kc(col.fc());
  p.G_f = fracture_energy(col.fc(), col.concrete().dmax);
  return p;
}

}  // namespace cfst
