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

// Solver-neutral material card for the core concrete. Keyword sections:
//   [ELASTIC]            E_c  poisson
//   [CDPM]               dilation_angle  eccentricity  fb0/fc  K_c  viscosity
//   [COMPRESSION TABLE]  strain  stress   (confined curve)
//   [TENSION]            G_f
// The [CDPM] order follows the usual damaged-plasticity keyword order.

#include <fmt/format.h>

#include <cstddef>
#include <string>

#include "cfst/cdpm.hpp"
#include "cfst/curves.hpp"
#include "cfst/section.hpp"

namespace cfst {

inline constexpr double kConcretePoisson = 0.2;

// Finite-element modelling constants echoed in the card header only.
inline constexpr double kInterfaceFriction = 0.6;
inline constexpr double kImperfectionDivisor = 1000.0;  // amplitude L/1000
inline constexpr double kMeshDivisor = 10.0;            // element size D/10

inline std::string material_card(const ColumnSpec& col, std::size_t n = 200, double eps_max = 0.03) {
  const auto cdpm = cdpm_parameters(col);
  const auto curve = sample_concrete_curve(col, n, eps_max);
  const auto& steel = col.steel();
  const auto& conc = col.concrete();
  auto mark = [](bool defaulted) { return defaulted ? " (defaulted)" : ""; };

  std::string out;
  out += "** CFST core concrete material card\n";
  out += fmt::format("** column: D={} t={} L={} mm  D/t={:.6g} L/D={:.6g}\n", col.D(), col.t(), col.L(),
                     col.dt_ratio(), col.ld_ratio());
  out += fmt::format("** steel: f_y={} f_u={}{} E_s={}{} MPa\n", steel.fy, steel.fu, mark(steel.fu_defaulted),
                     steel.Es, mark(steel.Es_defaulted));
  out += fmt::format("** concrete: f_c={} MPa d_max={}{} mm E_c={:.6g}{} MPa xi_c={:.6g}\n", conc.fc, conc.dmax,
                     mark(conc.dmax_defaulted), col.Ec(), mark(!conc.Ec_override), col.xi_c());
  out += fmt::format("** poisson {} is an artifact default\n", kConcretePoisson);
  out += fmt::format(
      "** FE reference constants (documentation only): friction={} imperfection=L/{:g}={:.6g} mm "
      "mesh=D/{:g}={:.6g} mm\n",
      kInterfaceFriction, kImperfectionDivisor, col.L() / kImperfectionDivisor, kMeshDivisor,
      col.D() / kMeshDivisor);
  out += "** [CDPM] fields: dilation_angle eccentricity fb0/fc K_c viscosity\n";
  out += "[ELASTIC]\n";
  out += fmt::format("{:.6g} {}\n", col.Ec(), kConcretePoisson);
  out += "[CDPM]\n";
  out += fmt::format("{:.6g} {} {:.6g} {:.6g} {}\n", cdpm.psi, cdpm.ecc, cdpm.fb0_ratio, cdpm.K_c, cdpm.viscosity);
  out += "[COMPRESSION TABLE]\n";
  for (const auto& p : curve.points) out += fmt::format("{:.10g} {:.10g}\n", p.strain, p.stress);
  out += "[TENSION]\n";
  out += fmt::format("{:.6g}\n", cdpm.G_f);
  return out;
}

}  // namespace cfst
