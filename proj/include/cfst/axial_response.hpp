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

// Axial load-strain response of a CFST stub column by superposing the steel
// and confined-concrete laws over a uniform strain field:
//   N(eps) = sigma_s(eps) A_s + sigma_c(eps) A_c
// Compression is positive. The biaxial hoop-stress reduction of the tube is
// not modelled.

#include <cstddef>
#include <tuple>
#include <utility>
#include <vector>

#include "cfst/concrete_model.hpp"
#include "cfst/curves.hpp"
#include "cfst/section.hpp"
#include "cfst/steel_model.hpp"

namespace cfst {

struct LoadPoint {
  double strain = 0.0;
  double N = 0.0;  ///< N
};

struct AxialResponse {
  std::vector<LoadPoint> points;
  double peak_load = 0.0;
  double peak_strain = 0.0;
  double residual_load = 0.0;
};

struct ResponseOptions {
  bool include_steel = true;  ///< false drops the tube fibers (A_s = 0)
  bool confined = true;       ///< false forces f_r = 0
};

/// Maximum load with first-attainment tie-breaking.
inline std::pair<double, double> peak_load(const AxialResponse& r) {
  if (r.points.empty()) throw InputError("response: no samples");
  std::size_t best = 0;
  for (std::size_t i = 1; i < r.points.size(); ++i)
    if (r.points[i].N > r.points[best].N) best = i;
  return {r.points[best].N, r.points[best].strain};
}

inline AxialResponse response_curve(const ColumnSpec& col, double eps_max, std::size_t n,
                                    const ResponseOptions& opt = {}) {
  if (!(eps_max > 0.0)) throw InputError("response: eps_max must be positive");
  if (n < 8) throw InputError("response: at least 8 samples are required");

  const auto steel = steel_curve_params(col.steel());
  const auto concrete = confined_concrete_params(col, opt.confined);
  const double Ec = col.Ec();
  const double As = opt.include_steel ? col.As() : 0.0;

  std::vector<double> breakpoints{concrete.eps_c0, concrete.eps_cc};
  if (opt.include_steel) breakpoints.insert(breakpoints.end(), {steel.eps_y, steel.eps_p, steel.eps_u});

  AxialResponse r;
  for (double e : strain_grid(std::move(breakpoints), n, eps_max)) {
    const double ss = opt.include_steel ? steel_stress(e, col.steel(), steel) : 0.0;
    r.points.push_back({e, ss * As + concrete_stress(e, col.fc(), Ec, concrete) * col.Ac()});
  }
  std::tie(r.peak_load, r.peak_strain) = peak_load(r);
  r.residual_load = r.points.back().N;
  return r;
}

}  // namespace cfst
