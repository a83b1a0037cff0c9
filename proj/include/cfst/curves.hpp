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

// Tabulated stress-strain curves for export and fiber superposition.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "cfst/concrete_model.hpp"
#include "cfst/section.hpp"
#include "cfst/steel_model.hpp"

namespace cfst {

struct CurvePoint {
  double strain = 0.0;
  double stress = 0.0;  ///< MPa
};

enum class CurveKind { STEEL, CONCRETE_CONFINED };

struct StressStrainCurve {
  CurveKind kind = CurveKind::STEEL;
  std::vector<CurvePoint> points;
};

/// Strain grid on [0, eps_max] containing every breakpoint below eps_max.
///
/// The grid has exactly n points when n exceeds the number of mandatory
/// points; otherwise only the mandatory points are returned. Extra points are
/// shared out between stages in proportion to stage length (largest
/// remainder) and spaced uniformly inside each stage.
inline std::vector<double> strain_grid(std::vector<double> breakpoints, std::size_t n, double eps_max) {
  if (n < 2) throw InputError("curve: at least two samples are required");
  if (!(eps_max > 0.0)) throw InputError("curve: eps_max must be positive");

  std::vector<double> knots{0.0};
  std::sort(breakpoints.begin(), breakpoints.end());
  for (double b : breakpoints)
    if (b > 0.0 && b < eps_max && b > knots.back()) knots.push_back(b);
  knots.push_back(eps_max);

  const std::size_t stages = knots.size() - 1;
  std::vector<std::size_t> extra(stages, 0);
  if (n > knots.size()) {
    const std::size_t spare = n - knots.size();
    std::vector<double> remainder(stages);
    std::size_t given = 0;
    for (std::size_t i = 0; i < stages; ++i) {
      const double share = spare * (knots[i + 1] - knots[i]) / eps_max;
      extra[i] = static_cast<std::size_t>(std::floor(share));
      remainder[i] = share - extra[i];
      given += extra[i];
    }
    std::vector<std::size_t> order(stages);
    for (std::size_t i = 0; i < stages; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
    for (std::size_t k = 0; given < spare; ++k, ++given) ++extra[order[k % stages]];
  }

  std::vector<double> grid;
  grid.reserve(std::max(n, knots.size()));
  for (std::size_t i = 0; i < stages; ++i) {
    const double a = knots[i];
    const double b = knots[i + 1];
    grid.push_back(a);
    for (std::size_t j = 1; j <= extra[i]; ++j)
      grid.push_back(a + (b - a) * static_cast<double>(j) / static_cast<double>(extra[i] + 1));
  }
  grid.push_back(eps_max);
  return grid;
}

inline StressStrainCurve sample_steel_curve(const SteelMaterial& steel, std::size_t n, double eps_max) {
  const auto params = steel_curve_params(steel);
  StressStrainCurve curve{CurveKind::STEEL, {}};
  for (double e : strain_grid({params.eps_y, params.eps_p, params.eps_u}, n, eps_max))
    curve.points.push_back({e, steel_stress(e, steel, params)});
  return curve;
}

inline StressStrainCurve sample_concrete_curve(const ColumnSpec& col, std::size_t n, double eps_max,
                                               bool confined = true) {
  const auto params = confined_concrete_params(col, confined);
  const double Ec = col.Ec();
  StressStrainCurve curve{CurveKind::CONCRETE_CONFINED, {}};
  for (double e : strain_grid({params.eps_c0, params.eps_cc}, n, eps_max))
    curve.points.push_back({e, concrete_stress(e, col.fc(), Ec, params)});
  return curve;
}

}  // namespace cfst
