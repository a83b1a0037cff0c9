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

// Geometry and material base types for circular concrete-filled steel tubes.
// Units are N, mm and MPa throughout.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cfst {

inline constexpr double kPi = std::numbers::pi;

inline constexpr double kDefaultSteelModulus = 200000.0;  // MPa
inline constexpr double kDefaultAggregateSize = 20.0;     // mm

/// Raised for inputs that violate a geometry or material invariant.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CircularSection {
  double D = 0.0;  ///< outer diameter
  double t = 0.0;  ///< wall thickness
  double L = 0.0;  ///< column length

  void validate() const {
    if (!(D > 0.0) || !(t > 0.0) || !(L > 0.0))
      throw InputError("section: D, t and L must be positive");
    if (!(D > 2.0 * t)) throw InputError("section: no core (D <= 2t)");
  }
};

struct SteelMaterial {
  double fy = 0.0;
  double fu = 0.0;
  double Es = kDefaultSteelModulus;
  bool fu_defaulted = false;
  bool Es_defaulted = false;

  /// Builds a steel material, filling in f_u = max(1.25 f_y, f_y + 50) and
  /// E_s = 200 GPa when absent. Defaulted fields are marked.
  static SteelMaterial make(double fy, std::optional<double> fu = std::nullopt,
                            std::optional<double> Es = std::nullopt) {
    SteelMaterial s;
    s.fy = fy;
    s.fu_defaulted = !fu.has_value();
    s.fu = fu ? *fu : std::max(1.25 * fy, fy + 50.0);
    s.Es_defaulted = !Es.has_value();
    s.Es = Es ? *Es : kDefaultSteelModulus;
    s.validate();
    return s;
  }

  void validate() const {
    if (!(fy > 0.0)) throw InputError("steel: f_y must be positive");
    if (!(Es > 0.0)) throw InputError("steel: E_s must be positive");
    if (!(fu >= fy)) throw InputError("steel: f_u must be >= f_y");
  }

  /// Outside the 200-800 MPa range the steel model was calibrated for.
  bool outside_validity() const { return fy < 200.0 || fy > 800.0; }
};

/// E_c = 4700 sqrt(f_c) MPa unless an override is supplied.
inline double concrete_elastic_modulus(double fc, std::optional<double> override_Ec = std::nullopt) {
  if (override_Ec) return *override_Ec;
  if (!(fc > 0.0)) throw InputError("concrete: f_c must be positive");
  return 4700.0 * std::sqrt(fc);
}

struct ConcreteMaterial {
  double fc = 0.0;  ///< cylinder 150x300 strength f_c'
  double dmax = kDefaultAggregateSize;
  std::optional<double> Ec_override;
  bool dmax_defaulted = false;

  static ConcreteMaterial make(double fc, std::optional<double> dmax = std::nullopt,
                               std::optional<double> Ec = std::nullopt) {
    ConcreteMaterial c;
    c.fc = fc;
    c.dmax_defaulted = !dmax.has_value();
    c.dmax = dmax ? *dmax : kDefaultAggregateSize;
    c.Ec_override = Ec;
    c.validate();
    return c;
  }

  double Ec() const { return concrete_elastic_modulus(fc, Ec_override); }

  void validate() const {
    if (!(fc > 0.0)) throw InputError("concrete: f_c must be positive");
    if (!(dmax >= 0.0)) throw InputError("concrete: d_max must be >= 0");
    if (Ec_override && !(*Ec_override > 0.0)) throw InputError("concrete: E_c must be positive");
  }

  /// Outside the 12.5-185.6 MPa range covered by the test database.
  bool outside_validity() const { return fc < 12.5 || fc > 185.6; }
};

struct SectionAreas {
  double steel = 0.0;  ///< A_s
  double core = 0.0;   ///< A_c
};

inline SectionAreas section_areas(const CircularSection& s) {
  s.validate();
  const double d_in = s.D - 2.0 * s.t;
  return {kPi / 4.0 * (s.D * s.D - d_in * d_in), kPi / 4.0 * d_in * d_in};
}

/// Second moments of area of the tube wall and the core about the centroid.
inline SectionAreas section_inertias(const CircularSection& s) {
  const double d_in = s.D - 2.0 * s.t;
  const double d4 = d_in * d_in * d_in * d_in;
  return {kPi / 64.0 * (s.D * s.D * s.D * s.D - d4), kPi / 64.0 * d4};
}

/// xi_c = A_s f_y / (A_c f_c)
inline double confinement_factor(double As, double fy, double Ac, double fc) {
  return (As * fy) / (Ac * fc);
}

enum class ConcreteClass { NSC, HSC, UHSC };

inline std::string_view to_string(ConcreteClass c) {
  switch (c) {
    case ConcreteClass::NSC: return "NSC";
    case ConcreteClass::HSC: return "HSC";
    case ConcreteClass::UHSC: return "UHSC";
  }
  return "?";
}

/// NSC up to and including 60 MPa, UHSC from 120 MPa inclusive.
inline ConcreteClass classify_concrete(double fc) {
  if (!(fc > 0.0)) throw InputError("concrete: f_c must be positive");
  if (fc <= 60.0) return ConcreteClass::NSC;
  if (fc < 120.0) return ConcreteClass::HSC;
  return ConcreteClass::UHSC;
}

enum class SpecimenKind { CYL150, CYL100, CUBE150, CUBE100 };

inline std::string_view to_string(SpecimenKind k) {
  switch (k) {
    case SpecimenKind::CYL150: return "CYL150";
    case SpecimenKind::CYL100: return "CYL100";
    case SpecimenKind::CUBE150: return "CUBE150";
    case SpecimenKind::CUBE100: return "CUBE100";
  }
  return "?";
}

inline std::optional<SpecimenKind> parse_specimen_kind(std::string_view s) {
  if (s == "CYL150") return SpecimenKind::CYL150;
  if (s == "CYL100") return SpecimenKind::CYL100;
  if (s == "CUBE150") return SpecimenKind::CUBE150;
  if (s == "CUBE100") return SpecimenKind::CUBE100;
  return std::nullopt;
}

struct MeasuredStrength {
  double value = 0.0;
  SpecimenKind kind = SpecimenKind::CYL150;
};

struct ConvertedStrength {
  double fc = 0.0;
  ConcreteClass cls = ConcreteClass::NSC;  ///< class whose factor produced fc
};

namespace detail {

inline bool is_cube(SpecimenKind k) {
  return k == SpecimenKind::CUBE150 || k == SpecimenKind::CUBE100;
}

// Factor mapping the measured value onto the cylinder-150 basis.
inline double conversion_factor(SpecimenKind kind, ConcreteClass cls) {
  switch (kind) {
    case SpecimenKind::CYL150: return 1.0;
    case SpecimenKind::CYL100:
      switch (cls) {
        case ConcreteClass::NSC: return 1.0 / 1.03;
        case ConcreteClass::HSC: return 1.0 / 1.04;
        case ConcreteClass::UHSC: return 0.95;
      }
      break;
    case SpecimenKind::CUBE150:
      if (cls == ConcreteClass::NSC) return 0.88;
      if (cls == ConcreteClass::HSC) return 0.98;
      break;
    case SpecimenKind::CUBE100:
      if (cls == ConcreteClass::NSC) return 0.82;
      if (cls == ConcreteClass::HSC) return 0.92;
      break;
  }
  throw InputError("strength conversion: no cube factor defined for UHSC");
}

}  // namespace detail

/// Converts a measured strength to the cylinder-150 basis.
///
/// The conversion factor depends on the strength class, which in turn depends
/// on the converted value. Pass one converts with the class of the raw value
/// (a cube whose raw value reads UHSC is converted provisionally with the HSC
/// factor); the result is re-classified and, if the class changed, converted
/// once more. At most two passes are made.
inline ConvertedStrength convert_strength(const MeasuredStrength& m) {
  if (!(m.value > 0.0)) throw InputError("strength conversion: value must be positive");
  if (m.kind == SpecimenKind::CYL150) return {m.value, classify_concrete(m.value)};

  ConcreteClass first = classify_concrete(m.value);
  if (detail::is_cube(m.kind) && first == ConcreteClass::UHSC) first = ConcreteClass::HSC;
  const double provisional = m.value * detail::conversion_factor(m.kind, first);
  const ConcreteClass second = classify_concrete(provisional);
  if (second == first) return {provisional, first};
  return {m.value * detail::conversion_factor(m.kind, second), second};
}

/// One circular CFST column with its derived section quantities.
class ColumnSpec {
 public:
  ColumnSpec(CircularSection section, SteelMaterial steel, ConcreteMaterial concrete)
      : section_(section), steel_(steel), concrete_(concrete) {
    section_.validate();
    steel_.validate();
    concrete_.validate();
    const auto a = section_areas(section_);
    As_ = a.steel;
    Ac_ = a.core;
    xi_c_ = confinement_factor(As_, steel_.fy, Ac_, concrete_.fc);
  }

  const CircularSection& section() const { return section_; }
  const SteelMaterial& steel() const { return steel_; }
  const ConcreteMaterial& concrete() const { return concrete_; }

  double D() const { return section_.D; }
  double t() const { return section_.t; }
  double L() const { return section_.L; }
  double fy() const { return steel_.fy; }
  double fu() const { return steel_.fu; }
  double Es() const { return steel_.Es; }
  double fc() const { return concrete_.fc; }
  double Ec() const { return concrete_.Ec(); }

  double As() const { return As_; }
  double Ac() const { return Ac_; }
  double dt_ratio() const { return section_.D / section_.t; }
  double ld_ratio() const { return section_.L / section_.D; }
  double alpha_s() const { return As_ / Ac_; }
  double xi_c() const { return xi_c_; }

 private:
  CircularSection section_;
  SteelMaterial steel_;
  ConcreteMaterial concrete_;
  double As_ = 0.0;
  double Ac_ = 0.0;
  double xi_c_ = 0.0;
};

}  // namespace cfst
