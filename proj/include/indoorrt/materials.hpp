// SPDX-License-Identifier: Apache-2.0
//
// indoorrt - site-specific indoor radio propagation by the image method
// Copyright (C) 2026 The indoorrt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef INDOORRT_MATERIALS_HPP
#define INDOORRT_MATERIALS_HPP

#include <complex>
#include <map>
#include <string>

namespace indoorrt
{
    using cdouble = std::complex<double>;

    inline constexpr double speed_of_light = 299792458.0;      // m/s, exact
    inline constexpr double vacuum_permittivity = 8.8541878128e-12; // F/m
    inline constexpr double pi = 3.141592653589793;

    /// Electromagnetic description of a surface material.
    ///
    /// All coefficients use perpendicular (TE) polarization. A perfect electric conductor
    /// (`is_pec`) ignores the remaining fields: it reflects with -1 and transmits nothing.
    struct Material
    {
        std::string id;
        double rel_permittivity = 1.0; // >= 1
        double conductivity = 0.0;     // S/m, >= 0
        double thickness = 0.1;        // m, > 0
        bool is_pec = false;

        /// Empty string when the invariants hold, otherwise a description of the first violation.
        std::string check() const;

        friend bool operator==(const Material &, const Material &) = default;
    };

    Material make_pec(std::string id);
    Material make_dielectric(std::string id, double rel_permittivity, double conductivity, double thickness);

    /// brick, wood, metal and concrete with conventional ITU-class constants.
    const std::map<std::string, Material> &default_materials();

    /// eps_r - j sigma / (2 pi f eps_0). Throws std::invalid_argument for PEC or f <= 0.
    cdouble complex_permittivity(const Material &material, double frequency_hz);

    /// Air-to-half-space reflection coefficient. Exactly -1 for PEC.
    cdouble fresnel_reflection(const Material &material, double cos_incidence, double frequency_hz);

    /// Air-to-half-space field transmission coefficient 2 cos(t) / (cos(t) + q), q = sqrt(eps - sin^2(t)).
    cdouble interface_transmission(const Material &material, double cos_incidence, double frequency_hz);

    /// Fraction of incident power carried into the half-space by the transmitted wave.
    /// For lossless media |fresnel_reflection|^2 + this == 1.
    double interface_transmitted_power(const Material &material, double cos_incidence, double frequency_hz);

    /// Single pass through a slab of the material's thickness: both interface transmission
    /// coefficients times exp(-alpha L), L the in-slab length along the refracted direction.
    /// Internal multiple reflections are ignored. Exactly 0 for PEC.
    cdouble slab_transmission(const Material &material, double cos_incidence, double frequency_hz);

} // namespace indoorrt

#endif
