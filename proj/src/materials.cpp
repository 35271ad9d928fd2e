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

#include "indoorrt/materials.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace indoorrt
{
    namespace
    {
        double sin2_from_cos(double cos_incidence)
        {
            const double c = std::clamp(cos_incidence, 0.0, 1.0);
            return (1.0 - c) * (1.0 + c);
        }

        // eps - sin^2 written as (eps - 1) + cos^2, exact when eps = 1.
        cdouble normal_wavenumber(const cdouble &eps, double cos_incidence)
        {
            const double c = std::clamp(cos_incidence, 0.0, 1.0);
            return std::sqrt((eps - 1.0) + c * c);
        }

        // Normal component of the transmitted wave vector, in units of k0.
        cdouble normal_wavenumber(const Material &material, double cos_incidence, double frequency_hz)
        {
            return normal_wavenumber(complex_permittivity(material, frequency_hz), cos_incidence);
        }
    } // namespace

    std::string Material::check() const
    {
        if (id.empty())
            return "material has an empty id";
        if (is_pec)
            return {};
        if (!(rel_permittivity >= 1.0) || !std::isfinite(rel_permittivity))
            return "material '" + id + "': relative permittivity must be finite and >= 1";
        if (!(conductivity >= 0.0) || !std::isfinite(conductivity))
            return "material '" + id + "': conductivity must be finite and >= 0";
        if (!(thickness > 0.0) || !std::isfinite(thickness))
            return "material '" + id + "': thickness must be finite and > 0";
        return {};
    }

    Material make_pec(std::string id)
    {
        Material m;
        m.id = std::move(id);
        m.is_pec = true;
        return m;
    }

    Material make_dielectric(std::string id, double rel_permittivity, double conductivity, double thickness)
    {
        return Material{std::move(id), rel_permittivity, conductivity, thickness, false};
    }

    const std::map<std::string, Material> &default_materials()
    {
        static const std::map<std::string, Material> library = {
            {"brick", make_dielectric("brick", 4.44, 0.001, 0.23)},
            {"wood", make_dielectric("wood", 5.0, 0.01, 0.04)},
            {"metal", make_pec("metal")},
            {"concrete", make_dielectric("concrete", 5.31, 0.066, 0.3)},
        };
        return library;
    }

    cdouble complex_permittivity(const Material &material, double frequency_hz)
    {
        if (material.is_pec)
            throw std::invalid_argument("complex_permittivity: material '" + material.id + "' is a perfect conductor");
        if (!(frequency_hz > 0.0))
            throw std::invalid_argument("complex_permittivity: frequency must be positive");
        const double loss = material.conductivity / (2.0 * pi * frequency_hz * vacuum_permittivity);
        return {material.rel_permittivity, -loss};
    }

    cdouble fresnel_reflection(const Material &material, double cos_incidence, double frequency_hz)
    {
        if (material.is_pec)
            return {-1.0, 0.0};
        const cdouble q = normal_wavenumber(material, cos_incidence, frequency_hz);
        return (cos_incidence - q) / (cos_incidence + q);
    }

    cdouble interface_transmission(const Material &material, double cos_incidence, double frequency_hz)
    {
        if (material.is_pec)
            return {0.0, 0.0};
        const cdouble q = normal_wavenumber(material, cos_incidence, frequency_hz);
        return 2.0 * cos_incidence / (cos_incidence + q);
    }

    double interface_transmitted_power(const Material &material, double cos_incidence, double frequency_hz)
    {
        if (material.is_pec)
            return 0.0;
        const cdouble q = normal_wavenumber(material, cos_incidence, frequency_hz);
        const cdouble t = 2.0 * cos_incidence / (cos_incidence + q);
        return std::norm(t) * q.real() / cos_incidence;
    }

    cdouble slab_transmission(const Material &material, double cos_incidence, double frequency_hz)
    {
        if (material.is_pec)
            return {0.0, 0.0};

        const cdouble eps = complex_permittivity(material, frequency_hz);
        const cdouble q = normal_wavenumber(eps, cos_incidence);

        // Entering the slab and leaving it again (TE): 2c/(c+q) and 2q/(q+c).
        const cdouble t_in = 2.0 * cos_incidence / (cos_incidence + q);
        const cdouble t_out = 2.0 * q / (q + cos_incidence);

        // Refraction angle from Snell's law with the real refractive index.
        const cdouble n = std::sqrt(eps);
        const double sin_t = std::sqrt(sin2_from_cos(cos_incidence)) / n.real();
        const double cos_t = std::sqrt(std::max(0.0, 1.0 - sin_t * sin_t));
        const double in_slab_length = material.thickness / cos_t;

        const double alpha = 2.0 * pi * frequency_hz / speed_of_light * std::abs(n.imag());
        return t_in * t_out * std::exp(-alpha * in_slab_length);
    }

} // namespace indoorrt
