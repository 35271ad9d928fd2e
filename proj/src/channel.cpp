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

#include "indoorrt/channel.hpp"

#include "indoorrt/tracer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace indoorrt
{
    namespace
    {
        const Surface &surface_for(const Interaction &i, const Scene &scene)
        {
            if (i.surface_index >= 0 && i.surface_index < static_cast<int>(scene.surfaces.size()) &&
                scene.surfaces[i.surface_index].id == i.surface_id)
                return scene.surfaces[i.surface_index];
            if (const Surface *s = scene.find_surface(i.surface_id))
                return *s;
            throw ChannelError("path refers to unknown surface '" + i.surface_id + "'");
        }
    } // namespace

    cdouble path_gain(const std::vector<Interaction> &interactions, double length, double frequency_hz,
                      const Scene &scene)
    {
        if (!(length > 0.0))
            throw ChannelError("path_gain: path length must be positive");
        if (!(frequency_hz > 0.0))
            throw ChannelError("path_gain: frequency must be positive");

        const double wavelength = speed_of_light / frequency_hz;
        cdouble gain = wavelength / (4.0 * pi * length);
        for (const auto &i : interactions)
        {
            if (i.kind == InteractionKind::reflection)
                gain *= fresnel_reflection(scene.material_of(surface_for(i, scene)), i.cos_incidence, frequency_hz);
            else if (i.kind == InteractionKind::transmission)
                gain *= slab_transmission(scene.material_of(surface_for(i, scene)), i.cos_incidence, frequency_hz);
        }

        // Reduce the phase modulo one wavelength before forming the phasor.
        const double cycles = length / wavelength;
        const double phase = -2.0 * pi * (cycles - std::floor(cycles));
        return gain * std::polar(1.0, phase);
    }

    ChannelImpulseResponse build_cir(const std::vector<PropagationPath> &paths, double frequency_hz,
                                     std::string tx_id, std::string rx_id)
    {
        ChannelImpulseResponse cir;
        cir.frequency = frequency_hz;
        cir.tx_id = std::move(tx_id);
        cir.rx_id = std::move(rx_id);
        cir.taps.reserve(paths.size());
        for (const auto &p : paths)
            cir.taps.push_back({p.delay, p.gain});
        std::stable_sort(cir.taps.begin(), cir.taps.end(), [](const Tap &a, const Tap &b) { return a.delay < b.delay; });
        return cir;
    }

    double total_power_db(const ChannelImpulseResponse &cir)
    {
        double total = 0.0;
        for (const auto &t : cir.taps)
            total += std::norm(t.amplitude);
        return cir.empty() ? -std::numeric_limits<double>::infinity() : 10.0 * std::log10(total);
    }

    PowerDelayProfile build_pdp(const ChannelImpulseResponse &cir)
    {
        if (cir.empty())
            throw ChannelError("build_pdp: empty impulse response (no coverage)");

        PowerDelayProfile pdp;
        double p_sum = 0.0, p_tau = 0.0, p_tau2 = 0.0;
        pdp.first_arrival = cir.taps.front().delay;
        for (const auto &t : cir.taps)
        {
            const double p = std::norm(t.amplitude);
            pdp.points.push_back({t.delay, 20.0 * std::log10(std::abs(t.amplitude))});
            pdp.first_arrival = std::min(pdp.first_arrival, t.delay);
            p_sum += p;
            p_tau += p * t.delay;
            p_tau2 += p * t.delay * t.delay;
        }
        pdp.total_power_db = 10.0 * std::log10(p_sum);
        if (p_sum > 0.0)
        {
            pdp.mean_toa = p_tau / p_sum;
            pdp.rms_delay_spread = std::sqrt(std::max(0.0, p_tau2 / p_sum - pdp.mean_toa * pdp.mean_toa));
        }
        else
            pdp.mean_toa = pdp.first_arrival;
        pdp.mean_toa = std::max(pdp.mean_toa, pdp.first_arrival);
        return pdp;
    }

    double TappedDelayLine::power() const
    {
        double p = 0.0;
        for (const auto &t : taps)
            p += std::norm(t);
        return p;
    }

    std::size_t tdl_bin(double delay, double tap_spacing)
    {
        return static_cast<std::size_t>(std::floor(delay / tap_spacing + 1e-9));
    }

    TappedDelayLine build_tdl(const ChannelImpulseResponse &cir, double tap_spacing)
    {
        if (!(tap_spacing > 0.0) || !std::isfinite(tap_spacing))
            throw ChannelError("build_tdl: tap spacing must be positive");
        if (cir.empty())
            throw ChannelError("build_tdl: empty impulse response");

        TappedDelayLine tdl;
        tdl.tap_spacing = tap_spacing;
        for (const auto &t : cir.taps)
        {
            const std::size_t k = tdl_bin(t.delay, tap_spacing);
            if (k >= tdl.taps.size())
                tdl.taps.resize(k + 1, cdouble{0.0, 0.0});
            tdl.taps[k] += t.amplitude;
        }
        return tdl;
    }

    ToaReport verify_toa(const Scene &scene, const Point3 &tx, const Point3 &rx, const TraceConfig &config)
    {
        const auto paths = trace(scene, tx, rx, config);
        if (paths.empty())
            throw ChannelError("verify_toa: no propagation path between tx and rx");

        const auto pdp = build_pdp(build_cir(paths, config.frequency));
        ToaReport r;
        r.geometric_distance_m = distance(tx, rx);
        r.first_arrival_ns = pdp.first_arrival * 1e9;
        r.mean_toa_ns = pdp.mean_toa * 1e9;
        r.estimated_distance_m = pdp.first_arrival * speed_of_light;
        r.relative_error = std::abs(r.estimated_distance_m - r.geometric_distance_m) / r.geometric_distance_m;
        r.los = std::any_of(paths.begin(), paths.end(), [](const PropagationPath &p) { return p.is_los(); });
        return r;
    }

    Scene swap_materials(const Scene &scene, const std::map<std::string, std::string> &swap)
    {
        for (const auto &[from, to] : swap)
            if (!scene.materials.contains(to))
                throw ChannelError("material swap target '" + to + "' is not defined in the scene");
        Scene out = scene;
        for (auto &s : out.surfaces)
            if (auto it = swap.find(s.material_id); it != swap.end())
                s.material_id = it->second;
        return out;
    }

    MaterialComparison compare_materials(const Scene &scene, const Point3 &tx, const Point3 &rx,
                                         const TraceConfig &config, const std::map<std::string, std::string> &swap)
    {
        const Scene swapped = swap_materials(scene, swap);
        const auto base = trace(scene, tx, rx, config);
        const auto other = trace(swapped, tx, rx, config);

        constexpr double absent = -std::numeric_limits<double>::infinity();
        std::map<std::string, const PropagationPath *> other_by_key;
        for (const auto &p : other)
            other_by_key.emplace(p.surface_key(), &p);

        MaterialComparison cmp;
        std::set<std::string> seen;
        for (const auto &p : base)
        {
            auto key = p.surface_key();
            auto it = other_by_key.find(key);
            cmp.rows.push_back({key, p.n_reflections(), p.length, p.power_db(),
                                it == other_by_key.end() ? absent : it->second->power_db()});
            seen.insert(std::move(key));
        }
        for (const auto &p : other)
        {
            auto key = p.surface_key();
            if (!seen.contains(key))
                cmp.rows.push_back({key, p.n_reflections(), p.length, absent, p.power_db()});
        }
        return cmp;
    }

} // namespace indoorrt
