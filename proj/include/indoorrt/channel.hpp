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

#ifndef INDOORRT_CHANNEL_HPP
#define INDOORRT_CHANNEL_HPP

#include "indoorrt/path.hpp"
#include "indoorrt/scene.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace indoorrt
{
    struct TraceConfig;

    class ChannelError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Complex field transfer of one path between isotropic unit-gain antennas:
    ///
    ///     lambda / (4 pi L) * prod(reflection coeff.) * prod(slab transmission) * exp(-j 2 pi f L / c)
    ///
    /// Coefficients are looked up by Interaction::surface_index (falling back to surface_id).
    /// Throws ChannelError for a non-positive length.
    cdouble path_gain(const std::vector<Interaction> &interactions, double length, double frequency_hz,
                      const Scene &scene);

    struct Tap
    {
        double delay = 0.0; // s
        cdouble amplitude;
    };

    struct ChannelImpulseResponse
    {
        std::vector<Tap> taps; // ascending delay
        double frequency = 0.0;
        std::string tx_id;
        std::string rx_id;

        bool empty() const { return taps.empty(); }
    };

    /// One tap per path, sorted by delay. An empty path list gives an empty CIR (no coverage).
    ChannelImpulseResponse build_cir(const std::vector<PropagationPath> &paths, double frequency_hz = 0.0,
                                     std::string tx_id = {}, std::string rx_id = {});

    struct PdpPoint
    {
        double delay = 0.0;    // s
        double power_db = 0.0; // dB relative to transmit power
    };

    struct PowerDelayProfile
    {
        std::vector<PdpPoint> points;
        double first_arrival = 0.0;    // s
        double mean_toa = 0.0;         // s, power-weighted mean delay
        double rms_delay_spread = 0.0; // s
        double total_power_db = 0.0;   // 10 log10 sum |a|^2
    };

    /// Throws ChannelError for an empty CIR.
    PowerDelayProfile build_pdp(const ChannelImpulseResponse &cir);

    /// Total received power in dB, -infinity for an empty CIR.
    double total_power_db(const ChannelImpulseResponse &cir);

    struct TappedDelayLine
    {
        double tap_spacing = 0.0;   // s
        std::vector<cdouble> taps;  // taps[k] covers [k, k+1) * tap_spacing

        double power() const;
    };

    /// Bin index used by build_tdl. Delays within 1e-9 bins below a boundary are moved up to it
    /// so that exact multiples of the spacing are not lost to rounding.
    std::size_t tdl_bin(double delay, double tap_spacing);

    /// Coherent (complex) sum of every tap into bin floor(delay / tap_spacing). Leading empty bins
    /// are kept so that index k always maps to delay k * tap_spacing. Throws ChannelError for an
    /// empty CIR or a non-positive spacing.
    TappedDelayLine build_tdl(const ChannelImpulseResponse &cir, double tap_spacing);

    struct ToaReport
    {
        double geometric_distance_m = 0.0;
        double first_arrival_ns = 0.0;
        double estimated_distance_m = 0.0; // first arrival * c
        double relative_error = 0.0;
        double mean_toa_ns = 0.0;
        bool los = false; // true when the direct path is among the traced paths
    };

    /// Traces one link and checks the first arrival against |tx - rx| / c.
    /// Throws ChannelError when no path exists; TraceError for invalid endpoints.
    ToaReport verify_toa(const Scene &scene, const Point3 &tx, const Point3 &rx, const TraceConfig &config);

    struct ComparisonRow
    {
        std::string key; // surface sequence, "LOS" for the direct path
        int n_reflections = 0;
        double length = 0.0;
        double baseline_db = 0.0; // -infinity when the path is absent
        double swapped_db = 0.0;
    };

    struct MaterialComparison
    {
        std::vector<ComparisonRow> rows; // baseline order, then paths that only exist after the swap
    };

    /// Copy of the scene with every surface bound to a key of `swap` rebound to its value.
    /// Throws ChannelError when a target material does not exist.
    Scene swap_materials(const Scene &scene, const std::map<std::string, std::string> &swap);

    /// Traces the link in the scene and in its material-swapped copy and pairs the paths by their
    /// interaction surface sequence.
    MaterialComparison compare_materials(const Scene &scene, const Point3 &tx, const Point3 &rx,
                                         const TraceConfig &config, const std::map<std::string, std::string> &swap);

} // namespace indoorrt

#endif
