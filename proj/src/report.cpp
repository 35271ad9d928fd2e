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

#include "indoorrt/report.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <iterator>

namespace indoorrt
{
    std::string paths_csv(const std::vector<PropagationPath> &paths)
    {
        fmt::memory_buffer out;
        fmt::format_to(std::back_inserter(out),
                       "index,n_reflections,n_transmissions,length_m,delay_ns,gain_db,phase_rad,interactions\n");
        for (std::size_t i = 0; i < paths.size(); ++i)
        {
            const auto &p = paths[i];
            fmt::format_to(std::back_inserter(out), "{},{},{},{:.9f},{:.6f},{:.6f},{:.9f},{}\n", i, p.n_reflections(),
                           p.n_transmissions(), p.length, p.delay * 1e9, p.power_db(), std::arg(p.gain), p.summary());
        }
        return fmt::to_string(out);
    }

    std::string pdp_csv(const PowerDelayProfile &pdp)
    {
        fmt::memory_buffer out;
        auto it = std::back_inserter(out);
        fmt::format_to(it, "# first_arrival_ns={:.6f}\n", pdp.first_arrival * 1e9);
        fmt::format_to(it, "# mean_toa_ns={:.6f}\n", pdp.mean_toa * 1e9);
        fmt::format_to(it, "# rms_ds_ns={:.6f}\n", pdp.rms_delay_spread * 1e9);
        fmt::format_to(it, "# total_power_db={:.6f}\n", pdp.total_power_db);
        fmt::format_to(it, "delay_ns,power_db\n");
        for (const auto &p : pdp.points)
            fmt::format_to(it, "{:.6f},{:.6f}\n", p.delay * 1e9, p.power_db);
        return fmt::to_string(out);
    }

    std::string tdl_csv(const TappedDelayLine &tdl)
    {
        fmt::memory_buffer out;
        fmt::format_to(std::back_inserter(out), "tap_index,delay_ns,re,im\n");
        for (std::size_t k = 0; k < tdl.taps.size(); ++k)
            fmt::format_to(std::back_inserter(out), "{},{:.6f},{:.9e},{:.9e}\n", k,
                           static_cast<double>(k) * tdl.tap_spacing * 1e9, tdl.taps[k].real(), tdl.taps[k].imag());
        return fmt::to_string(out);
    }

    std::string coverage_csv(const CoverageMap &map)
    {
        fmt::memory_buffer out;
        fmt::format_to(std::back_inserter(out), "x_m,y_m,power_db,is_hole\n");
        for (int j = 0; j < map.ny; ++j)
            for (int i = 0; i < map.nx; ++i)
            {
                const Point3 c = map.cell_center(i, j);
                const auto k = map.index(i, j);
                fmt::format_to(std::back_inserter(out), "{:.3f},{:.3f},{:.6f},{}\n", c.x, c.y, map.power_db[k],
                               map.hole_mask[k] ? 1 : 0);
            }
        return fmt::to_string(out);
    }

    unsigned char pgm_level(double power_db, double lo_db, double hi_db)
    {
        if (std::isnan(power_db) || power_db == -INFINITY)
            return 0;
        if (!(hi_db > lo_db))
            return 255;
        const double x = 255.0 * (power_db - lo_db) / (hi_db - lo_db);
        return static_cast<unsigned char>(std::clamp(std::floor(x + 0.5), 0.0, 255.0));
    }

    std::string coverage_pgm(const CoverageMap &map)
    {
        // Linear gray scale from threshold - 40 dB (black) to the strongest finite cell (white).
        const double lo = map.threshold_db - 40.0;
        double hi = -INFINITY;
        for (std::size_t k = 0; k < map.power_db.size(); ++k)
            if (!map.excluded[k] && std::isfinite(map.power_db[k]))
                hi = std::max(hi, map.power_db[k]);

        std::string out = fmt::format("P5\n{} {}\n255\n", map.nx, map.ny);
        for (int j = map.ny - 1; j >= 0; --j)
            for (int i = 0; i < map.nx; ++i)
            {
                const auto k = map.index(i, j);
                out.push_back(static_cast<char>(map.excluded[k] ? 0 : pgm_level(map.power_db[k], lo, hi)));
            }
        return out;
    }

    std::string holes_csv(const std::vector<HoleRegion> &holes)
    {
        fmt::memory_buffer out;
        fmt::format_to(std::back_inserter(out), "region,n_cells,area_m2,cells\n");
        for (std::size_t r = 0; r < holes.size(); ++r)
        {
            fmt::format_to(std::back_inserter(out), "{},{},{:.6f},", r, holes[r].cells.size(), holes[r].area_m2);
            for (std::size_t c = 0; c < holes[r].cells.size(); ++c)
                fmt::format_to(std::back_inserter(out), "{}{}:{}", c ? ";" : "", holes[r].cells[c].first,
                               holes[r].cells[c].second);
            out.push_back('\n');
        }
        return fmt::to_string(out);
    }

    std::string candidates_csv(const PlacementResult &result)
    {
        fmt::memory_buffer out;
        fmt::format_to(std::back_inserter(out), "x_m,y_m,z_m,covered_fraction,is_best\n");
        for (std::size_t c = 0; c < result.candidates.size(); ++c)
        {
            const auto &cand = result.candidates[c];
            fmt::format_to(std::back_inserter(out), "{:.3f},{:.3f},{:.3f},{:.6f},{}\n", cand.position.x,
                           cand.position.y, cand.position.z, cand.covered_fraction, c == result.best_index ? 1 : 0);
        }
        return fmt::to_string(out);
    }

    std::string comparison_csv(const MaterialComparison &cmp)
    {
        fmt::memory_buffer out;
        fmt::format_to(std::back_inserter(out), "key,n_reflections,length_m,baseline_db,swapped_db,delta_db\n");
        for (const auto &r : cmp.rows)
        {
            const double delta = std::isfinite(r.baseline_db) && std::isfinite(r.swapped_db)
                                     ? r.swapped_db - r.baseline_db
                                     : r.swapped_db == r.baseline_db ? 0.0 : (r.swapped_db > r.baseline_db ? INFINITY : -INFINITY);
            fmt::format_to(std::back_inserter(out), "{},{},{:.9f},{:.6f},{:.6f},{:.6f}\n", r.key, r.n_reflections,
                           r.length, r.baseline_db, r.swapped_db, delta);
        }
        return fmt::to_string(out);
    }

    std::string compact_exponent(double value)
    {
        // fmt writes 1.5e-07; the report uses the shorter 1.5e-7 (and 0.0e0 for exact zero).
        const std::string s = fmt::format("{:.1e}", value);
        const auto e = s.find('e');
        if (e == std::string::npos)
            return s;
        std::string exponent = s.substr(e + 1);
        const bool negative = !exponent.empty() && exponent[0] == '-';
        if (!exponent.empty() && (exponent[0] == '-' || exponent[0] == '+'))
            exponent.erase(0, 1);
        const auto nz = exponent.find_first_not_of('0');
        exponent = nz == std::string::npos ? "0" : exponent.substr(nz);
        return s.substr(0, e + 1) + (negative ? "-" : "") + exponent;
    }

    std::string toa_report_text(const ToaReport &r)
    {
        return fmt::format("geometric_distance {:.6f} m\n"
                           "first_arrival {:.2f} ns\n"
                           "estimated_distance {:.6f} m\n"
                           "relative_error {}\n"
                           "mean_toa {:.2f} ns\n"
                           "line_of_sight {}\n",
                           r.geometric_distance_m, r.first_arrival_ns, r.estimated_distance_m,
                           compact_exponent(r.relative_error), r.mean_toa_ns, r.los ? "yes" : "no");
    }

} // namespace indoorrt
