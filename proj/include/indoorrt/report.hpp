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

#ifndef INDOORRT_REPORT_HPP
#define INDOORRT_REPORT_HPP

// Text and image exports. Every function is deterministic and locale-independent; the
// column formats are listed in docs/output-formats.md.

#include "indoorrt/channel.hpp"
#include "indoorrt/coverage.hpp"
#include "indoorrt/path.hpp"

#include <string>
#include <vector>

namespace indoorrt
{
    /// index,n_reflections,n_transmissions,length_m,delay_ns,gain_db,phase_rad,interactions
    std::string paths_csv(const std::vector<PropagationPath> &paths);

    /// "# key=value" header block followed by delay_ns,power_db rows.
    std::string pdp_csv(const PowerDelayProfile &pdp);

    /// tap_index,delay_ns,re,im
    std::string tdl_csv(const TappedDelayLine &tdl);

    /// x_m,y_m,power_db,is_hole for every cell, row-major from the south-west corner.
    std::string coverage_csv(const CoverageMap &map);

    /// Binary 8-bit PGM (P5). Top row is the northernmost grid row.
    std::string coverage_pgm(const CoverageMap &map);

    /// Gray level of one cell in coverage_pgm.
    unsigned char pgm_level(double power_db, double lo_db, double hi_db);

    /// region,n_cells,area_m2,cells with cells as semicolon-joined i:j pairs.
    std::string holes_csv(const std::vector<HoleRegion> &holes);

    /// x_m,y_m,z_m,covered_fraction,is_best
    std::string candidates_csv(const PlacementResult &result);

    /// key,n_reflections,length_m,baseline_db,swapped_db,delta_db
    std::string comparison_csv(const MaterialComparison &cmp);

    /// Multi-line verification report, one "name value unit" line per field.
    std::string toa_report_text(const ToaReport &report);

    /// One significant decimal with a minimal exponent: 0.0e0, 1.5e-7, 2.0e3.
    std::string compact_exponent(double value);

} // namespace indoorrt

#endif
