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

#ifndef INDOORRT_COVERAGE_HPP
#define INDOORRT_COVERAGE_HPP

#include "indoorrt/scene.hpp"
#include "indoorrt/tracer.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace indoorrt
{
    class CoverageError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    inline constexpr double default_hole_threshold_db = -90.0;

    struct GridSpec
    {
        double cell_size = 1.0; // m
        double height = 2.0;    // m above the floor
    };

    /// Rectangle in the horizontal plane, used to restrict candidate transmitter positions.
    struct XyRegion
    {
        double x_min = -INFINITY, y_min = -INFINITY;
        double x_max = INFINITY, y_max = INFINITY;

        bool contains(double x, double y) const { return x >= x_min && x <= x_max && y >= y_min && y <= y_max; }
    };

    /// Received power over a horizontal grid. Cells are stored row-major from the south-west
    /// corner: index = j * nx + i, i along x, j along y. Cells are sampled at their centers.
    struct CoverageMap
    {
        Point3 origin; // south-west corner of cell (0, 0); z is the sample height
        double cell_size = 1.0;
        int nx = 0;
        int ny = 0;
        double height = 0.0;
        double threshold_db = default_hole_threshold_db;
        std::vector<double> power_db;      // -inf for no path or excluded cells, +inf at the Tx itself
        std::vector<std::uint8_t> excluded; // outside bounds or on a surface
        std::vector<std::uint8_t> hole_mask;

        std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * nx + i; }
        Point3 cell_center(int i, int j) const
        {
            return {origin.x + (i + 0.5) * cell_size, origin.y + (j + 0.5) * cell_size, height};
        }
        int interior_count() const;
        int hole_count() const;
        double covered_fraction() const;

        /// Same powers, hole mask recomputed for another threshold.
        CoverageMap with_threshold(double threshold_db) const;
    };

    /// Evaluates every interior cell center of a grid over the scene bounds as a receiver.
    /// Throws CoverageError for an invalid grid, unbounded scenes, or a grid without interior cells.
    CoverageMap sweep(const Scene &scene, const Point3 &tx, const GridSpec &grid, const TraceConfig &config,
                      double threshold_db = default_hole_threshold_db, unsigned threads = 0);

    struct HoleRegion
    {
        std::vector<std::pair<int, int>> cells; // (i, j), ascending cell index
        double area_m2 = 0.0;
    };

    /// 4-connected components of the hole mask, largest first (ties: lowest first cell index).
    std::vector<HoleRegion> detect_holes(const CoverageMap &map);

    struct PlacementCandidate
    {
        Point3 position;
        double covered_fraction = 0.0;
    };

    struct PlacementResult
    {
        Point3 best_tx;
        double covered_fraction = 0.0;
        std::size_t best_index = 0;
        std::vector<PlacementCandidate> candidates;
    };

    /// Candidate positions: interior cell centers of `candidate_grid` inside `region`.
    std::vector<Point3> candidate_positions(const Scene &scene, const GridSpec &candidate_grid,
                                            const XyRegion &region);

    /// Exhaustive search over candidate positions for the largest covered fraction of the
    /// receiver grid. Ties go to the lowest x, then the lowest y.
    PlacementResult optimize_tx(const Scene &scene, const GridSpec &candidate_grid, const XyRegion &region,
                                const GridSpec &rx_grid, const TraceConfig &config,
                                double threshold_db = default_hole_threshold_db, unsigned threads = 0);

    /// Same search over an explicit candidate list.
    PlacementResult optimize_tx(const Scene &scene, const std::vector<Point3> &candidates, const GridSpec &rx_grid,
                                const TraceConfig &config, double threshold_db = default_hole_threshold_db,
                                unsigned threads = 0);

} // namespace indoorrt

#endif
