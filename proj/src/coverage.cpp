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

#include "indoorrt/coverage.hpp"

#include "indoorrt/channel.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace indoorrt
{
    namespace
    {
        constexpr double inf = std::numeric_limits<double>::infinity();

        // Grid geometry without powers: cell layout plus the exclusion mask.
        CoverageMap make_grid(const Scene &scene, const GridSpec &grid)
        {
            if (!(grid.cell_size > 0.0) || !std::isfinite(grid.cell_size))
                throw CoverageError("cell size must be positive");
            if (!scene.bounds.is_finite())
                throw CoverageError("coverage needs a scene with finite bounds");
            if (!(grid.height > scene.bounds.min.z && grid.height < scene.bounds.max.z))
                throw CoverageError("grid height lies outside the floor-to-ceiling range");

            const Vec3 ext = scene.bounds.extent();
            const double cells_x = std::ceil(ext.x / grid.cell_size - 1e-9);
            const double cells_y = std::ceil(ext.y / grid.cell_size - 1e-9);
            if (cells_x * cells_y > 1e8)
                throw CoverageError("grid is too fine");

            CoverageMap map;
            map.origin = {scene.bounds.min.x, scene.bounds.min.y, grid.height};
            map.cell_size = grid.cell_size;
            map.height = grid.height;
            map.nx = static_cast<int>(cells_x);
            map.ny = static_cast<int>(cells_y);

            const std::size_t n = static_cast<std::size_t>(map.nx) * map.ny;
            map.power_db.assign(n, -inf);
            map.excluded.assign(n, 0);
            map.hole_mask.assign(n, 0);
            for (int j = 0; j < map.ny; ++j)
                for (int i = 0; i < map.nx; ++i)
                {
                    const Point3 c = map.cell_center(i, j);
                    bool out = !scene.bounds.strictly_contains(c);
                    for (std::size_t s = 0; s < scene.surfaces.size() && !out; ++s)
                        out = distance_to_surface(c, scene.surfaces[s]) <= epsilon_hit;
                    map.excluded[map.index(i, j)] = out ? 1 : 0;
                }
            return map;
        }

        void apply_threshold(CoverageMap &map, double threshold_db)
        {
            map.threshold_db = threshold_db;
            for (std::size_t k = 0; k < map.power_db.size(); ++k)
                map.hole_mask[k] = !map.excluded[k] && map.power_db[k] < threshold_db ? 1 : 0;
        }
    } // namespace

    int CoverageMap::interior_count() const
    {
        return static_cast<int>(std::count(excluded.begin(), excluded.end(), 0));
    }

    int CoverageMap::hole_count() const { return static_cast<int>(std::count(hole_mask.begin(), hole_mask.end(), 1)); }

    double CoverageMap::covered_fraction() const
    {
        const int interior = interior_count();
        return interior == 0 ? 0.0 : static_cast<double>(interior - hole_count()) / interior;
    }

    CoverageMap CoverageMap::with_threshold(double threshold_db) const
    {
        CoverageMap out = *this;
        apply_threshold(out, threshold_db);
        return out;
    }

    CoverageMap sweep(const Scene &scene, const Point3 &tx, const GridSpec &grid, const TraceConfig &config,
                      double threshold_db, unsigned threads)
    {
        config.check();
        CoverageMap map = make_grid(scene, grid);
        if (map.interior_count() == 0)
            throw CoverageError("grid has no interior cells");
        if (!scene.bounds.strictly_contains(tx))
            throw TraceError("tx lies outside the scene bounds");

        const ImageTree images = enumerate_images(scene, tx, config.max_reflection_order);
        detail::parallel_for(
            map.power_db.size(),
            [&](std::size_t k)
            {
                if (map.excluded[k])
                    return;
                const int i = static_cast<int>(k % map.nx), j = static_cast<int>(k / map.nx);
                const Point3 rx = map.cell_center(i, j);
                if (rx == tx)
                {
                    map.power_db[k] = inf;
                    return;
                }
                map.power_db[k] = total_power_db(build_cir(trace_with_images(scene, images, rx, config)));
            },
            threads);

        apply_threshold(map, threshold_db);
        return map;
    }

    std::vector<HoleRegion> detect_holes(const CoverageMap &map)
    {
        std::vector<HoleRegion> regions;
        std::vector<std::uint8_t> visited(map.hole_mask.size(), 0);
        std::vector<std::size_t> stack;

        for (std::size_t start = 0; start < map.hole_mask.size(); ++start)
        {
            if (!map.hole_mask[start] || visited[start])
                continue;
            std::vector<std::size_t> cells;
            visited[start] = 1;
            stack.push_back(start);
            while (!stack.empty())
            {
                const std::size_t k = stack.back();
                stack.pop_back();
                cells.push_back(k);
                const int i = static_cast<int>(k % map.nx), j = static_cast<int>(k / map.nx);
                const int di[4] = {1, -1, 0, 0}, dj[4] = {0, 0, 1, -1};
                for (int d = 0; d < 4; ++d)
                {
                    const int ni = i + di[d], nj = j + dj[d];
                    if (ni < 0 || nj < 0 || ni >= map.nx || nj >= map.ny)
                        continue;
                    const std::size_t nk = map.index(ni, nj);
                    if (map.hole_mask[nk] && !visited[nk])
                    {
                        visited[nk] = 1;
                        stack.push_back(nk);
                    }
                }
            }
            std::sort(cells.begin(), cells.end());
            HoleRegion region;
            for (auto k : cells)
                region.cells.emplace_back(static_cast<int>(k % map.nx), static_cast<int>(k / map.nx));
            region.area_m2 = static_cast<double>(cells.size()) * map.cell_size * map.cell_size;
            regions.push_back(std::move(region));
        }

        // Regions are discovered in order of their lowest cell index, so a stable sort keeps that as tie-break.
        std::stable_sort(regions.begin(), regions.end(),
                         [](const HoleRegion &a, const HoleRegion &b) { return a.cells.size() > b.cells.size(); });
        return regions;
    }

    std::vector<Point3> candidate_positions(const Scene &scene, const GridSpec &candidate_grid,
                                            const XyRegion &region)
    {
        const CoverageMap grid = make_grid(scene, candidate_grid);
        std::vector<Point3> out;
        for (int j = 0; j < grid.ny; ++j)
            for (int i = 0; i < grid.nx; ++i)
            {
                const Point3 c = grid.cell_center(i, j);
                if (!grid.excluded[grid.index(i, j)] && region.contains(c.x, c.y))
                    out.push_back(c);
            }
        return out;
    }

    PlacementResult optimize_tx(const Scene &scene, const std::vector<Point3> &candidates, const GridSpec &rx_grid,
                                const TraceConfig &config, double threshold_db, unsigned threads)
    {
        if (candidates.empty())
            throw CoverageError("no candidate transmitter positions");
        config.check();
        make_grid(scene, rx_grid); // validates the receiver grid up front

        PlacementResult result;
        result.candidates.resize(candidates.size());
        detail::parallel_for(
            candidates.size(),
            [&](std::size_t c)
            {
                const auto map = sweep(scene, candidates[c], rx_grid, config, threshold_db, 1);
                result.candidates[c] = {candidates[c], map.covered_fraction()};
            },
            threads);

        std::size_t best = 0;
        for (std::size_t c = 1; c < result.candidates.size(); ++c)
        {
            const auto &a = result.candidates[c], &b = result.candidates[best];
            const bool better =
                a.covered_fraction > b.covered_fraction ||
                (a.covered_fraction == b.covered_fraction &&
                 (a.position.x < b.position.x || (a.position.x == b.position.x && a.position.y < b.position.y)));
            if (better)
                best = c;
        }
        result.best_index = best;
        result.best_tx = result.candidates[best].position;
        result.covered_fraction = result.candidates[best].covered_fraction;
        return result;
    }

    PlacementResult optimize_tx(const Scene &scene, const GridSpec &candidate_grid, const XyRegion &region,
                                const GridSpec &rx_grid, const TraceConfig &config, double threshold_db,
                                unsigned threads)
    {
        return optimize_tx(scene, candidate_positions(scene, candidate_grid, region), rx_grid, config, threshold_db,
                           threads);
    }

} // namespace indoorrt
