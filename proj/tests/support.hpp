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

#ifndef INDOORRT_TESTS_SUPPORT_HPP
#define INDOORRT_TESTS_SUPPORT_HPP

// Independent reference computations shared by the unit and acceptance tests. Nothing here
// calls into the library except to build inputs, so the numbers can be trusted as oracles.

#include "indoorrt/scene.hpp"
#include "indoorrt/tracer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace oracle
{
    using cd = std::complex<double>;
    inline constexpr double c0 = 299792458.0;
    inline constexpr double eps0 = 8.8541878128e-12;
    inline constexpr double PI = 3.14159265358979323846;

    // Free-space power gain of isotropic antennas in dB.
    inline double friis_db(double distance, double frequency)
    {
        const double lambda = c0 / frequency;
        return 20.0 * std::log10(lambda / (4.0 * PI * distance));
    }

    inline cd permittivity(double er, double sigma, double f) { return {er, -sigma / (2.0 * PI * f * eps0)}; }

    // Perpendicular-polarization single-pass slab: entry interface, exit interface and
    // exponential decay along the refracted path, each evaluated on its own.
    inline cd slab(double er, double sigma, double thickness, double theta, double f)
    {
        const cd eps = permittivity(er, sigma, f);
        const double ci = std::cos(theta), si = std::sin(theta);
        const cd kz_ratio = std::sqrt(eps - si * si);
        const cd entry = 2.0 * ci / (ci + kz_ratio);
        const cd exit = 2.0 * kz_ratio / (kz_ratio + ci);
        const cd n = std::sqrt(eps);
        const double sin_t = si / n.real();
        const double path = thickness / std::sqrt(1.0 - sin_t * sin_t);
        const double alpha = 2.0 * PI * f / c0 * std::abs(n.imag());
        return entry * exit * std::exp(-alpha * path);
    }

    // The 25 mirror images of order <= 2 in the box [0,a]x[0,b]x[0,c]: per axis the coordinate
    // is kept (0 bounces), reflected once (-x, 2a - x) or twice (x +- 2a).
    inline std::vector<std::pair<int, indoorrt::Point3>> box_images(const indoorrt::Point3 &s, double a, double b,
                                                                    double c)
    {
        auto axis = [](double x, double size)
        {
            return std::array<std::vector<double>, 3>{std::vector<double>{x}, std::vector<double>{-x, 2 * size - x},
                                                      std::vector<double>{x + 2 * size, x - 2 * size}};
        };
        const auto ax = axis(s.x, a), ay = axis(s.y, b), az = axis(s.z, c);
        std::vector<std::pair<int, indoorrt::Point3>> out;
        for (int kx = 0; kx <= 2; ++kx)
            for (int ky = 0; ky + kx <= 2; ++ky)
                for (int kz = 0; kz + ky + kx <= 2; ++kz)
                    for (double x : ax[kx])
                        for (double y : ay[ky])
                            for (double z : az[kz])
                                out.push_back({kx + ky + kz, {x, y, z}});
        return out;
    }

    // Unfolded length tx -> p1 -> ... -> rx minimized over points on each rectangle by grid search.
    // A full 5 cm sweep per rectangle seeds the search, then 5 cm, 1 cm and 1 mm grids are searched
    // around the incumbent: one rectangle at a time (+-6 cells) and jointly over all rectangles
    // (+-2 cells each) until nothing improves. The length is convex in the points.
    struct Unfolded
    {
        double length = 0.0;
        std::vector<indoorrt::Point3> points;
    };

    inline Unfolded brute_force_unfolded(const indoorrt::Point3 &tx, const indoorrt::Point3 &rx,
                                         const std::vector<indoorrt::Surface> &walls)
    {
        using indoorrt::Point3;
        const std::size_t n = walls.size();
        std::vector<std::array<double, 2>> st(n, std::array<double, 2>{0.5, 0.5}); // fractional coordinates
        auto point = [&](std::size_t k, const std::array<double, 2> &c)
        { return walls[k].origin + c[0] * walls[k].edge_u + c[1] * walls[k].edge_v; };
        auto total = [&](const std::vector<std::array<double, 2>> &coords)
        {
            double len = 0.0;
            Point3 prev = tx;
            for (std::size_t k = 0; k < n; ++k)
            {
                const Point3 p = point(k, coords[k]);
                len += indoorrt::distance(prev, p);
                prev = p;
            }
            return len + indoorrt::distance(prev, rx);
        };
        auto step_of = [&](std::size_t k, double step_m)
        {
            return std::array<double, 2>{step_m / indoorrt::norm(walls[k].edge_u),
                                         step_m / indoorrt::norm(walls[k].edge_v)};
        };
        double best = total(st);

        // Seed: full 5 cm sweep of each rectangle with the others fixed.
        for (std::size_t k = 0; k < n; ++k)
        {
            const auto d = step_of(k, 0.05);
            for (double a = 0.0; a <= 1.0 + 1e-12; a += d[0])
                for (double b = 0.0; b <= 1.0 + 1e-12; b += d[1])
                {
                    auto trial = st;
                    trial[k] = {std::min(a, 1.0), std::min(b, 1.0)};
                    if (const double len = total(trial); len < best)
                        best = len, st = trial;
                }
        }

        for (double step_m : {0.05, 0.01, 0.001})
        {
            for (int iteration = 0; iteration < 10000; ++iteration)
            {
                bool moved = false;
                for (std::size_t k = 0; k < n; ++k)
                {
                    const auto d = step_of(k, step_m);
                    const auto centre = st[k];
                    for (int a = -6; a <= 6; ++a)
                        for (int b = -6; b <= 6; ++b)
                        {
                            auto trial = st;
                            trial[k] = {std::clamp(centre[0] + a * d[0], 0.0, 1.0),
                                        std::clamp(centre[1] + b * d[1], 0.0, 1.0)};
                            if (const double len = total(trial); len < best - 1e-15)
                                best = len, st = trial, moved = true;
                        }
                }
                // Joint moves of every rectangle at once: 5^(2n) offsets.
                const auto centre = st;
                std::size_t combos = 1;
                for (std::size_t k = 0; k < 2 * n; ++k)
                    combos *= 5;
                for (std::size_t m = 0; m < combos; ++m)
                {
                    auto trial = centre;
                    std::size_t code = m;
                    for (std::size_t k = 0; k < n; ++k)
                    {
                        const auto d = step_of(k, step_m);
                        for (int axis = 0; axis < 2; ++axis, code /= 5)
                            trial[k][axis] = std::clamp(centre[k][axis] + (static_cast<int>(code % 5) - 2) * d[axis], 0.0, 1.0);
                    }
                    if (const double len = total(trial); len < best - 1e-15)
                        best = len, st = trial, moved = true;
                }
                if (!moved)
                    break;
            }
        }
        std::vector<Point3> pts;
        for (std::size_t k = 0; k < n; ++k)
            pts.push_back(point(k, st[k]));
        return {best, pts};
    }

    // 64-bit FNV-1a of a file's bytes.
    inline std::uint64_t file_hash(const std::filesystem::path &path)
    {
        std::ifstream in(path, std::ios::binary);
        std::uint64_t h = 1469598103934665603ull;
        char ch;
        while (in.get(ch))
        {
            h ^= static_cast<unsigned char>(ch);
            h *= 1099511628211ull;
        }
        return h;
    }

    inline std::map<std::string, std::uint64_t> dir_hashes(const std::filesystem::path &dir)
    {
        std::map<std::string, std::uint64_t> out;
        for (const auto &e : std::filesystem::directory_iterator(dir))
            out[e.path().filename().string()] = file_hash(e.path());
        return out;
    }

    inline std::string read_file(const std::filesystem::path &path)
    {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }

    // Random valid scene: dielectric and PEC materials, rectangles with orthogonal edges in
    // arbitrary orientation, points strictly inside bounds (or unbounded).
    inline indoorrt::Scene random_scene(std::mt19937_64 &rng)
    {
        using namespace indoorrt;
        std::uniform_real_distribution<double> U(0.0, 1.0);
        auto uni = [&](double lo, double hi) { return lo + (hi - lo) * U(rng); };
        const std::string alphabet = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_.:-";
        auto ident = [&](const std::string &prefix)
        {
            std::string s = prefix;
            const int len = 1 + static_cast<int>(U(rng) * 6);
            for (int i = 0; i < len; ++i)
                s += alphabet[static_cast<std::size_t>(U(rng) * alphabet.size()) % alphabet.size()];
            return s;
        };

        Scene scene;
        const int n_mat = 1 + static_cast<int>(U(rng) * 4);
        std::vector<std::string> mats;
        for (int m = 0; m < n_mat; ++m)
        {
            const std::string id = ident("m" + std::to_string(m));
            scene.materials[id] = U(rng) < 0.25 ? make_pec(id)
                                                : make_dielectric(id, uni(1.0, 12.0), uni(0.0, 2.0), uni(1e-3, 0.6));
            mats.push_back(id);
        }
        const int n_rect = static_cast<int>(U(rng) * 12);
        for (int r = 0; r < n_rect; ++r)
        {
            Vec3 u{uni(-5, 5), uni(-5, 5), uni(-5, 5)};
            if (norm(u) < 0.1)
                u = {1, 0, 0};
            Vec3 w{uni(-1, 1), uni(-1, 1), uni(-1, 1)};
            Vec3 v = cross(u, w);
            if (norm(v) < 1e-3)
                v = cross(u, Vec3{0, 0, 1});
            if (norm(v) < 1e-3)
                v = cross(u, Vec3{0, 1, 0});
            v = normalized(v) * uni(0.05, 4.0);
            if (U(rng) < 0.3) // axis-aligned walls are the common case
            {
                u = {uni(0.1, 5), 0, 0};
                v = {0, 0, uni(0.1, 3)};
            }
            scene.surfaces.push_back({ident("s" + std::to_string(r)), {uni(-20, 20), uni(-20, 20), uni(-5, 5)}, u, v,
                                      mats[static_cast<std::size_t>(U(rng) * mats.size()) % mats.size()]});
        }
        const bool bounded = U(rng) < 0.7;
        if (bounded)
            scene.bounds = {{uni(-30, -25), uni(-30, -25), uni(-10, -8)}, {uni(25, 30), uni(25, 30), uni(8, 10)}};
        const int n_pts = static_cast<int>(U(rng) * 5);
        for (int p = 0; p < n_pts; ++p)
        {
            const Point3 at{uni(-20, 20), uni(-20, 20), uni(-5, 5)};
            (U(rng) < 0.5 ? scene.tx_points : scene.rx_points).push_back({ident("p" + std::to_string(p)), at});
        }
        return scene;
    }

    // Sorted (length, |gain|) pairs, for comparing path multisets.
    inline std::vector<std::pair<double, double>> length_gain_multiset(const std::vector<indoorrt::PropagationPath> &paths)
    {
        std::vector<std::pair<double, double>> out;
        for (const auto &p : paths)
            out.emplace_back(p.length, std::abs(p.gain));
        std::sort(out.begin(), out.end());
        return out;
    }

    // Worst relative difference between two (length, |gain|) multisets, +inf when they cannot be
    // paired. Paths whose lengths agree to `tol` (mirror-symmetric pairs, say) form one group and
    // are matched by gain within the group, so rounding cannot swap partners.
    inline double multiset_mismatch(std::vector<std::pair<double, double>> a, std::vector<std::pair<double, double>> b,
                                    double tol)
    {
        if (a.size() != b.size())
            return INFINITY;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        double worst = 0.0;
        std::size_t i = 0;
        while (i < a.size())
        {
            std::size_t j = i + 1;
            while (j < a.size() && a[j].first - a[j - 1].first <= tol * a[j].first)
                ++j;
            std::vector<double> ga, gb;
            for (std::size_t k = i; k < j; ++k)
            {
                worst = std::max(worst, std::abs(a[k].first - b[k].first) / a[k].first);
                ga.push_back(a[k].second);
                gb.push_back(b[k].second);
            }
            std::sort(ga.begin(), ga.end());
            std::sort(gb.begin(), gb.end());
            for (std::size_t k = 0; k < ga.size(); ++k)
                worst = std::max(worst, std::abs(ga[k] - gb[k]) / std::max(ga[k], 1e-300));
            i = j;
        }
        return worst;
    }

    inline bool close_rel(double a, double b, double rel) { return std::abs(a - b) <= rel * std::max({std::abs(a), std::abs(b), 1e-300}); }

} // namespace oracle

#endif
