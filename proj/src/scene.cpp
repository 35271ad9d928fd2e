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

#include "indoorrt/scene.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace indoorrt
{
    const Surface *Scene::find_surface(const std::string &id) const
    {
        auto it = std::find_if(surfaces.begin(), surfaces.end(), [&](const Surface &s) { return s.id == id; });
        return it == surfaces.end() ? nullptr : &*it;
    }

    static std::optional<Point3> find_point(const std::vector<NamedPoint> &points, const std::string &id)
    {
        for (const auto &p : points)
            if (p.id == id)
                return p.position;
        return std::nullopt;
    }

    std::optional<Point3> Scene::find_tx(const std::string &id) const { return find_point(tx_points, id); }
    std::optional<Point3> Scene::find_rx(const std::string &id) const { return find_point(rx_points, id); }

    std::string check_surface(const Surface &s)
    {
        if (!is_finite(s.origin) || !is_finite(s.edge_u) || !is_finite(s.edge_v))
            return "non-finite coordinates";
        const double nu = norm(s.edge_u), nv = norm(s.edge_v);
        if (!(nu > 0.0) || !(nv > 0.0) || !std::isfinite(nu) || !std::isfinite(nv))
            return "zero-length edge";
        if (std::abs(dot(s.edge_u, s.edge_v)) > 1e-9 * nu * nv)
            return "edges are not orthogonal";
        if (!std::isfinite(s.area()) || !(s.area() > 0.0))
            return "degenerate area";
        return {};
    }

    std::vector<std::string> validate_scene(const Scene &scene)
    {
        std::vector<std::string> violations;

        for (const auto &[key, material] : scene.materials)
        {
            if (key != material.id)
                violations.push_back("material '" + key + "': key does not match id '" + material.id + "'");
            if (auto msg = material.check(); !msg.empty())
                violations.push_back(std::move(msg));
        }

        std::set<std::string> seen;
        for (const auto &s : scene.surfaces)
        {
            const std::string name = "surface '" + s.id + "'";
            if (s.id.empty())
                violations.push_back("surface with empty id");
            if (!seen.insert(s.id).second)
                violations.push_back(name + ": duplicate id");
            if (!scene.materials.contains(s.material_id))
                violations.push_back(name + ": unresolved material '" + s.material_id + "'");
            if (auto msg = check_surface(s); !msg.empty())
                violations.push_back(name + ": " + msg);
        }

        const bool bounds_ok = !(scene.bounds.min.x >= scene.bounds.max.x || scene.bounds.min.y >= scene.bounds.max.y ||
                                 scene.bounds.min.z >= scene.bounds.max.z);
        if (!bounds_ok)
            violations.push_back("bounds: min must be below max on every axis");

        auto check_points = [&](const std::vector<NamedPoint> &points, const std::string &kind)
        {
            std::set<std::string> ids;
            for (const auto &p : points)
            {
                const std::string name = kind + " '" + p.id + "'";
                if (p.id.empty())
                    violations.push_back(kind + " with empty id");
                if (!ids.insert(p.id).second)
                    violations.push_back(name + ": duplicate id");
                if (!is_finite(p.position))
                    violations.push_back(name + ": non-finite coordinates");
                else if (bounds_ok && !scene.bounds.strictly_contains(p.position))
                    violations.push_back(name + ": outside bounds");
            }
        };
        check_points(scene.tx_points, "tx");
        check_points(scene.rx_points, "rx");

        return violations;
    }

    std::vector<Surface> make_box(const std::string &id_prefix, const Point3 &lo, const Point3 &hi,
                                  const std::string &material_id)
    {
        if (!is_finite(lo) || !is_finite(hi) || !(lo.x < hi.x) || !(lo.y < hi.y) || !(lo.z < hi.z))
            throw std::invalid_argument("make_box: degenerate box '" + id_prefix + "'");

        const Vec3 dx{hi.x - lo.x, 0, 0}, dy{0, hi.y - lo.y, 0}, dz{0, 0, hi.z - lo.z};

        // Edge order is chosen so that u x v points out of the box.
        return {
            {id_prefix + "_xneg", lo, dz, dy, material_id},
            {id_prefix + "_xpos", lo + dx, dy, dz, material_id},
            {id_prefix + "_yneg", lo, dx, dz, material_id},
            {id_prefix + "_ypos", lo + dy, dz, dx, material_id},
            {id_prefix + "_zneg", lo, dy, dx, material_id},
            {id_prefix + "_zpos", lo + dz, dx, dy, material_id},
        };
    }

    std::optional<Hit> ray_surface_intersect(const Point3 &origin, const Vec3 &direction, const Surface &surface,
                                             double edge_tolerance)
    {
        const Vec3 n = surface.normal();
        const double denom = dot(direction, n);
        if (std::abs(denom) < 1e-12)
            return std::nullopt;

        const double t = dot(surface.origin - origin, n) / denom;
        if (!(t > epsilon_hit))
            return std::nullopt;

        const Point3 p = origin + t * direction;
        const Vec3 rel = p - surface.origin;
        const double lu = norm(surface.edge_u), lv = norm(surface.edge_v);
        const double a = dot(rel, surface.edge_u) / lu; // meters along u
        const double b = dot(rel, surface.edge_v) / lv;
        if (a < -edge_tolerance || a > lu + edge_tolerance || b < -edge_tolerance || b > lv + edge_tolerance)
            return std::nullopt;
        return Hit{t, p};
    }

    Point3 mirror_point(const Point3 &p, const Surface &surface)
    {
        const Vec3 n = surface.normal();
        return p - 2.0 * dot(p - surface.origin, n) * n;
    }

    double signed_distance(const Point3 &p, const Surface &surface) { return dot(p - surface.origin, surface.normal()); }

    double distance_to_surface(const Point3 &p, const Surface &surface)
    {
        const Vec3 rel = p - surface.origin;
        const double lu = norm(surface.edge_u), lv = norm(surface.edge_v);
        const Vec3 eu = surface.edge_u * (1.0 / lu), ev = surface.edge_v * (1.0 / lv);
        const double a = std::clamp(dot(rel, eu), 0.0, lu);
        const double b = std::clamp(dot(rel, ev), 0.0, lv);
        return distance(p, surface.origin + a * eu + b * ev);
    }

} // namespace indoorrt
