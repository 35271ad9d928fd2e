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

#ifndef INDOORRT_SCENE_HPP
#define INDOORRT_SCENE_HPP

#include "indoorrt/materials.hpp"
#include "indoorrt/vec3.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace indoorrt
{
    /// Minimum ray advance. Keeps a ray leaving a surface from hitting that surface again.
    inline constexpr double epsilon_hit = 1e-6;

    /// Planar rectangle spanned by two orthogonal edges from `origin`.
    /// The unit normal is u x v; surfaces are two-sided.
    struct Surface
    {
        std::string id;
        Point3 origin;
        Vec3 edge_u;
        Vec3 edge_v;
        std::string material_id;

        Vec3 normal() const { return normalized(cross(edge_u, edge_v)); }
        double area() const { return norm(cross(edge_u, edge_v)); }
        Point3 center() const { return origin + 0.5 * (edge_u + edge_v); }

        friend bool operator==(const Surface &, const Surface &) = default;
    };

    struct NamedPoint
    {
        std::string id;
        Point3 position;

        friend bool operator==(const NamedPoint &, const NamedPoint &) = default;
    };

    /// Immutable-after-construction description of an indoor environment.
    struct Scene
    {
        std::vector<Surface> surfaces;
        std::map<std::string, Material> materials;
        std::vector<NamedPoint> tx_points;
        std::vector<NamedPoint> rx_points;
        Aabb bounds; // unbounded by default

        const Material &material_of(const Surface &surface) const { return materials.at(surface.material_id); }
        const Surface *find_surface(const std::string &id) const;
        std::optional<Point3> find_tx(const std::string &id) const;
        std::optional<Point3> find_rx(const std::string &id) const;

        friend bool operator==(const Scene &, const Scene &) = default;
    };

    /// Geometric Surface invariants only: finite, non-zero orthogonal edges. Empty when valid.
    std::string check_surface(const Surface &surface);

    /// Checks every Scene and Surface invariant. Returns one message per violation; each names
    /// the offending entity. An empty result means the scene is valid.
    std::vector<std::string> validate_scene(const Scene &scene);

    /// Six outward-facing faces of the axis-aligned box [min_corner, max_corner], named
    /// id_prefix + "_xneg", "_xpos", "_yneg", "_ypos", "_zneg", "_zpos".
    /// Throws std::invalid_argument on a degenerate box.
    std::vector<Surface> make_box(const std::string &id_prefix, const Point3 &min_corner, const Point3 &max_corner,
                                  const std::string &material_id);

    struct Hit
    {
        double t = 0.0;
        Point3 point;
    };

    /// Nearest hit with t > epsilon_hit of the ray origin + t * direction on the closed rectangle.
    /// `edge_tolerance` (m) grows the rectangle on every side. Returns nothing for rays parallel to
    /// the plane (|d . n| < 1e-12) and for hits outside the rectangle.
    std::optional<Hit> ray_surface_intersect(const Point3 &origin, const Vec3 &direction, const Surface &surface,
                                             double edge_tolerance = 0.0);

    /// Mirror image of a point across the surface's plane.
    Point3 mirror_point(const Point3 &p, const Surface &surface);

    /// Signed distance of p from the surface plane along the surface normal.
    double signed_distance(const Point3 &p, const Surface &surface);

    /// Euclidean distance from p to the closed rectangle.
    double distance_to_surface(const Point3 &p, const Surface &surface);

} // namespace indoorrt

#endif
