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

#ifndef INDOORRT_VEC3_HPP
#define INDOORRT_VEC3_HPP

#include <cmath>

namespace indoorrt
{
    /// Cartesian 3-vector in meters. Used both for positions and for directions.
    struct Vec3
    {
        double x = 0.0;
        double y = 0.0;
        double z = 0.0;

        constexpr Vec3 &operator+=(const Vec3 &o)
        {
            x += o.x, y += o.y, z += o.z;
            return *this;
        }
        constexpr Vec3 &operator-=(const Vec3 &o)
        {
            x -= o.x, y -= o.y, z -= o.z;
            return *this;
        }
        constexpr Vec3 &operator*=(double s)
        {
            x *= s, y *= s, z *= s;
            return *this;
        }

        friend constexpr bool operator==(const Vec3 &, const Vec3 &) = default;
    };

    using Point3 = Vec3;

    constexpr Vec3 operator+(Vec3 a, const Vec3 &b) { return a += b; }
    constexpr Vec3 operator-(Vec3 a, const Vec3 &b) { return a -= b; }
    constexpr Vec3 operator-(const Vec3 &a) { return {-a.x, -a.y, -a.z}; }
    constexpr Vec3 operator*(Vec3 a, double s) { return a *= s; }
    constexpr Vec3 operator*(double s, Vec3 a) { return a *= s; }

    constexpr double dot(const Vec3 &a, const Vec3 &b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

    constexpr Vec3 cross(const Vec3 &a, const Vec3 &b)
    {
        return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
    }

    inline double norm(const Vec3 &a) { return std::sqrt(dot(a, a)); }
    inline double distance(const Vec3 &a, const Vec3 &b) { return norm(a - b); }

    inline Vec3 normalized(const Vec3 &a)
    {
        const double n = norm(a);
        return {a.x / n, a.y / n, a.z / n};
    }

    inline bool is_finite(const Vec3 &a)
    {
        return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
    }

    /// Axis-aligned box. Infinite extents are allowed and mean "unbounded".
    struct Aabb
    {
        Vec3 min{-INFINITY, -INFINITY, -INFINITY};
        Vec3 max{INFINITY, INFINITY, INFINITY};

        bool strictly_contains(const Vec3 &p) const
        {
            return p.x > min.x && p.x < max.x && p.y > min.y && p.y < max.y && p.z > min.z && p.z < max.z;
        }
        bool is_finite() const { return indoorrt::is_finite(min) && indoorrt::is_finite(max); }
        Vec3 extent() const { return max - min; }

        friend bool operator==(const Aabb &, const Aabb &) = default;
    };

} // namespace indoorrt

#endif
