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

#include "indoorrt/tracer.hpp"

#include "indoorrt/channel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace indoorrt
{
    // ---------- Path helpers ----------

    const char *to_string(InteractionKind kind)
    {
        switch (kind)
        {
        case InteractionKind::launch:
            return "launch";
        case InteractionKind::reflection:
            return "reflection";
        case InteractionKind::transmission:
            return "transmission";
        case InteractionKind::arrival:
            return "arrival";
        }
        return "?";
    }

    int PropagationPath::n_reflections() const
    {
        return static_cast<int>(std::count_if(interactions.begin(), interactions.end(), [](const Interaction &i)
                                              { return i.kind == InteractionKind::reflection; }));
    }

    int PropagationPath::n_transmissions() const
    {
        return static_cast<int>(std::count_if(interactions.begin(), interactions.end(), [](const Interaction &i)
                                              { return i.kind == InteractionKind::transmission; }));
    }

    double PropagationPath::power_db() const { return 10.0 * std::log10(std::norm(gain)); }

    std::string PropagationPath::surface_key() const
    {
        std::string key;
        for (const auto &i : interactions)
        {
            if (i.kind != InteractionKind::reflection && i.kind != InteractionKind::transmission)
                continue;
            if (!key.empty())
                key += ';';
            key += (i.kind == InteractionKind::reflection ? "R:" : "T:") + i.surface_id;
        }
        return key.empty() ? "LOS" : key;
    }

    std::string PropagationPath::summary() const
    {
        std::string out;
        for (const auto &i : interactions)
        {
            if (!out.empty())
                out += ';';
            switch (i.kind)
            {
            case InteractionKind::launch:
                out += "launch";
                break;
            case InteractionKind::arrival:
                out += "arrival";
                break;
            case InteractionKind::reflection:
                out += "R:" + i.surface_id;
                break;
            case InteractionKind::transmission:
                out += "T:" + i.surface_id;
                break;
            }
        }
        return out;
    }

    void TraceConfig::check() const
    {
        if (max_reflection_order < 0)
            throw TraceError("max reflection order must be >= 0");
        if (max_paths < 1)
            throw TraceError("max paths must be >= 1");
        if (!(frequency > 0.0) || !std::isfinite(frequency))
            throw TraceError("frequency must be positive");
        if (std::isnan(min_path_gain_db))
            throw TraceError("min path gain must be a number");
    }

    std::vector<int> ImageTree::sequence(int node) const
    {
        std::vector<int> seq;
        for (int n = node; n > 0; n = nodes[n].parent)
            seq.push_back(nodes[n].surface);
        std::reverse(seq.begin(), seq.end());
        return seq;
    }

    // ---------- Geometry cache ----------

    namespace
    {
        // Precomputed plane frame of one rectangle.
        struct Plane
        {
            Point3 origin;
            Vec3 normal;
            Vec3 unit_u, unit_v;
            double len_u = 0.0, len_v = 0.0;
            double offset = 0.0; // normal . origin
            std::array<Point3, 4> corners;

            double signed_distance(const Point3 &p) const { return dot(p, normal) - offset; }

            bool contains(const Point3 &p, double tol) const
            {
                const Vec3 rel = p - origin;
                const double a = dot(rel, unit_u), b = dot(rel, unit_v);
                return a >= -tol && a <= len_u + tol && b >= -tol && b <= len_v + tol;
            }
        };

        std::vector<Plane> planes_of(const Scene &scene)
        {
            std::vector<Plane> planes;
            planes.reserve(scene.surfaces.size());
            for (const auto &s : scene.surfaces)
            {
                Plane p;
                p.origin = s.origin;
                p.normal = s.normal();
                p.len_u = norm(s.edge_u);
                p.len_v = norm(s.edge_v);
                p.unit_u = s.edge_u * (1.0 / p.len_u);
                p.unit_v = s.edge_v * (1.0 / p.len_v);
                p.offset = dot(s.origin, p.normal);
                p.corners = {s.origin, s.origin + s.edge_u, s.origin + s.edge_v, s.origin + s.edge_u + s.edge_v};
                planes.push_back(p);
            }
            return planes;
        }

        // Tolerance for a reflection point to count as on the rectangle boundary.
        constexpr double reflection_edge_tolerance = 1e-9;

        // Points closer to a mirror plane than this are treated as lying in it.
        constexpr double in_plane_tolerance = 1e-9;

        // `points` is scratch space reused across calls.
        std::optional<std::vector<Interaction>> back_trace(const Scene &scene, const std::vector<Plane> &planes,
                                                           const ImageTree &tree, int node, const Point3 &rx,
                                                           std::vector<Point3> &points)
        {
            const int depth = tree.nodes[node].depth;
            points.resize(depth + 2);
            points[depth + 1] = rx;

            Point3 target = rx;
            int n = node;
            for (int k = depth; k >= 1; --k)
            {
                const ImageNode &img = tree.nodes[n];
                const Plane &pl = planes[img.surface];
                const double dt = pl.signed_distance(target);
                const double di = pl.signed_distance(img.image);

                // The target must be on the side the wave arrives from, i.e. opposite its image.
                if (!((dt > in_plane_tolerance && di < -in_plane_tolerance) ||
                      (dt < -in_plane_tolerance && di > in_plane_tolerance)))
                    return std::nullopt;

                const Point3 p = target + (dt / (dt - di)) * (img.image - target);
                if (!pl.contains(p, reflection_edge_tolerance) || distance(p, target) <= epsilon_hit)
                    return std::nullopt;

                points[k] = p;
                target = p;
                n = img.parent;
            }
            points[0] = tree.source;
            if (distance(points[0], points[1]) <= epsilon_hit)
                return std::nullopt;

            std::vector<Interaction> out;
            out.reserve(depth + 2);
            out.push_back({InteractionKind::launch, tree.source, {}, -1, 1.0});
            const auto seq = tree.sequence(node);
            for (int k = 1; k <= depth; ++k)
            {
                const int s = seq[k - 1];
                const Vec3 incoming = normalized(points[k] - points[k - 1]);
                const double cos_inc = std::min(1.0, std::abs(dot(incoming, planes[s].normal)));
                out.push_back({InteractionKind::reflection, points[k], scene.surfaces[s].id, s, cos_inc});
            }
            out.push_back({InteractionKind::arrival, rx, {}, -1, 1.0});
            return out;
        }

        struct Crossing
        {
            double t;
            int surface;
            Point3 point;
            double cos_incidence;
        };

        // Surfaces crossed strictly between a and b, nearest first.
        void crossings(const std::vector<Plane> &planes, const Point3 &a, const Point3 &b, std::vector<Crossing> &out)
        {
            out.clear();
            const Vec3 d = b - a;
            const double len = norm(d);
            const Vec3 dir = d * (1.0 / len);
            for (int s = 0; s < static_cast<int>(planes.size()); ++s)
            {
                const Plane &pl = planes[s];
                const double denom = dot(dir, pl.normal);
                if (std::abs(denom) < 1e-12)
                    continue;
                const double t = -pl.signed_distance(a) / denom;
                if (!(t > epsilon_hit) || !(t < len - epsilon_hit))
                    continue;
                const Point3 p = a + t * dir;
                if (!pl.contains(p, blocking_edge_tolerance))
                    continue;
                out.push_back({t, s, p, std::min(1.0, std::abs(denom))});
            }
            std::sort(out.begin(), out.end(), [](const Crossing &x, const Crossing &y)
                      { return x.t < y.t || (x.t == y.t && x.surface < y.surface); });
        }

        bool same_geometry(const PropagationPath &a, const PropagationPath &b)
        {
            if (a.n_reflections() != b.n_reflections())
                return false;
            std::vector<Point3> pa, pb;
            for (const auto &i : a.interactions)
                if (i.kind == InteractionKind::reflection)
                    pa.push_back(i.point);
            for (const auto &i : b.interactions)
                if (i.kind == InteractionKind::reflection)
                    pb.push_back(i.point);
            for (std::size_t k = 0; k < pa.size(); ++k)
                if (distance(pa[k], pb[k]) > 1e-9)
                    return false;
            return true;
        }

        bool stronger_first(const PropagationPath &a, const PropagationPath &b)
        {
            const double pa = std::norm(a.gain), pb = std::norm(b.gain);
            if (pa != pb)
                return pa > pb;
            if (a.length != b.length)
                return a.length < b.length;
            return a.surface_key() < b.surface_key();
        }

        void check_endpoints(const Scene &scene, const Point3 &tx, const Point3 &rx)
        {
            if (!is_finite(tx) || !is_finite(rx))
                throw TraceError("tx and rx must have finite coordinates");
            if (tx == rx)
                throw TraceError("tx equals rx");
            if (!scene.bounds.strictly_contains(tx))
                throw TraceError("tx lies outside the scene bounds");
            if (!scene.bounds.strictly_contains(rx))
                throw TraceError("rx lies outside the scene bounds");
        }
    } // namespace

    // ---------- Image enumeration ----------

    ImageTree enumerate_images(const Scene &scene, const Point3 &source, int max_order)
    {
        const auto planes = planes_of(scene);
        const int n_surf = static_cast<int>(planes.size());

        ImageTree tree;
        tree.source = source;
        tree.nodes.push_back({source, -1, -1, 0});

        std::size_t level_begin = 0, level_end = 1;
        for (int depth = 1; depth <= max_order; ++depth)
        {
            for (std::size_t n = level_begin; n < level_end; ++n)
            {
                // Copy: push_back below may reallocate.
                const ImageNode parent = tree.nodes[n];

                // After reflecting off the parent's surface the wave travels on the side of that
                // plane where the parent's own source lies.
                double live_side = 0.0;
                if (parent.surface >= 0)
                    live_side = planes[parent.surface].signed_distance(tree.nodes[parent.parent].image);

                for (int s = 0; s < n_surf; ++s)
                {
                    if (s == parent.surface)
                        continue;
                    const Plane &pl = planes[s];
                    const double d = pl.signed_distance(parent.image);
                    if (std::abs(d) <= in_plane_tolerance)
                        continue;

                    if (parent.surface >= 0)
                    {
                        const Plane &pp = planes[parent.surface];
                        bool reachable = false;
                        for (const auto &c : pl.corners)
                        {
                            const double dc = pp.signed_distance(c);
                            if ((live_side > 0.0 && dc > in_plane_tolerance) ||
                                (live_side < 0.0 && dc < -in_plane_tolerance))
                            {
                                reachable = true;
                                break;
                            }
                        }
                        if (!reachable)
                            continue;
                    }

                    tree.nodes.push_back({parent.image - (2.0 * d) * pl.normal, s, static_cast<int>(n), depth});
                }
            }
            level_begin = level_end;
            level_end = tree.nodes.size();
        }
        return tree;
    }

    std::optional<std::vector<Interaction>> validate_image_path(const Scene &scene, const ImageTree &tree, int node,
                                                                const Point3 &rx)
    {
        std::vector<Point3> scratch;
        return back_trace(scene, planes_of(scene), tree, node, rx, scratch);
    }

    // ---------- Tracing ----------

    std::vector<PropagationPath> trace_with_images(const Scene &scene, const ImageTree &tree, const Point3 &rx,
                                                   const TraceConfig &config)
    {
        config.check();
        check_endpoints(scene, tree.source, rx);

        const auto planes = planes_of(scene);
        std::vector<PropagationPath> paths;
        std::vector<Crossing> hits;
        std::vector<Point3> scratch;

        for (int node = 0; node < static_cast<int>(tree.nodes.size()); ++node)
        {
            if (tree.nodes[node].depth > config.max_reflection_order)
                break; // nodes are stored by increasing depth

            auto skeleton = back_trace(scene, planes, tree, node, rx, scratch);
            if (!skeleton)
                continue;

            PropagationPath path;
            path.interactions.reserve(skeleton->size() + 4);
            path.interactions.push_back(skeleton->front());
            bool opaque = false;
            for (std::size_t k = 1; k < skeleton->size() && !opaque; ++k)
            {
                const Point3 &a = (*skeleton)[k - 1].point;
                const Point3 &b = (*skeleton)[k].point;
                path.length += distance(a, b);
                crossings(planes, a, b, hits);
                for (const auto &h : hits)
                {
                    const Material &m = scene.material_of(scene.surfaces[h.surface]);
                    if (m.is_pec)
                    {
                        opaque = true;
                        break;
                    }
                    path.interactions.push_back({InteractionKind::transmission, h.point, scene.surfaces[h.surface].id,
                                                 h.surface, h.cos_incidence});
                }
                path.interactions.push_back((*skeleton)[k]);
            }
            if (opaque)
                continue;

            path.gain = path_gain(path.interactions, path.length, config.frequency, scene);
            path.delay = path.length / speed_of_light;
            if (!(path.power_db() >= config.min_path_gain_db))
                continue;
            paths.push_back(std::move(path));
        }

        std::sort(paths.begin(), paths.end(), stronger_first);

        // A reflection landing exactly on the shared edge of two coplanar rectangles is found once per
        // rectangle; keep the first in the output order.
        std::vector<std::size_t> by_length(paths.size());
        std::iota(by_length.begin(), by_length.end(), 0);
        std::stable_sort(by_length.begin(), by_length.end(),
                         [&](std::size_t a, std::size_t b) { return paths[a].length < paths[b].length; });
        std::vector<bool> drop(paths.size(), false);
        for (std::size_t i = 0; i < by_length.size(); ++i)
            for (std::size_t j = i + 1; j < by_length.size(); ++j)
            {
                const auto a = by_length[i], b = by_length[j];
                if (paths[b].length - paths[a].length > 1e-9)
                    break;
                if (!drop[a] && !drop[b] && same_geometry(paths[a], paths[b]))
                    drop[std::max(a, b)] = true;
            }

        std::vector<PropagationPath> out;
        out.reserve(std::min<std::size_t>(paths.size(), config.max_paths));
        for (std::size_t i = 0; i < paths.size() && out.size() < static_cast<std::size_t>(config.max_paths); ++i)
            if (!drop[i])
                out.push_back(std::move(paths[i]));
        return out;
    }

    std::vector<PropagationPath> trace(const Scene &scene, const Point3 &tx, const Point3 &rx,
                                       const TraceConfig &config)
    {
        config.check();
        check_endpoints(scene, tx, rx);
        return trace_with_images(scene, enumerate_images(scene, tx, config.max_reflection_order), rx, config);
    }

} // namespace indoorrt
