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

#ifndef INDOORRT_TRACER_HPP
#define INDOORRT_TRACER_HPP

#include "indoorrt/path.hpp"
#include "indoorrt/scene.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace indoorrt
{
    class TraceError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    struct TraceConfig
    {
        int max_reflection_order = 3;
        int max_paths = 25;
        double frequency = 1e9;          // Hz
        double min_path_gain_db = -250.0; // paths weaker than this are dropped

        /// Throws TraceError when a field is out of range.
        void check() const;
    };

    /// Edge tolerance for blocking tests: segments grazing a rectangle within this distance are blocked.
    inline constexpr double blocking_edge_tolerance = 1e-6;

    struct ImageNode
    {
        Point3 image;
        int surface = -1; // surface mirrored across to reach this node, -1 at the root
        int parent = -1;
        int depth = 0;
    };

    /// Mirror images of one source. nodes[0] is the source itself; every node's parent precedes it.
    struct ImageTree
    {
        Point3 source;
        std::vector<ImageNode> nodes;

        /// Surface indices in the order the path meets them, starting from the source.
        std::vector<int> sequence(int node) const;
    };

    /// Builds all image sequences up to max_order. Sequences that repeat a surface immediately
    /// are pruned, as are children whose surface lies entirely behind the parent's reflecting plane
    /// and mirrors of points lying in the mirror plane.
    ImageTree enumerate_images(const Scene &scene, const Point3 &source, int max_order);

    /// Back-traces `rx` through the node's image chain. Returns launch, reflections and arrival with
    /// exact points when every reflection lands inside its rectangle on the side the wave arrives
    /// from; transmissions are not included.
    std::optional<std::vector<Interaction>> validate_image_path(const Scene &scene, const ImageTree &tree, int node,
                                                                const Point3 &rx);

    /// All specular paths from tx to rx, with wall transmissions and complex gains, strongest first.
    /// Throws TraceError when tx equals rx or either point lies outside the scene bounds.
    std::vector<PropagationPath> trace(const Scene &scene, const Point3 &tx, const Point3 &rx,
                                       const TraceConfig &config = {});

    /// Same as trace() with a precomputed image tree for tree.source.
    std::vector<PropagationPath> trace_with_images(const Scene &scene, const ImageTree &tree, const Point3 &rx,
                                                   const TraceConfig &config = {});

} // namespace indoorrt

#endif
