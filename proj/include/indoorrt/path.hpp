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

#ifndef INDOORRT_PATH_HPP
#define INDOORRT_PATH_HPP

#include "indoorrt/materials.hpp"
#include "indoorrt/vec3.hpp"

#include <string>
#include <vector>

namespace indoorrt
{
    enum class InteractionKind
    {
        launch,
        reflection,
        transmission,
        arrival
    };

    const char *to_string(InteractionKind kind);

    struct Interaction
    {
        InteractionKind kind = InteractionKind::launch;
        Point3 point;
        std::string surface_id; // empty for launch and arrival
        int surface_index = -1; // index into Scene::surfaces, -1 for launch and arrival
        double cos_incidence = 1.0;

        friend bool operator==(const Interaction &, const Interaction &) = default;
    };

    /// One propagation path from launch at the Tx to arrival at the Rx.
    struct PropagationPath
    {
        std::vector<Interaction> interactions;
        double length = 0.0; // m
        cdouble gain;        // dimensionless field transfer
        double delay = 0.0;  // s, length / c

        int n_reflections() const;
        int n_transmissions() const;
        bool is_los() const { return n_reflections() == 0; }
        double power_db() const;

        /// Surface ids in interaction order, e.g. "R:wall_west;T:lab_wall1". "LOS" for a bare direct path.
        std::string surface_key() const;

        /// All interactions, e.g. "launch;R:wall_west;T:lab_wall1;arrival".
        std::string summary() const;

        friend bool operator==(const PropagationPath &, const PropagationPath &) = default;
    };

} // namespace indoorrt

#endif
