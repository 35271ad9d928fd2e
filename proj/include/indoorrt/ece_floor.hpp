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

#ifndef INDOORRT_ECE_FLOOR_HPP
#define INDOORRT_ECE_FLOOR_HPP

#include "indoorrt/scene.hpp"

#include <string>
#include <vector>

namespace indoorrt
{
    // Bundled example site: first floor of the ECE department building, NIT Durgapur.
    //
    // x runs west -> east along the corridor, y runs south -> north, z is up.
    //
    //   y = 14.37  +--------+----------+-------+-----------+---------+--+
    //              |computer| communic.|  RS   | microwave |  EC 21  |sh|
    //   y =  7.00  +---  ---+----  ----+-- ----+----  -----+---  ----+--+
    //              |                  corridor                          |
    //   y =  4.10  +-- --+-- --+-- ... --+-- --+                        |
    //              | F1  | F2  |   ...   | F8  |   landing (stairs)     |
    //   y =  0.00  +-----+-----+---------+-----+------------------------+
    //              x = 0                  27.44                     34.8
    //
    // The staircase itself is not modeled; its footprint is left as an open landing. The
    // 0.48 m left over east of EC 21 is a closed service shaft. Walls have zero thickness and
    // doors are full-depth gaps below a lintel.

    struct EceFloorOptions
    {
        double door_width = 0.9;
        double door_height = 2.1;
        bool with_furniture = true;
        std::string furniture_material = "wood";
    };

    enum class RoomKind
    {
        faculty,
        lab,
        corridor,
        landing,
        shaft
    };

    struct Room
    {
        std::string name;
        RoomKind kind;
        double x_min, x_max, y_min, y_max;

        bool contains_xy(double x, double y) const { return x > x_min && x < x_max && y > y_min && y < y_max; }
    };

    namespace ece_floor
    {
        inline constexpr double length = 34.8;
        inline constexpr double width = 14.37;
        inline constexpr double height = 3.44;

        inline constexpr double faculty_width = 3.43;
        inline constexpr double faculty_depth = 4.1;
        inline constexpr int faculty_count = 8;
        inline constexpr double lab_depth = 7.37;
        inline constexpr double corridor_south = faculty_depth;     // 4.10
        inline constexpr double corridor_north = width - lab_depth; // 7.00

        inline constexpr double antenna_height = 2.0;

        // "Strong signal" level for hole maps of this floor. With the default materials every
        // cell stays above about -71 dB for any corridor transmitter, so the generic -90 dB
        // default marks nothing; -60 dB separates the corridor from the faculty rooms.
        inline constexpr double hole_threshold_db = -60.0;
    } // namespace ece_floor

    /// Room footprints in floor order: faculty rooms F1..F8, the five labs west to east,
    /// corridor, landing, shaft.
    std::vector<Room> ece_floor_rooms();

    /// Deterministic floor scene, including the 16 reconstructed receiver positions
    /// (rx1 corridor, rx2 computer lab, ...), the eastern-corridor transmitter tx1, the
    /// 33.44 m verification receiver rx_toa, and tx_ec21 for the furniture experiment.
    Scene make_ece_floor(const EceFloorOptions &options = {});

} // namespace indoorrt

#endif
