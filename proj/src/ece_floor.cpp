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

#include "indoorrt/ece_floor.hpp"

#include <array>
#include <string>

namespace indoorrt
{
    namespace
    {
        using namespace ece_floor;

        struct LabSpec
        {
            const char *name;
            double width;
        };

        // West to east, as listed for the left side of the corridor.
        constexpr std::array<LabSpec, 5> labs = {{
            {"computer_lab", 6.76},
            {"communication_lab", 7.3},
            {"rs_lab", 5.45},
            {"microwave_lab", 8.17},
            {"ec21", 6.64},
        }};

        void add_rect(Scene &scene, std::string id, Point3 origin, Vec3 u, Vec3 v, const std::string &material)
        {
            scene.surfaces.push_back({std::move(id), origin, u, v, material});
        }

        // Wall in the plane y = y_wall spanning [x0, x1], with door gaps centered at door_centers.
        void add_wall_with_doors(Scene &scene, const std::string &prefix, double y_wall, double x0, double x1,
                                 const std::vector<double> &door_centers, const EceFloorOptions &opt)
        {
            double cursor = x0;
            int seg = 0;
            for (std::size_t i = 0; i < door_centers.size(); ++i)
            {
                const double d0 = door_centers[i] - 0.5 * opt.door_width;
                const double d1 = door_centers[i] + 0.5 * opt.door_width;
                add_rect(scene, prefix + "_seg" + std::to_string(seg++), {cursor, y_wall, 0.0}, {d0 - cursor, 0, 0},
                         {0, 0, height}, "brick");
                add_rect(scene, prefix + "_lintel" + std::to_string(i + 1), {d0, y_wall, opt.door_height},
                         {opt.door_width, 0, 0}, {0, 0, height - opt.door_height}, "brick");
                cursor = d1;
            }
            add_rect(scene, prefix + "_seg" + std::to_string(seg), {cursor, y_wall, 0.0}, {x1 - cursor, 0, 0},
                     {0, 0, height}, "brick");
        }
    } // namespace

    std::vector<Room> ece_floor_rooms()
    {
        std::vector<Room> rooms;
        for (int i = 0; i < faculty_count; ++i)
            rooms.push_back({"faculty" + std::to_string(i + 1), RoomKind::faculty, faculty_width * i,
                             faculty_width * (i + 1), 0.0, faculty_depth});
        double x = 0.0;
        for (const auto &lab : labs)
        {
            rooms.push_back({lab.name, RoomKind::lab, x, x + lab.width, corridor_north, width});
            x += lab.width;
        }
        rooms.push_back({"corridor", RoomKind::corridor, 0.0, length, corridor_south, corridor_north});
        rooms.push_back({"landing", RoomKind::landing, faculty_width * faculty_count, length, 0.0, faculty_depth});
        rooms.push_back({"shaft", RoomKind::shaft, x, length, corridor_north, width});
        return rooms;
    }

    Scene make_ece_floor(const EceFloorOptions &opt)
    {
        Scene scene;
        scene.materials = default_materials();
        scene.bounds = Aabb{{0.0, 0.0, 0.0}, {length, width, height}};

        // Outer shell
        add_rect(scene, "floor", {0, 0, 0}, {length, 0, 0}, {0, width, 0}, "concrete");
        add_rect(scene, "ceiling", {0, 0, height}, {0, width, 0}, {length, 0, 0}, "concrete");
        add_rect(scene, "wall_south", {0, 0, 0}, {0, 0, height}, {length, 0, 0}, "brick");
        add_rect(scene, "wall_north", {0, width, 0}, {length, 0, 0}, {0, 0, height}, "brick");
        add_rect(scene, "wall_west", {0, 0, 0}, {0, width, 0}, {0, 0, height}, "brick");
        add_rect(scene, "wall_east", {length, 0, 0}, {0, 0, height}, {0, width, 0}, "brick");

        // South side: faculty rooms, each with a door onto the corridor.
        const auto rooms = ece_floor_rooms();
        std::vector<double> faculty_doors;
        for (int i = 0; i < faculty_count; ++i)
            faculty_doors.push_back(faculty_width * (i + 0.5));
        add_wall_with_doors(scene, "corridor_south", corridor_south, 0.0, faculty_width * faculty_count,
                            faculty_doors, opt);
        for (int i = 1; i <= faculty_count; ++i)
            add_rect(scene, "faculty_wall" + std::to_string(i), {faculty_width * i, 0, 0}, {0, faculty_depth, 0},
                     {0, 0, height}, "brick");

        // North side: labs. The shaft east of EC 21 has no door.
        std::vector<double> lab_doors;
        double x = 0.0;
        int partition = 1;
        for (const auto &lab : labs)
        {
            lab_doors.push_back(x + 0.5 * lab.width);
            x += lab.width;
            add_rect(scene, "lab_wall" + std::to_string(partition++), {x, corridor_north, 0}, {0, lab_depth, 0},
                     {0, 0, height}, "brick");
        }
        add_wall_with_doors(scene, "corridor_north", corridor_north, 0.0, length, lab_doors, opt);

        // EC 21 desks: two columns of three, tops at 0.75 m.
        if (opt.with_furniture)
        {
            const double col_x[2] = {29.0, 31.4};
            const double row_y[3] = {9.0, 10.6, 12.2};
            int desk = 1;
            for (double ry : row_y)
                for (double cx : col_x)
                {
                    auto faces = make_box("ec21_desk" + std::to_string(desk++), {cx, ry, 0.70},
                                          {cx + 1.6, ry + 0.7, 0.75}, opt.furniture_material);
                    scene.surfaces.insert(scene.surfaces.end(), faces.begin(), faces.end());
                }
        }

        const double h = antenna_height;
        const double corridor_mid = 0.5 * (corridor_south + corridor_north);

        scene.tx_points.push_back({"tx1", {length - 0.68, corridor_mid, h}});
        scene.tx_points.push_back({"tx_ec21", {28.2, 7.5, h}});

        // Receiver positions are representative reconstructions, one per room plus corridor and landing.
        auto center = [&](const Room &r) { return Point3{0.5 * (r.x_min + r.x_max), 0.5 * (r.y_min + r.y_max), h}; };
        std::vector<Point3> rx;
        rx.push_back({17.4, corridor_mid, h});
        for (const auto &r : rooms)
            if (r.kind == RoomKind::lab)
                rx.push_back(center(r));
        for (const auto &r : rooms)
            if (r.kind == RoomKind::faculty)
                rx.push_back(center(r));
        rx.push_back({8.0, corridor_mid, h});
        rx.push_back({31.0, 2.0, h});
        for (std::size_t i = 0; i < rx.size(); ++i)
            scene.rx_points.push_back({"rx" + std::to_string(i + 1), rx[i]});

        // 33.44 m down the corridor from tx1.
        scene.rx_points.push_back({"rx_toa", {0.68, corridor_mid, h}});

        return scene;
    }

} // namespace indoorrt
