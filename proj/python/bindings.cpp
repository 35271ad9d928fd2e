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

#include "indoorrt/channel.hpp"
#include "indoorrt/coverage.hpp"
#include "indoorrt/ece_floor.hpp"
#include "indoorrt/report.hpp"
#include "indoorrt/scene_io.hpp"
#include "indoorrt/tracer.hpp"

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace indoorrt;

namespace
{
    Vec3 vec_from_sequence(const py::sequence &s)
    {
        if (py::len(s) != 3)
            throw py::value_error("expected 3 coordinates");
        return {s[0].cast<double>(), s[1].cast<double>(), s[2].cast<double>()};
    }

    py::array_t<double> grid_array(const CoverageMap &m, const std::vector<double> &values)
    {
        py::array_t<double> out({m.ny, m.nx});
        std::copy(values.begin(), values.end(), out.mutable_data());
        return out;
    }
} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Indoor radio propagation by the image method";
    m.attr("speed_of_light") = speed_of_light;
    m.attr("default_hole_threshold_db") = default_hole_threshold_db;
    m.attr("ece_floor_hole_threshold_db") = ece_floor::hole_threshold_db;

    py::register_exception<SceneError>(m, "SceneError", PyExc_ValueError);
    py::register_exception<TraceError>(m, "TraceError", PyExc_ValueError);
    py::register_exception<ChannelError>(m, "ChannelError", PyExc_ValueError);
    py::register_exception<CoverageError>(m, "CoverageError", PyExc_ValueError);

    py::class_<Vec3>(m, "Vec3")
        .def(py::init<double, double, double>(), py::arg("x"), py::arg("y"), py::arg("z"))
        .def(py::init(&vec_from_sequence))
        .def_readwrite("x", &Vec3::x)
        .def_readwrite("y", &Vec3::y)
        .def_readwrite("z", &Vec3::z)
        .def("__iter__", [](const Vec3 &v) { return py::iter(py::make_tuple(v.x, v.y, v.z)); })
        .def("__eq__", [](const Vec3 &a, const Vec3 &b) { return a == b; })
        .def("__repr__", [](const Vec3 &v)
             { return "Vec3(" + py::repr(py::float_(v.x)).cast<std::string>() + ", " +
                      py::repr(py::float_(v.y)).cast<std::string>() + ", " +
                      py::repr(py::float_(v.z)).cast<std::string>() + ")"; });
    py::implicitly_convertible<py::tuple, Vec3>();
    py::implicitly_convertible<py::list, Vec3>();

    py::class_<Material>(m, "Material")
        .def_readonly("id", &Material::id)
        .def_readonly("rel_permittivity", &Material::rel_permittivity)
        .def_readonly("conductivity", &Material::conductivity)
        .def_readonly("thickness", &Material::thickness)
        .def_readonly("is_pec", &Material::is_pec);
    m.def("make_dielectric", &make_dielectric, py::arg("id"), py::arg("rel_permittivity"), py::arg("conductivity"),
          py::arg("thickness"));
    m.def("make_pec", &make_pec, py::arg("id"));
    m.def("default_materials", &default_materials);
    m.def("fresnel_reflection", &fresnel_reflection, py::arg("material"), py::arg("cos_incidence"),
          py::arg("frequency_hz"));
    m.def("slab_transmission", &slab_transmission, py::arg("material"), py::arg("cos_incidence"),
          py::arg("frequency_hz"));

    py::class_<Surface>(m, "Surface")
        .def_readonly("id", &Surface::id)
        .def_readonly("origin", &Surface::origin)
        .def_readonly("edge_u", &Surface::edge_u)
        .def_readonly("edge_v", &Surface::edge_v)
        .def_readonly("material_id", &Surface::material_id)
        .def_property_readonly("normal", &Surface::normal)
        .def_property_readonly("area", &Surface::area);

    py::class_<Scene>(m, "Scene")
        .def(py::init<>())
        .def_readonly("surfaces", &Scene::surfaces)
        .def_readonly("materials", &Scene::materials)
        .def_property_readonly("tx_points", [](const Scene &s)
                               { std::map<std::string, Point3> out; for (const auto &p : s.tx_points) out[p.id] = p.position; return out; })
        .def_property_readonly("rx_points", [](const Scene &s)
                               { std::map<std::string, Point3> out; for (const auto &p : s.rx_points) out[p.id] = p.position; return out; })
        .def_property_readonly("bounds", [](const Scene &s) { return py::make_tuple(s.bounds.min, s.bounds.max); })
        .def("__eq__", [](const Scene &a, const Scene &b) { return a == b; });

    m.def("parse_scene", &parse_scene, py::arg("text"));
    m.def("serialize_scene", &serialize_scene, py::arg("scene"));
    m.def("load_scene", &load_scene_file, py::arg("path"));
    m.def("validate_scene", &validate_scene, py::arg("scene"));
    m.def(
        "make_ece_floor", [](bool with_furniture) { EceFloorOptions o; o.with_furniture = with_furniture; return make_ece_floor(o); },
        py::arg("with_furniture") = true);

    py::class_<TraceConfig>(m, "TraceConfig")
        .def(py::init<>())
        .def(py::init(
                 [](int order, int paths, double f, double min_db)
                 { TraceConfig c{order, paths, f, min_db}; c.check(); return c; }),
             py::arg("max_reflection_order") = 3, py::arg("max_paths") = 25, py::arg("frequency") = 1e9,
             py::arg("min_path_gain_db") = -250.0)
        .def_readwrite("max_reflection_order", &TraceConfig::max_reflection_order)
        .def_readwrite("max_paths", &TraceConfig::max_paths)
        .def_readwrite("frequency", &TraceConfig::frequency)
        .def_readwrite("min_path_gain_db", &TraceConfig::min_path_gain_db);

    py::class_<Interaction>(m, "Interaction")
        .def_property_readonly("kind", [](const Interaction &i) { return std::string(to_string(i.kind)); })
        .def_readonly("point", &Interaction::point)
        .def_readonly("surface_id", &Interaction::surface_id)
        .def_readonly("cos_incidence", &Interaction::cos_incidence);

    py::class_<PropagationPath>(m, "PropagationPath")
        .def_readonly("interactions", &PropagationPath::interactions)
        .def_readonly("length", &PropagationPath::length)
        .def_readonly("gain", &PropagationPath::gain)
        .def_readonly("delay", &PropagationPath::delay)
        .def_property_readonly("n_reflections", &PropagationPath::n_reflections)
        .def_property_readonly("n_transmissions", &PropagationPath::n_transmissions)
        .def_property_readonly("power_db", &PropagationPath::power_db)
        .def_property_readonly("is_los", &PropagationPath::is_los)
        .def("summary", &PropagationPath::summary);

    m.def("trace", &trace, py::arg("scene"), py::arg("tx"), py::arg("rx"), py::arg("config") = TraceConfig{},
          py::call_guard<py::gil_scoped_release>());

    py::class_<Tap>(m, "Tap").def_readonly("delay", &Tap::delay).def_readonly("amplitude", &Tap::amplitude);
    py::class_<ChannelImpulseResponse>(m, "ChannelImpulseResponse")
        .def_readonly("taps", &ChannelImpulseResponse::taps)
        .def_readonly("frequency", &ChannelImpulseResponse::frequency);
    py::class_<PowerDelayProfile>(m, "PowerDelayProfile")
        .def_property_readonly("delays", [](const PowerDelayProfile &p)
                               { std::vector<double> d; for (const auto &x : p.points) d.push_back(x.delay); return d; })
        .def_property_readonly("powers_db", [](const PowerDelayProfile &p)
                               { std::vector<double> d; for (const auto &x : p.points) d.push_back(x.power_db); return d; })
        .def_readonly("first_arrival", &PowerDelayProfile::first_arrival)
        .def_readonly("mean_toa", &PowerDelayProfile::mean_toa)
        .def_readonly("rms_delay_spread", &PowerDelayProfile::rms_delay_spread)
        .def_readonly("total_power_db", &PowerDelayProfile::total_power_db);
    py::class_<TappedDelayLine>(m, "TappedDelayLine")
        .def_readonly("tap_spacing", &TappedDelayLine::tap_spacing)
        .def_readonly("taps", &TappedDelayLine::taps)
        .def("power", &TappedDelayLine::power);

    m.def("build_cir", &build_cir, py::arg("paths"), py::arg("frequency_hz") = 0.0, py::arg("tx_id") = "",
          py::arg("rx_id") = "");
    m.def("build_pdp", &build_pdp, py::arg("cir"));
    m.def("build_tdl", &build_tdl, py::arg("cir"), py::arg("tap_spacing"));
    m.def("total_power_db", &total_power_db, py::arg("cir"));

    py::class_<ToaReport>(m, "ToaReport")
        .def_readonly("geometric_distance_m", &ToaReport::geometric_distance_m)
        .def_readonly("first_arrival_ns", &ToaReport::first_arrival_ns)
        .def_readonly("estimated_distance_m", &ToaReport::estimated_distance_m)
        .def_readonly("relative_error", &ToaReport::relative_error)
        .def_readonly("mean_toa_ns", &ToaReport::mean_toa_ns)
        .def_readonly("los", &ToaReport::los)
        .def("__str__", &toa_report_text);
    m.def("verify_toa", &verify_toa, py::arg("scene"), py::arg("tx"), py::arg("rx"),
          py::arg("config") = TraceConfig{});

    py::class_<ComparisonRow>(m, "ComparisonRow")
        .def_readonly("key", &ComparisonRow::key)
        .def_readonly("n_reflections", &ComparisonRow::n_reflections)
        .def_readonly("length", &ComparisonRow::length)
        .def_readonly("baseline_db", &ComparisonRow::baseline_db)
        .def_readonly("swapped_db", &ComparisonRow::swapped_db);
    m.def(
        "compare_materials",
        [](const Scene &s, const Point3 &tx, const Point3 &rx, const TraceConfig &c,
           const std::map<std::string, std::string> &swap) { return compare_materials(s, tx, rx, c, swap).rows; },
        py::arg("scene"), py::arg("tx"), py::arg("rx"), py::arg("config"), py::arg("swap"));

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init([](double cell, double height) { return GridSpec{cell, height}; }), py::arg("cell_size") = 1.0,
             py::arg("height") = 2.0)
        .def_readwrite("cell_size", &GridSpec::cell_size)
        .def_readwrite("height", &GridSpec::height);

    py::class_<CoverageMap>(m, "CoverageMap")
        .def_readonly("origin", &CoverageMap::origin)
        .def_readonly("cell_size", &CoverageMap::cell_size)
        .def_readonly("nx", &CoverageMap::nx)
        .def_readonly("ny", &CoverageMap::ny)
        .def_readonly("threshold_db", &CoverageMap::threshold_db)
        .def_property_readonly("power_db", [](const CoverageMap &c) { return grid_array(c, c.power_db); })
        .def_property_readonly("hole_mask", [](const CoverageMap &c)
                               { return grid_array(c, std::vector<double>(c.hole_mask.begin(), c.hole_mask.end())).attr("astype")("bool"); })
        .def_property_readonly("excluded", [](const CoverageMap &c)
                               { return grid_array(c, std::vector<double>(c.excluded.begin(), c.excluded.end())).attr("astype")("bool"); })
        .def("cell_center", &CoverageMap::cell_center, py::arg("i"), py::arg("j"))
        .def("covered_fraction", &CoverageMap::covered_fraction)
        .def("with_threshold", &CoverageMap::with_threshold, py::arg("threshold_db"))
        .def("to_pgm", [](const CoverageMap &c) { return py::bytes(coverage_pgm(c)); });

    py::class_<HoleRegion>(m, "HoleRegion")
        .def_readonly("cells", &HoleRegion::cells)
        .def_readonly("area_m2", &HoleRegion::area_m2);

    py::class_<PlacementResult>(m, "PlacementResult")
        .def_readonly("best_tx", &PlacementResult::best_tx)
        .def_readonly("covered_fraction", &PlacementResult::covered_fraction)
        .def_property_readonly("candidates", [](const PlacementResult &r)
                               {
                                   py::list out;
                                   for (const auto &c : r.candidates)
                                       out.append(py::make_tuple(c.position, c.covered_fraction));
                                   return out; });

    m.def("sweep", &sweep, py::arg("scene"), py::arg("tx"), py::arg("grid") = GridSpec{},
          py::arg("config") = TraceConfig{}, py::arg("threshold_db") = default_hole_threshold_db,
          py::arg("threads") = 0u, py::call_guard<py::gil_scoped_release>());
    m.def("detect_holes", &detect_holes, py::arg("map"));
    m.def(
        "optimize_tx",
        [](const Scene &s, const std::vector<Point3> &candidates, const GridSpec &grid, const TraceConfig &c,
           double threshold, unsigned threads)
        {
            py::gil_scoped_release release;
            return optimize_tx(s, candidates, grid, c, threshold, threads);
        },
        py::arg("scene"), py::arg("candidates"), py::arg("grid") = GridSpec{}, py::arg("config") = TraceConfig{},
        py::arg("threshold_db") = default_hole_threshold_db, py::arg("threads") = 0u);
    m.def(
        "candidate_positions",
        [](const Scene &s, const GridSpec &grid, double x_min, double y_min, double x_max, double y_max)
        { return candidate_positions(s, grid, XyRegion{x_min, y_min, x_max, y_max}); },
        py::arg("scene"), py::arg("grid"), py::arg("x_min") = -INFINITY, py::arg("y_min") = -INFINITY,
        py::arg("x_max") = INFINITY, py::arg("y_max") = INFINITY);
}
