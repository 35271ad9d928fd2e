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

#include "support.hpp"

#include "indoorrt/channel.hpp"
#include "indoorrt/cli.hpp"
#include "indoorrt/coverage.hpp"
#include "indoorrt/ece_floor.hpp"
#include "indoorrt/report.hpp"
#include "indoorrt/scene_io.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using namespace indoorrt;
namespace fs = std::filesystem;

namespace
{
    struct Run
    {
        int code = -1;
        std::string out, err;
        fs::path dir; // run directory announced on stdout
    };

    Run run(std::vector<std::string> args)
    {
        args.insert(args.begin(), "indoorrt");
        std::vector<const char *> argv;
        for (const auto &a : args)
            argv.push_back(a.c_str());
        std::ostringstream out, err;
        Run r;
        r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        r.out = out.str();
        r.err = err.str();
        const auto pos = r.out.rfind("output: ");
        if (pos != std::string::npos)
            r.dir = r.out.substr(pos + 8, r.out.find('\n', pos) - pos - 8);
        return r;
    }

    // Fresh scratch directory per test case.
    fs::path scratch(const std::string &name)
    {
        const fs::path dir = fs::temp_directory_path() / ("indoorrt_cli_" + name);
        fs::remove_all(dir);
        fs::create_directories(dir);
        return dir;
    }

    fs::path write_scene(const fs::path &dir, const std::string &name, const std::string &text)
    {
        const fs::path p = dir / name;
        std::ofstream(p, std::ios::binary) << text;
        return p;
    }

    std::vector<std::string> lines(const std::string &text)
    {
        std::vector<std::string> out;
        std::istringstream in(text);
        for (std::string line; std::getline(in, line);)
            out.push_back(line);
        return out;
    }

    const std::string floor_file = INDOORRT_DATA_DIR "/ece_floor.scn";
} // namespace

TEST_CASE("trace: corridor link starts with the direct path")
{
    const auto tmp = scratch("trace");
    const auto r = run({"trace", "--scene", floor_file, "--tx", "34.12,5.55,2", "--rx", "0.68,5.55,2", "--freq", "1e9",
                        "--max-order", "3", "--max-paths", "25", "--out", tmp.string()});
    REQUIRE(r.code == exit_ok);
    const auto rows = lines(oracle::read_file(r.dir / "paths.csv"));
    REQUIRE(rows.size() == 26);
    CHECK(rows[0] == "index,n_reflections,n_transmissions,length_m,delay_ns,gain_db,phase_rad,interactions");
    CHECK(rows[1].rfind("0,0,0,33.440000000,111.543833,", 0) == 0);
    CHECK(rows[1].substr(rows[1].size() - 14) == "launch;arrival");
    CHECK(fs::exists(r.dir / "manifest.json"));
}

TEST_CASE("trace: error exits")
{
    const auto tmp = scratch("errors");
    const auto missing = run({"trace", "--scene", "missing.scn", "--tx", "1,1,1", "--rx", "2,2,2", "--out", tmp.string()});
    CHECK(missing.code == exit_input_error);
    CHECK(missing.err.find("missing.scn") != std::string::npos);

    const auto same = run({"trace", "--tx", "5,5.5,2", "--rx", "5,5.5,2", "--out", tmp.string()});
    CHECK(same.code == exit_trace_error);
    CHECK(same.err.find("tx equals rx") != std::string::npos);

    CHECK(run({"trace", "--tx", "5,5.5", "--rx", "1,5.5,2", "--out", tmp.string()}).code == exit_input_error);
    CHECK(run({"trace", "--tx", "nowhere", "--rx", "rx1", "--out", tmp.string()}).code == exit_input_error);
    CHECK(run({"trace", "--tx", "tx1", "--rx", "rx1", "--max-paths", "0", "--out", tmp.string()}).code ==
          exit_input_error);
    CHECK(run({"trace", "--tx", "tx1", "--rx", "rx1", "--bogus", "--out", tmp.string()}).code == exit_input_error);
    CHECK(run({"trace", "--tx", "tx1", "--rx", "50,5,2", "--out", tmp.string()}).code == exit_trace_error);
    CHECK(run({}).code == exit_input_error);
    CHECK(run({"--help"}).code == exit_ok);
    CHECK(run({"--version"}).out == "1.0.0\n");

    const auto bad = write_scene(tmp, "bad.scn", "tx a at=1,1,1\nrect w origin=0,0,0 u=1,0,0 v=0,0,1 material=glass\n");
    const auto parse = run({"trace", "--scene", bad.string(), "--tx", "a", "--rx", "2,2,2", "--out", tmp.string()});
    CHECK(parse.code == exit_input_error);
    CHECK(parse.err.find("line 2") != std::string::npos);
}

TEST_CASE("pdp: one bounce gives two rows, TDL matches build_tdl")
{
    const auto tmp = scratch("pdp");
    const auto scene = write_scene(tmp, "mirror.scn",
                                   "material pec pec=true\n"
                                   "rect m origin=-10,0,-10 u=20,0,0 v=0,0,20 material=pec\n");
    const auto r = run({"pdp", "--scene", scene.string(), "--tx", "0,1,0", "--rx", "3,2,0", "--tap-spacing", "1e-9",
                        "--out", tmp.string()});
    REQUIRE(r.code == exit_ok);
    const auto rows = lines(oracle::read_file(r.dir / "pdp.csv"));
    REQUIRE(rows.size() == 4 + 1 + 2);
    CHECK(rows[4] == "delay_ns,power_db");

    const Scene s = load_scene_file(scene.string());
    const auto cir = build_cir(trace(s, {0, 1, 0}, {3, 2, 0}), 1e9);
    CHECK(oracle::read_file(r.dir / "tdl.csv") == tdl_csv(build_tdl(cir, 1e-9)));
    CHECK(oracle::read_file(r.dir / "pdp.csv") == pdp_csv(build_pdp(cir)));
}

TEST_CASE("pdp: bundled corridor header")
{
    const auto tmp = scratch("pdp_floor");
    const auto r = run({"pdp", "--tx", "tx1", "--rx", "rx_toa", "--out", tmp.string()});
    REQUIRE(r.code == exit_ok);
    const Scene floor = make_ece_floor();
    const auto pdp = build_pdp(build_cir(trace(floor, *floor.find_tx("tx1"), *floor.find_rx("rx_toa"))));
    const auto rows = lines(oracle::read_file(r.dir / "pdp.csv"));
    CHECK(rows[0] == "# first_arrival_ns=111.543833");
    CHECK(rows[1] == "# mean_toa_ns=" + std::to_string(pdp.mean_toa * 1e9));
}

TEST_CASE("verify: free-space link, NLOS warning, no path")
{
    const auto tmp = scratch("verify");
    const auto empty = write_scene(tmp, "empty.scn", "");
    const auto ok = run({"verify", "--scene", empty.string(), "--tx", "0,0,0", "--rx", "33.44,0,0", "--out", tmp.string()});
    CHECK(ok.code == exit_ok);
    CHECK(ok.out.find("geometric_distance 33.440000 m\n"
                      "first_arrival 111.54 ns\n"
                      "estimated_distance 33.440000 m\n"
                      "relative_error 0.0e0\n") == 0);
    CHECK(oracle::read_file(ok.dir / "report.txt").find("line_of_sight yes") != std::string::npos);

    // A metal plate blocks the direct ray; a metal floor still offers a bounce underneath.
    const auto nlos_scene = write_scene(tmp, "nlos.scn",
                                        "material pec pec=true\n"
                                        "rect plate origin=2,-0.5,0.5 u=0,1,0 v=0,0,1 material=pec\n"
                                        "rect floor origin=-10,-10,0 u=20,0,0 v=0,20,0 material=pec\n");
    const auto nlos = run({"verify", "--scene", nlos_scene.string(), "--tx", "0,0,1", "--rx", "4,0,1", "--out",
                           tmp.string()});
    CHECK(nlos.code == exit_ok);
    CHECK(nlos.out.find("line_of_sight no") != std::string::npos);
    CHECK(nlos.err.find("warning") != std::string::npos);

    const auto sealed = write_scene(tmp, "sealed.scn",
                                    "material pec pec=true\nbox cage min=-1,-1,-1 max=1,1,1 material=pec\n");
    CHECK(run({"verify", "--scene", sealed.string(), "--tx", "0,0,0", "--rx", "5,0,0", "--out", tmp.string()}).code ==
          exit_trace_error);
}

TEST_CASE("coverage: holes on the bundled floor")
{
    const auto tmp = scratch("coverage");
    const auto r = run({"coverage", "--scene", floor_file, "--tx", "tx1", "--threshold",
                        std::to_string(ece_floor::hole_threshold_db), "--out", tmp.string()});
    REQUIRE(r.code == exit_ok);
    const auto rows = lines(oracle::read_file(r.dir / "holes.csv"));
    REQUIRE(rows.size() > 1);

    // Map hole cells back to rooms.
    const auto map_rows = lines(oracle::read_file(r.dir / "coverage.csv"));
    CHECK(map_rows.size() == 1 + 35 * 15);
    bool faculty_hole = false;
    for (std::size_t k = 1; k < map_rows.size(); ++k)
    {
        double x = 0, y = 0;
        std::sscanf(map_rows[k].c_str(), "%lf,%lf", &x, &y);
        if (map_rows[k].back() != '1')
            continue;
        for (const auto &room : ece_floor_rooms())
            faculty_hole = faculty_hole || (room.kind == RoomKind::faculty && room.contains_xy(x, y));
    }
    CHECK(faculty_hole);

    const std::string pgm = oracle::read_file(r.dir / "coverage.pgm");
    CHECK(pgm.rfind("P5\n35 15\n255\n", 0) == 0);
    CHECK(pgm.size() == std::string("P5\n35 15\n255\n").size() + 35 * 15);

    const auto open = run({"coverage", "--tx", "tx1", "--threshold", "-250", "--out", tmp.string()});
    REQUIRE(open.code == exit_ok);
    CHECK(lines(oracle::read_file(open.dir / "holes.csv")).size() == 1);

    CHECK(run({"coverage", "--tx", "tx1", "--grid", "0", "--out", tmp.string()}).code == exit_input_error);
}

TEST_CASE("optimize: two-candidate toy scene")
{
    const auto tmp = scratch("optimize");
    const auto scene = write_scene(tmp, "toy.scn", "bounds min=0,0,0 max=4,2,3\nbox room min=0,0,0 max=4,2,3 material=brick\n");
    const auto r = run({"optimize", "--scene", scene.string(), "--tx", "1,1,2", "--grid", "1", "--candidate-grid", "2",
                        "--threshold", "-40", "--out", tmp.string()});
    REQUIRE(r.code == exit_ok);
    const auto rows = lines(oracle::read_file(r.dir / "candidates.csv"));
    REQUIRE(rows.size() == 3);
    CHECK((rows[1].back() == '1') + (rows[2].back() == '1') == 1);

    const Scene s = load_scene_file(scene.string());
    TraceConfig cfg;
    cfg.max_reflection_order = 2;
    const auto expect = optimize_tx(s, {2.0, 2.0}, XyRegion{}, {1.0, 2.0}, cfg, -40.0);
    CHECK(oracle::read_file(r.dir / "candidates.csv") == candidates_csv(expect));
    CHECK(oracle::read_file(r.dir / "best.txt").find("covered_fraction") != std::string::npos);
}

TEST_CASE("compare: material swap table")
{
    const auto tmp = scratch("compare");
    const auto r = run({"compare", "--tx", "tx_ec21", "--rx", "rx6", "--swap", "wood=metal", "--out", tmp.string()});
    REQUIRE(r.code == exit_ok);
    const auto rows = lines(oracle::read_file(r.dir / "comparison.csv"));
    REQUIRE(rows.size() > 1);
    CHECK(rows[0] == "key,n_reflections,length_m,baseline_db,swapped_db,delta_db");
    CHECK(run({"compare", "--tx", "tx_ec21", "--rx", "rx6", "--swap", "wood", "--out", tmp.string()}).code ==
          exit_input_error);
    CHECK(run({"compare", "--tx", "tx_ec21", "--rx", "rx6", "--swap", "wood=gold", "--out", tmp.string()}).code ==
          exit_trace_error);
}

TEST_CASE("every command is byte-reproducible and replayable")
{
    const auto tmp = scratch("determinism");
    const std::string out = tmp.string();
    const std::vector<std::vector<std::string>> commands = {
        {"scene", "--out", out},
        {"trace", "--tx", "tx1", "--rx", "rx2", "--out", out},
        {"pdp", "--tx", "tx1", "--rx", "rx_toa", "--tap-spacing", "1e-9", "--out", out},
        {"verify", "--tx", "tx1", "--rx", "rx_toa", "--out", out},
        {"compare", "--tx", "tx_ec21", "--rx", "rx6", "--swap", "wood=metal", "--out", out},
        {"coverage", "--tx", "tx1", "--threshold", "-60", "--out", out},
        {"optimize", "--tx", "tx1", "--region", "30,4.1,34.8,7", "--threshold", "-60", "--out", out},
    };
    for (const auto &cmd : commands)
    {
        CAPTURE(cmd[0]);
        const auto a = run(cmd), b = run(cmd);
        REQUIRE(a.code == exit_ok);
        REQUIRE(b.code == exit_ok);
        CHECK(a.dir != b.dir);
        const auto ha = oracle::dir_hashes(a.dir);
        CHECK(ha == oracle::dir_hashes(b.dir));

        const auto manifest = nlohmann::json::parse(oracle::read_file(a.dir / "manifest.json"));
        CHECK(manifest["command"] == cmd[0]);
        CHECK(manifest["bandwidth_hz"] == 10000.0);
        CHECK(manifest["outputs"].size() + 1 == ha.size());

        const auto replay = run({"replay", "--manifest", (a.dir / "manifest.json").string(), "--out", out});
        REQUIRE(replay.code == exit_ok);
        CHECK(oracle::dir_hashes(replay.dir) == ha);
    }
    CHECK(run({"replay", "--manifest", (tmp / "none.json").string()}).code == exit_input_error);
}
