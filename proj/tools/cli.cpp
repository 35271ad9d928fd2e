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

#include "indoorrt/cli.hpp"

#include "indoorrt/channel.hpp"
#include "indoorrt/coverage.hpp"
#include "indoorrt/ece_floor.hpp"
#include "indoorrt/report.hpp"
#include "indoorrt/scene_io.hpp"
#include "indoorrt/tracer.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#ifndef INDOORRT_VERSION
#define INDOORRT_VERSION "unknown"
#endif

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace indoorrt
{
    namespace
    {
        constexpr const char *builtin_scene = "builtin:ece_floor";
        constexpr double recorded_bandwidth_hz = 10e3; // narrowband interpretation only, never used by the tracer

        // Bad flag values, unknown point ids, unreadable manifests.
        class InputError : public std::runtime_error
        {
        public:
            using std::runtime_error::runtime_error;
        };

        struct RunOptions
        {
            std::string command;
            std::string scene_path = builtin_scene;
            std::string out_dir = "runs";
            std::string tx_arg, rx_arg;
            std::optional<int> max_order;
            TraceConfig trace;
            GridSpec grid;
            std::optional<double> candidate_grid;
            double threshold_db = default_hole_threshold_db;
            std::optional<double> tap_spacing;
            std::optional<std::vector<double>> region; // x_min, y_min, x_max, y_max
            std::map<std::string, std::string> swap;
            unsigned threads = 0; // not recorded: results do not depend on it
        };

        // Sweeps trace a whole grid per candidate, so they default to one order less.
        int default_order(const std::string &command)
        {
            return command == "coverage" || command == "optimize" ? 2 : 3;
        }

        std::vector<double> parse_numbers(const std::string &text, std::size_t expected, const std::string &flag)
        {
            std::vector<double> values;
            std::size_t pos = 0;
            while (true)
            {
                const auto comma = text.find(',', pos);
                const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
                double v = 0.0;
                const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
                if (item.empty() || ec != std::errc() || end != item.data() + item.size() || !std::isfinite(v))
                    throw InputError(fmt::format("{}: '{}' is not a list of {} numbers", flag, text, expected));
                values.push_back(v);
                if (comma == std::string::npos)
                    break;
                pos = comma + 1;
            }
            if (values.size() != expected)
                throw InputError(fmt::format("{}: '{}' is not a list of {} numbers", flag, text, expected));
            return values;
        }

        // "x,y,z" or the id of a tx/rx point in the scene (own list first).
        Point3 resolve_point(const std::string &arg, const Scene &scene, bool transmitter, const std::string &flag)
        {
            if (arg.empty())
                throw InputError(flag + " is required");
            if (arg.find(',') != std::string::npos)
            {
                const auto v = parse_numbers(arg, 3, flag);
                return {v[0], v[1], v[2]};
            }
            auto p = transmitter ? scene.find_tx(arg) : scene.find_rx(arg);
            if (!p)
                p = transmitter ? scene.find_rx(arg) : scene.find_tx(arg);
            if (!p)
                throw InputError(fmt::format("{}: no point named '{}' in the scene", flag, arg));
            return *p;
        }

        Scene load(const RunOptions &o)
        {
            return o.scene_path == builtin_scene ? make_ece_floor() : load_scene_file(o.scene_path);
        }

        fs::path next_run_dir(const RunOptions &o)
        {
            const fs::path root(o.out_dir);
            fs::create_directories(root);
            int last = 0;
            const std::string prefix = o.command + "-";
            for (const auto &entry : fs::directory_iterator(root))
            {
                const std::string name = entry.path().filename().string();
                if (name.rfind(prefix, 0) != 0)
                    continue;
                int n = 0;
                const char *b = name.data() + prefix.size(), *e = name.data() + name.size();
                const auto [end, ec] = std::from_chars(b, e, n);
                if (ec == std::errc() && end == e)
                    last = std::max(last, n);
            }
            const fs::path dir = root / fmt::format("{}{:04d}", prefix, last + 1);
            fs::create_directory(dir);
            return dir;
        }

        class RunWriter
        {
        public:
            explicit RunWriter(const RunOptions &o) : dir_(next_run_dir(o)) {}

            void write(const std::string &name, const std::string &content)
            {
                std::ofstream f(dir_ / name, std::ios::binary);
                f.write(content.data(), static_cast<std::streamsize>(content.size()));
                if (!f)
                    throw InputError("cannot write " + (dir_ / name).string());
                files_.push_back(name);
            }

            const fs::path &dir() const { return dir_; }
            const std::vector<std::string> &files() const { return files_; }

        private:
            fs::path dir_;
            std::vector<std::string> files_;
        };

        json point_json(const Point3 &p) { return json::array({p.x, p.y, p.z}); }

        // Resolved parameters; replaying them reproduces the outputs.
        json manifest(const RunOptions &o, const std::optional<Point3> &tx, const std::optional<Point3> &rx,
                      const std::vector<std::string> &outputs)
        {
            json p;
            if (tx)
                p["tx"] = point_json(*tx);
            if (rx)
                p["rx"] = point_json(*rx);
            if (o.command != "scene")
            {
                p["frequency_hz"] = o.trace.frequency;
                p["max_order"] = o.trace.max_reflection_order;
                p["max_paths"] = o.trace.max_paths;
                p["min_gain_db"] = o.trace.min_path_gain_db;
            }
            if (o.command == "coverage" || o.command == "optimize")
            {
                p["grid_m"] = o.grid.cell_size;
                p["height_m"] = o.grid.height;
                p["threshold_db"] = o.threshold_db;
            }
            if (o.command == "optimize")
            {
                p["candidate_grid_m"] = o.candidate_grid.value_or(o.grid.cell_size);
                if (o.region)
                    p["region"] = *o.region;
            }
            if (o.tap_spacing)
                p["tap_spacing_s"] = *o.tap_spacing;
            if (!o.swap.empty())
                p["swap"] = o.swap;

            json m;
            m["tool"] = "indoorrt";
            m["version"] = INDOORRT_VERSION;
            m["command"] = o.command;
            m["scene"] = o.scene_path;
            m["parameters"] = p;
            m["bandwidth_hz"] = recorded_bandwidth_hz;
            m["outputs"] = outputs;
            return m;
        }

        void finish(RunWriter &w, const RunOptions &o, const std::optional<Point3> &tx,
                    const std::optional<Point3> &rx, std::ostream &out)
        {
            const auto outputs = w.files();
            w.write("manifest.json", manifest(o, tx, rx, outputs).dump(2) + "\n");
            out << "output: " << w.dir().string() << "\n";
        }

        int run_command(RunOptions o, std::ostream &out, std::ostream &err)
        {
            o.trace.max_reflection_order = o.max_order.value_or(default_order(o.command));
            try
            {
                o.trace.check();
            }
            catch (const TraceError &e)
            {
                throw InputError(e.what());
            }
            const Scene scene = load(o);
            const auto &cmd = o.command;

            if (cmd == "scene")
            {
                RunWriter w(o);
                w.write("scene.scn", serialize_scene(scene));
                finish(w, o, std::nullopt, std::nullopt, out);
                return exit_ok;
            }

            const Point3 tx = resolve_point(o.tx_arg, scene, true, "--tx");

            if (cmd == "coverage")
            {
                const auto map = sweep(scene, tx, o.grid, o.trace, o.threshold_db, o.threads);
                const auto holes = detect_holes(map);
                RunWriter w(o);
                w.write("coverage.csv", coverage_csv(map));
                w.write("coverage.pgm", coverage_pgm(map));
                w.write("holes.csv", holes_csv(holes));
                out << fmt::format("{} of {} cells covered ({:.4f}), {} hole regions\n",
                                   map.interior_count() - map.hole_count(), map.interior_count(),
                                   map.covered_fraction(), holes.size());
                finish(w, o, tx, std::nullopt, out);
                return exit_ok;
            }
            if (cmd == "optimize")
            {
                XyRegion region;
                if (o.region)
                    region = {(*o.region)[0], (*o.region)[1], (*o.region)[2], (*o.region)[3]};
                const GridSpec cand{o.candidate_grid.value_or(o.grid.cell_size), tx.z};
                const auto result = optimize_tx(scene, cand, region, o.grid, o.trace, o.threshold_db, o.threads);
                // The reference transmitter is scored with the same grid for comparison.
                const auto reference = sweep(scene, tx, o.grid, o.trace, o.threshold_db, o.threads);
                RunWriter w(o);
                w.write("candidates.csv", candidates_csv(result));
                w.write("best.txt", fmt::format("best_tx {:.3f},{:.3f},{:.3f}\n"
                                                "covered_fraction {:.6f}\n"
                                                "reference_tx {:.3f},{:.3f},{:.3f}\n"
                                                "reference_covered_fraction {:.6f}\n",
                                                result.best_tx.x, result.best_tx.y, result.best_tx.z,
                                                result.covered_fraction, tx.x, tx.y, tx.z,
                                                reference.covered_fraction()));
                out << fmt::format("best tx {:.3f},{:.3f},{:.3f} covers {:.4f} (reference {:.4f})\n",
                                   result.best_tx.x, result.best_tx.y, result.best_tx.z, result.covered_fraction,
                                   reference.covered_fraction());
                finish(w, o, tx, std::nullopt, out);
                return exit_ok;
            }

            const Point3 rx = resolve_point(o.rx_arg, scene, false, "--rx");

            if (cmd == "trace")
            {
                const auto paths = trace(scene, tx, rx, o.trace);
                RunWriter w(o);
                w.write("paths.csv", paths_csv(paths));
                out << paths.size() << " paths\n";
                finish(w, o, tx, rx, out);
                return exit_ok;
            }
            if (cmd == "pdp")
            {
                const auto cir = build_cir(trace(scene, tx, rx, o.trace), o.trace.frequency);
                if (cir.empty())
                    throw ChannelError("no propagation path between tx and rx");
                if (o.tap_spacing && !(*o.tap_spacing > 0.0))
                    throw InputError("--tap-spacing must be positive");
                const auto pdp = build_pdp(cir);
                RunWriter w(o);
                w.write("pdp.csv", pdp_csv(pdp));
                if (o.tap_spacing)
                    w.write("tdl.csv", tdl_csv(build_tdl(cir, *o.tap_spacing)));
                out << fmt::format("{} taps, mean ToA {:.2f} ns, rms delay spread {:.2f} ns\n", cir.taps.size(),
                                   pdp.mean_toa * 1e9, pdp.rms_delay_spread * 1e9);
                finish(w, o, tx, rx, out);
                return exit_ok;
            }
            if (cmd == "verify")
            {
                const auto report = verify_toa(scene, tx, rx, o.trace);
                const std::string text = toa_report_text(report);
                RunWriter w(o);
                w.write("report.txt", text);
                out << text;
                finish(w, o, tx, rx, out);
                if (!report.los)
                {
                    err << "warning: line of sight is blocked; first arrival is a multipath component\n";
                    return exit_ok;
                }
                return report.relative_error <= 1e-9 ? exit_ok : exit_verification_failed;
            }
            if (cmd == "compare")
            {
                if (o.swap.empty())
                    throw InputError("--swap from=to is required");
                const auto cmp = compare_materials(scene, tx, rx, o.trace, o.swap);
                RunWriter w(o);
                w.write("comparison.csv", comparison_csv(cmp));
                out << cmp.rows.size() << " paths compared\n";
                finish(w, o, tx, rx, out);
                return exit_ok;
            }
            throw InputError("unknown command '" + cmd + "'");
        }

        std::string point_arg(const json &p)
        {
            const auto v = p.get<std::vector<double>>();
            if (v.size() != 3)
                throw InputError("manifest point must have 3 coordinates");
            // Shortest round-trip text, parsed back exactly by from_chars.
            return fmt::format("{},{},{}", v[0], v[1], v[2]);
        }

        RunOptions from_manifest(const std::string &path)
        {
            std::ifstream in(path, std::ios::binary);
            if (!in)
                throw InputError("cannot open manifest '" + path + "'");
            try
            {
                const json m = json::parse(in);
                RunOptions o;
                o.command = m.at("command").get<std::string>();
                o.scene_path = m.at("scene").get<std::string>();
                const json &p = m.at("parameters");
                if (p.contains("tx"))
                    o.tx_arg = point_arg(p["tx"]);
                if (p.contains("rx"))
                    o.rx_arg = point_arg(p["rx"]);
                if (p.contains("frequency_hz"))
                {
                    o.trace.frequency = p["frequency_hz"].get<double>();
                    o.max_order = p.at("max_order").get<int>();
                    o.trace.max_paths = p.at("max_paths").get<int>();
                    o.trace.min_path_gain_db = p.at("min_gain_db").get<double>();
                }
                if (p.contains("grid_m"))
                {
                    o.grid.cell_size = p["grid_m"].get<double>();
                    o.grid.height = p.at("height_m").get<double>();
                    o.threshold_db = p.at("threshold_db").get<double>();
                }
                if (p.contains("candidate_grid_m"))
                    o.candidate_grid = p["candidate_grid_m"].get<double>();
                if (p.contains("region"))
                    o.region = p["region"].get<std::vector<double>>();
                if (p.contains("tap_spacing_s"))
                    o.tap_spacing = p["tap_spacing_s"].get<double>();
                if (p.contains("swap"))
                    o.swap = p["swap"].get<std::map<std::string, std::string>>();
                return o;
            }
            catch (const json::exception &e)
            {
                throw InputError("invalid manifest '" + path + "': " + e.what());
            }
        }

        std::map<std::string, std::string> parse_swaps(const std::vector<std::string> &items)
        {
            std::map<std::string, std::string> swap;
            for (const auto &item : items)
            {
                const auto eq = item.find('=');
                if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
                    throw InputError("--swap expects from=to, got '" + item + "'");
                swap[item.substr(0, eq)] = item.substr(eq + 1);
            }
            return swap;
        }

    } // namespace

    int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
    {
        CLI::App app{"Indoor radio propagation by the image method", "indoorrt"};
        app.set_version_flag("--version", std::string(INDOORRT_VERSION));
        app.require_subcommand(1);

        RunOptions o;
        std::string tx_text, rx_text, region_text, manifest_path;
        std::vector<std::string> swap_items;
        std::optional<std::string> out_override;

        const auto add_common = [&](CLI::App *sub, bool link, bool trace_flags)
        {
            sub->add_option("--scene", o.scene_path, "Scene file (default: the bundled floor)");
            sub->add_option("--out", out_override, "Output root directory (default: runs)");
            if (link)
                sub->add_option("--rx", rx_text, "Receiver x,y,z or point id")->required();
            if (trace_flags)
            {
                sub->add_option("--tx", tx_text, "Transmitter x,y,z or point id")->required();
                sub->add_option("--freq", o.trace.frequency, "Carrier frequency in Hz")->capture_default_str();
                sub->add_option("--max-order", o.max_order, "Maximum reflection order");
                sub->add_option("--max-paths", o.trace.max_paths, "Paths kept per link")->capture_default_str();
                sub->add_option("--min-gain-db", o.trace.min_path_gain_db, "Weakest path kept")
                    ->capture_default_str();
            }
        };

        auto *trace_cmd = app.add_subcommand("trace", "Trace one link and write the path table");
        add_common(trace_cmd, true, true);

        auto *pdp_cmd = app.add_subcommand("pdp", "Power delay profile of one link");
        add_common(pdp_cmd, true, true);
        pdp_cmd->add_option("--tap-spacing", o.tap_spacing, "Also write a tapped delay line with this spacing (s)");

        auto *verify_cmd = app.add_subcommand("verify", "Check the first arrival against distance / c");
        add_common(verify_cmd, true, true);

        auto *compare_cmd = app.add_subcommand("compare", "Trace a link before and after a material swap");
        add_common(compare_cmd, true, true);
        compare_cmd->add_option("--swap", swap_items, "Material rebinding from=to (repeatable)")->required();

        CLI::App *grid_cmds[2] = {app.add_subcommand("coverage", "Coverage map and holes for one transmitter"),
                                  app.add_subcommand("optimize", "Exhaustive transmitter placement search")};
        for (auto *sub : grid_cmds)
        {
            add_common(sub, false, true);
            sub->add_option("--grid", o.grid.cell_size, "Receiver grid cell size (m)")->capture_default_str();
            sub->add_option("--height", o.grid.height, "Receiver grid height (m)")->capture_default_str();
            sub->add_option("--threshold", o.threshold_db, "Hole threshold (dB)")->capture_default_str();
        }
        grid_cmds[1]->add_option("--region", region_text, "Candidate area x_min,y_min,x_max,y_max");
        grid_cmds[1]->add_option("--candidate-grid", o.candidate_grid, "Candidate spacing (m, default: --grid)");

        auto *scene_cmd = app.add_subcommand("scene", "Write a scene in canonical form");
        add_common(scene_cmd, false, false);

        auto *replay_cmd = app.add_subcommand("replay", "Re-run a command from its manifest.json");
        replay_cmd->add_option("--manifest", manifest_path, "Manifest of an earlier run")->required();
        replay_cmd->add_option("--out", out_override, "Output root directory (default: runs)");

        for (auto *sub : app.get_subcommands({}))
            sub->add_option("--threads", o.threads, "Worker threads for sweeps (0: all cores)");

        std::vector<std::string> args;
        for (int i = argc - 1; i >= 1; --i)
            args.emplace_back(argv[i]);
        try
        {
            app.parse(args);
        }
        catch (const CLI::CallForHelp &)
        {
            out << app.help();
            return exit_ok;
        }
        catch (const CLI::CallForVersion &)
        {
            out << INDOORRT_VERSION << "\n";
            return exit_ok;
        }
        catch (const CLI::ParseError &e)
        {
            if (e.get_exit_code() == 0)
            {
                out << app.help(app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name());
                return exit_ok;
            }
            err << "error: " << e.what() << "\n";
            return exit_input_error;
        }

        try
        {
            const auto chosen = app.get_subcommands().front();
            if (chosen == replay_cmd)
            {
                const unsigned threads = o.threads;
                o = from_manifest(manifest_path);
                o.threads = threads;
            }
            else
            {
                o.command = chosen->get_name();
                o.tx_arg = tx_text;
                o.rx_arg = rx_text;
                o.swap = parse_swaps(swap_items);
                if (!region_text.empty())
                    o.region = parse_numbers(region_text, 4, "--region");
            }
            if (out_override)
                o.out_dir = *out_override;
            return run_command(o, out, err);
        }
        catch (const SceneError &e)
        {
            err << "error: scene: " << e.what() << "\n";
            return exit_input_error;
        }
        catch (const InputError &e)
        {
            err << "error: " << e.what() << "\n";
            return exit_input_error;
        }
        catch (const CoverageError &e)
        {
            err << "error: " << e.what() << "\n";
            return exit_input_error;
        }
        catch (const TraceError &e)
        {
            err << "error: " << e.what() << "\n";
            return exit_trace_error;
        }
        catch (const ChannelError &e)
        {
            err << "error: " << e.what() << "\n";
            return exit_trace_error;
        }
        catch (const std::exception &e)
        {
            err << "error: " << e.what() << "\n";
            return exit_input_error;
        }
    }

} // namespace indoorrt
