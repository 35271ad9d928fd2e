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

#include "indoorrt/scene_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace indoorrt
{
    const char *to_string(SceneErrorKind kind)
    {
        switch (kind)
        {
        case SceneErrorKind::lexical:
            return "lexical error";
        case SceneErrorKind::unknown_keyword:
            return "unknown keyword";
        case SceneErrorKind::missing_attribute:
            return "missing attribute";
        case SceneErrorKind::unknown_attribute:
            return "unknown attribute";
        case SceneErrorKind::duplicate_attribute:
            return "duplicate attribute";
        case SceneErrorKind::duplicate_id:
            return "duplicate id";
        case SceneErrorKind::unresolved_material:
            return "unresolved material";
        case SceneErrorKind::invalid_value:
            return "invalid value";
        case SceneErrorKind::validation:
            return "validation failure";
        case SceneErrorKind::io:
            return "i/o error";
        }
        return "error";
    }

    static std::string format_error(SceneErrorKind kind, int line, int column, const std::string &reason)
    {
        std::string out;
        if (line > 0)
        {
            out += "line " + std::to_string(line);
            if (column > 0)
                out += ", column " + std::to_string(column);
            out += ": ";
        }
        return out + to_string(kind) + ": " + reason;
    }

    SceneError::SceneError(SceneErrorKind kind, int line, int column, const std::string &reason)
        : std::runtime_error(format_error(kind, line, column, reason)), kind_(kind), line_(line), column_(column),
          reason_(reason)
    {
    }

    bool is_valid_identifier(std::string_view id)
    {
        if (id.empty())
            return false;
        for (char c : id)
        {
            const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
                            c == '.' || c == ':' || c == '-';
            if (!ok)
                return false;
        }
        return true;
    }

    namespace
    {
        constexpr std::array<std::string_view, 6> keywords = {"material", "rect", "box", "tx", "rx", "bounds"};

        bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

        struct Token
        {
            std::string_view text;
            int column;
        };

        // Tokens of one line, with comments stripped.
        std::vector<Token> split_line(std::string_view line)
        {
            std::vector<Token> tokens;
            std::size_t i = 0;
            while (i < line.size())
            {
                if (line[i] == '#')
                    break;
                if (is_space(line[i]))
                {
                    ++i;
                    continue;
                }
                const std::size_t start = i;
                while (i < line.size() && !is_space(line[i]) && line[i] != '#')
                    ++i;
                tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
            }
            return tokens;
        }

        // Attribute value with the position it came from, for error reporting.
        struct Value
        {
            std::string text;
            int column = 0;
        };

        struct RawRecord
        {
            SceneRecord record;
            std::map<std::string, int> columns;
        };

        std::vector<RawRecord> tokenize(std::string_view text)
        {
            std::vector<RawRecord> out;
            int line_no = 0;
            std::size_t pos = 0;
            while (pos <= text.size())
            {
                std::size_t end = text.find('\n', pos);
                if (end == std::string_view::npos)
                    end = text.size();
                const std::string_view line = text.substr(pos, end - pos);
                ++line_no;
                pos = end + 1;

                for (std::size_t k = 0; k < line.size(); ++k)
                {
                    const auto c = static_cast<unsigned char>(line[k]);
                    if (c == '#')
                        break;
                    if ((c < 0x20 && !is_space(line[k])) || c >= 0x7f)
                        throw SceneError(SceneErrorKind::lexical, line_no, static_cast<int>(k) + 1,
                                         "unexpected byte 0x" + [&]
                                         {
                                             std::ostringstream os;
                                             os << std::hex << static_cast<int>(c);
                                             return os.str();
                                         }());
                }

                auto tokens = split_line(line);
                if (tokens.empty())
                    continue;

                RawRecord raw;
                raw.record.line = line_no;
                raw.record.keyword = std::string(tokens[0].text);
                bool known = false;
                for (auto k : keywords)
                    known = known || k == tokens[0].text;
                if (!known)
                    throw SceneError(SceneErrorKind::unknown_keyword, line_no, tokens[0].column,
                                     "'" + raw.record.keyword + "'");

                std::size_t next = 1;
                if (raw.record.keyword != "bounds")
                {
                    if (tokens.size() < 2 || tokens[1].text.find('=') != std::string_view::npos)
                        throw SceneError(SceneErrorKind::lexical, line_no,
                                         tokens.size() < 2 ? tokens[0].column : tokens[1].column,
                                         "expected an id after '" + raw.record.keyword + "'");
                    if (!is_valid_identifier(tokens[1].text))
                        throw SceneError(SceneErrorKind::lexical, line_no, tokens[1].column,
                                         "invalid id '" + std::string(tokens[1].text) + "'");
                    raw.record.id = std::string(tokens[1].text);
                    next = 2;
                }

                for (std::size_t t = next; t < tokens.size(); ++t)
                {
                    const auto &tok = tokens[t];
                    const auto eq = tok.text.find('=');
                    if (eq == std::string_view::npos || eq == 0 || eq + 1 == tok.text.size())
                        throw SceneError(SceneErrorKind::lexical, line_no, tok.column,
                                         "expected key=value, got '" + std::string(tok.text) + "'");
                    std::string key(tok.text.substr(0, eq));
                    if (!raw.record.attributes.emplace(key, std::string(tok.text.substr(eq + 1))).second)
                        throw SceneError(SceneErrorKind::duplicate_attribute, line_no, tok.column, "'" + key + "'");
                    raw.columns[key] = tok.column + static_cast<int>(eq) + 1;
                }
                out.push_back(std::move(raw));
            }
            return out;
        }

        class RecordReader
        {
        public:
            explicit RecordReader(const RawRecord &raw) : raw_(raw) {}

            int line() const { return raw_.record.line; }
            const std::string &id() const { return raw_.record.id; }

            void allow_only(std::initializer_list<std::string_view> keys) const
            {
                for (const auto &[key, value] : raw_.record.attributes)
                {
                    bool ok = false;
                    for (auto k : keys)
                        ok = ok || k == key;
                    if (!ok)
                        throw SceneError(SceneErrorKind::unknown_attribute, line(), raw_.columns.at(key) - 1 -
                                                                                       static_cast<int>(key.size()),
                                         "'" + key + "' is not valid for '" + raw_.record.keyword + "'");
                }
            }

            bool has(const std::string &key) const { return raw_.record.attributes.contains(key); }

            Value get(const std::string &key) const
            {
                auto it = raw_.record.attributes.find(key);
                if (it == raw_.record.attributes.end())
                    throw SceneError(SceneErrorKind::missing_attribute, line(), 1,
                                     "'" + raw_.record.keyword + "' requires '" + key + "='");
                return {it->second, raw_.columns.at(key)};
            }

            double number(const std::string &key, bool allow_infinite = false) const
            {
                return parse_number(get(key), allow_infinite);
            }

            Vec3 vector(const std::string &key, bool allow_infinite = false) const
            {
                const Value v = get(key);
                std::array<double, 3> xyz{};
                std::size_t start = 0;
                for (int k = 0; k < 3; ++k)
                {
                    const std::size_t comma = v.text.find(',', start);
                    const bool last = k == 2;
                    if (last != (comma == std::string::npos))
                        throw SceneError(SceneErrorKind::lexical, line(), v.column,
                                         "'" + key + "' needs exactly three comma-separated numbers");
                    const std::size_t stop = last ? v.text.size() : comma;
                    xyz[k] = parse_number({v.text.substr(start, stop - start), v.column + static_cast<int>(start)},
                                          allow_infinite);
                    start = stop + 1;
                }
                return {xyz[0], xyz[1], xyz[2]};
            }

            bool boolean(const std::string &key) const
            {
                const Value v = get(key);
                if (v.text == "true")
                    return true;
                if (v.text == "false")
                    return false;
                throw SceneError(SceneErrorKind::lexical, line(), v.column, "expected true or false");
            }

            std::string identifier(const std::string &key) const
            {
                const Value v = get(key);
                if (!is_valid_identifier(v.text))
                    throw SceneError(SceneErrorKind::lexical, line(), v.column, "invalid id '" + v.text + "'");
                return v.text;
            }

        private:
            double parse_number(const Value &v, bool allow_infinite) const
            {
                // from_chars is locale-independent and only ever accepts '.' as the decimal separator.
                const char *first = v.text.data();
                const char *last = first + v.text.size();
                double out = 0.0;
                const bool looks_numeric =
                    !v.text.empty() && (std::isdigit(static_cast<unsigned char>(v.text[0])) || v.text[0] == '-' ||
                                        v.text[0] == '.' || v.text[0] == 'i');
                auto [ptr, ec] = std::from_chars(first, last, out, std::chars_format::general);
                if (!looks_numeric || ec != std::errc() || ptr != last)
                    throw SceneError(SceneErrorKind::lexical, line(), v.column, "malformed number '" + v.text + "'");
                if (std::isnan(out) || (!allow_infinite && !std::isfinite(out)))
                    throw SceneError(SceneErrorKind::invalid_value, line(), v.column, "number must be finite");
                return out;
            }

            const RawRecord &raw_;
        };
    } // namespace

    std::vector<SceneRecord> parse_records(std::string_view text)
    {
        std::vector<SceneRecord> out;
        for (auto &raw : tokenize(text))
            out.push_back(std::move(raw.record));
        return out;
    }

    Scene parse_scene(std::string_view text)
    {
        const auto records = tokenize(text);

        Scene scene;
        std::map<std::string, int> material_lines;
        std::vector<int> surface_lines, tx_lines, rx_lines;
        std::set<std::string> surface_ids, tx_ids, rx_ids;
        int bounds_line = 0;

        auto add_surface = [&](Surface s, const RecordReader &r)
        {
            if (!surface_ids.insert(s.id).second)
                throw SceneError(SceneErrorKind::duplicate_id, r.line(), 1, "surface '" + s.id + "'");
            if (auto msg = check_surface(s); !msg.empty())
                throw SceneError(SceneErrorKind::validation, r.line(), 1, "surface '" + s.id + "': " + msg);
            scene.surfaces.push_back(std::move(s));
            surface_lines.push_back(r.line());
        };

        for (const auto &raw : records)
        {
            const RecordReader r(raw);
            const std::string &kw = raw.record.keyword;

            if (kw == "material")
            {
                r.allow_only({"pec", "er", "sigma", "thickness"});
                Material m;
                m.id = r.id();
                m.is_pec = r.has("pec") && r.boolean("pec");
                if (!m.is_pec)
                {
                    m.rel_permittivity = r.number("er");
                    m.conductivity = r.number("sigma");
                    m.thickness = r.number("thickness");
                }
                if (auto msg = m.check(); !msg.empty())
                    throw SceneError(SceneErrorKind::validation, r.line(), 1, msg);
                if (!scene.materials.emplace(m.id, m).second)
                    throw SceneError(SceneErrorKind::duplicate_id, r.line(), 1, "material '" + m.id + "'");
                material_lines[m.id] = r.line();
            }
            else if (kw == "rect")
            {
                r.allow_only({"origin", "u", "v", "material"});
                add_surface({r.id(), r.vector("origin"), r.vector("u"), r.vector("v"), r.identifier("material")}, r);
            }
            else if (kw == "box")
            {
                r.allow_only({"min", "max", "material"});
                const Vec3 lo = r.vector("min"), hi = r.vector("max");
                const std::string material = r.identifier("material");
                if (!(lo.x < hi.x && lo.y < hi.y && lo.z < hi.z))
                    throw SceneError(SceneErrorKind::validation, r.line(), 1,
                                     "box '" + r.id() + "' is degenerate (min must be below max on every axis)");
                for (auto &face : make_box(r.id(), lo, hi, material))
                    add_surface(std::move(face), r);
            }
            else if (kw == "tx" || kw == "rx")
            {
                r.allow_only({"at"});
                auto &ids = kw == "tx" ? tx_ids : rx_ids;
                if (!ids.insert(r.id()).second)
                    throw SceneError(SceneErrorKind::duplicate_id, r.line(), 1, kw + " '" + r.id() + "'");
                (kw == "tx" ? scene.tx_points : scene.rx_points).push_back({r.id(), r.vector("at")});
                (kw == "tx" ? tx_lines : rx_lines).push_back(r.line());
            }
            else // bounds
            {
                r.allow_only({"min", "max"});
                if (bounds_line != 0)
                    throw SceneError(SceneErrorKind::duplicate_id, r.line(), 1,
                                     "bounds already given on line " + std::to_string(bounds_line));
                scene.bounds = Aabb{r.vector("min", true), r.vector("max", true)};
                const auto &b = scene.bounds;
                if (!(b.min.x < b.max.x && b.min.y < b.max.y && b.min.z < b.max.z))
                    throw SceneError(SceneErrorKind::validation, r.line(), 1, "bounds: min must be below max");
                bounds_line = r.line();
            }
        }

        // Forward references are resolved here; unknown ids fall back to the built-in library.
        for (std::size_t i = 0; i < scene.surfaces.size(); ++i)
        {
            const auto &id = scene.surfaces[i].material_id;
            if (scene.materials.contains(id))
                continue;
            auto it = default_materials().find(id);
            if (it == default_materials().end())
                throw SceneError(SceneErrorKind::unresolved_material, surface_lines[i], 1,
                                 "surface '" + scene.surfaces[i].id + "' references undefined material '" + id + "'");
            scene.materials.emplace(id, it->second);
        }

        auto check_inside = [&](const std::vector<NamedPoint> &points, const std::vector<int> &lines,
                                const std::string &kind)
        {
            for (std::size_t i = 0; i < points.size(); ++i)
                if (!scene.bounds.strictly_contains(points[i].position))
                    throw SceneError(SceneErrorKind::validation, lines[i], 1,
                                     kind + " '" + points[i].id + "' lies outside the scene bounds");
        };
        check_inside(scene.tx_points, tx_lines, "tx");
        check_inside(scene.rx_points, rx_lines, "rx");

        if (auto violations = validate_scene(scene); !violations.empty())
            throw SceneError(SceneErrorKind::validation, 0, 0, violations.front());

        return scene;
    }

    namespace
    {
        std::string num(double v)
        {
            std::array<char, 64> buf{};
            auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
            std::string s(buf.data(), ptr);
            if (s == "-0")
                s = "0";
            return s;
        }

        std::string vec(const Vec3 &v) { return num(v.x) + "," + num(v.y) + "," + num(v.z); }

        const std::string &checked(const std::string &id)
        {
            if (!is_valid_identifier(id))
                throw std::invalid_argument("serialize_scene: id '" + id + "' cannot be written to a scene file");
            return id;
        }
    } // namespace

    std::string serialize_scene(const Scene &scene)
    {
        std::string out;
        out += "bounds min=" + vec(scene.bounds.min) + " max=" + vec(scene.bounds.max) + "\n";
        for (const auto &[id, m] : scene.materials)
        {
            out += "material " + checked(id);
            if (m.is_pec)
                out += " pec=true\n";
            else
                out += " er=" + num(m.rel_permittivity) + " sigma=" + num(m.conductivity) +
                       " thickness=" + num(m.thickness) + "\n";
        }
        for (const auto &s : scene.surfaces)
            out += "rect " + checked(s.id) + " origin=" + vec(s.origin) + " u=" + vec(s.edge_u) +
                   " v=" + vec(s.edge_v) + " material=" + checked(s.material_id) + "\n";
        for (const auto &p : scene.tx_points)
            out += "tx " + checked(p.id) + " at=" + vec(p.position) + "\n";
        for (const auto &p : scene.rx_points)
            out += "rx " + checked(p.id) + " at=" + vec(p.position) + "\n";
        return out;
    }

    Scene load_scene_file(const std::string &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw SceneError(SceneErrorKind::io, 0, 0, "cannot open scene file '" + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_scene(buf.str());
    }

} // namespace indoorrt
