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

#ifndef INDOORRT_SCENE_IO_HPP
#define INDOORRT_SCENE_IO_HPP

#include "indoorrt/scene.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace indoorrt
{
    /*!
    Line-oriented scene format (see docs/scene-format.md for the grammar):

        # comment
        bounds   min=X,Y,Z max=X,Y,Z
        material <id> er=<num> sigma=<num> thickness=<num>
        material <id> pec=true
        rect     <id> origin=X,Y,Z u=X,Y,Z v=X,Y,Z material=<id>
        box      <id> min=X,Y,Z max=X,Y,Z material=<id>
        tx       <id> at=X,Y,Z
        rx       <id> at=X,Y,Z

    Lengths are meters. Materials may be referenced before they are defined; a reference that
    is never defined falls back to the built-in library (brick, wood, metal, concrete).
    */

    enum class SceneErrorKind
    {
        lexical,
        unknown_keyword,
        missing_attribute,
        unknown_attribute,
        duplicate_attribute,
        duplicate_id,
        unresolved_material,
        invalid_value,
        validation,
        io
    };

    const char *to_string(SceneErrorKind kind);

    class SceneError : public std::runtime_error
    {
    public:
        SceneError(SceneErrorKind kind, int line, int column, const std::string &reason);

        SceneErrorKind kind() const { return kind_; }
        int line() const { return line_; }     // 1-based, 0 when not tied to a line
        int column() const { return column_; } // 1-based, 0 when not tied to a column
        const std::string &reason() const { return reason_; }

    private:
        SceneErrorKind kind_;
        int line_;
        int column_;
        std::string reason_;
    };

    struct SceneRecord
    {
        std::string keyword;
        std::string id; // empty for bounds
        std::map<std::string, std::string> attributes;
        int line = 0;
    };

    /// Tokenizes a document into records without interpreting attribute values.
    std::vector<SceneRecord> parse_records(std::string_view text);

    /// Throws SceneError on any malformed or invalid input.
    Scene parse_scene(std::string_view text);

    /// Inverse of parse_scene on valid scenes; numbers are written in shortest round-trip form.
    /// Throws std::invalid_argument if an id cannot be represented in the format.
    std::string serialize_scene(const Scene &scene);

    /// Reads and parses a file. A missing or unreadable file is a SceneError of kind io.
    Scene load_scene_file(const std::string &path);

    /// True for ids made of [A-Za-z0-9_.:-].
    bool is_valid_identifier(std::string_view id);

} // namespace indoorrt

#endif
