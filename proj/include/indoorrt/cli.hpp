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

#ifndef INDOORRT_CLI_HPP
#define INDOORRT_CLI_HPP

#include <iosfwd>

namespace indoorrt
{
    // Exit codes of the command-line tool.
    inline constexpr int exit_ok = 0;
    inline constexpr int exit_verification_failed = 1; // verify: LOS first arrival off by more than 1e-9
    inline constexpr int exit_input_error = 2;         // bad flags, unreadable or invalid scene, invalid grid
    inline constexpr int exit_trace_error = 3;         // tx equals rx, endpoint outside the scene, no paths

    /// Runs one command line (argv[0] is the program name). Every command writes its files and a
    /// manifest.json into a fresh <out>/<command>-NNNN directory.
    int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace indoorrt

#endif
