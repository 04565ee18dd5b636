// Copyright 2026 The relstate authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include "relstate/config.hpp"

namespace relstate {

struct RunOptions {
    std::string out_dir = ".";
    bool plot = false;
    bool quiet = false;
};

/// Executes the configured query and writes its output files into
/// options.out_dir (created if absent). Returns the one-paragraph summary
/// that is also printed to standard output unless options.quiet is set.
std::string run(const RunConfig& config, const RunOptions& options);

} // namespace relstate
