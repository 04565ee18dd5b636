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

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "relstate/config.hpp"
#include "relstate/errors.hpp"
#include "relstate/run.hpp"

namespace {

// Exit 2 covers everything wrong with the input (config, files, ranges);
// exit 3 covers violated numerical contracts discovered while computing.
int exit_code_for(const relstate::Error& e) {
    switch (e.kind()) {
        case relstate::ErrorKind::contract:
        case relstate::ErrorKind::singular_branch:
        case relstate::ErrorKind::too_many_disjuncts:
        case relstate::ErrorKind::dead_end:
            return 3;
        default:
            return 2;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"relative-state branch weights, future truth values and sampled records"};
    std::string config_path;
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed;
    bool plot = false;
    bool quiet = false;
    app.add_option("--config", config_path, "JSON run configuration")->required();
    app.add_option("--out", out_dir, "output directory (created if absent)");
    app.add_option("--seed", seed, "override the config's sampler seed");
    app.add_flag("--plot", plot, "also emit SVG charts");
    app.add_flag("--quiet", quiet, "suppress the stdout summary");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        relstate::RunConfig config = relstate::load_config(config_path);
        if (seed) {
            config.seed = *seed;
        }
        relstate::RunOptions options;
        options.out_dir = out_dir;
        options.plot = plot;
        options.quiet = quiet;
        relstate::run(config, options);
        return 0;
    } catch (const relstate::Error& e) {
        const int code = exit_code_for(e);
        std::cerr << (code == 3 ? "contract violation: " : "error: ") << e.what() << "\n";
        return code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
