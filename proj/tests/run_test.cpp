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

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include <relstate/io.hpp>
#include <relstate/run.hpp>

#include "oracles.hpp"

using namespace relstate;
using nlohmann::json;
using oracles::near;

namespace {

namespace fs = std::filesystem;

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "relstate_run_test" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

RunOptions opts_in(const fs::path& dir, bool plot = false) {
    RunOptions o;
    o.out_dir = dir.string();
    o.plot = plot;
    o.quiet = true;
    return o;
}

std::vector<std::string> dir_files(const fs::path& dir) {
    std::vector<std::string> names;
    for (const auto& entry : fs::directory_iterator(dir)) {
        names.push_back(entry.path().filename().string());
    }
    std::sort(names.begin(), names.end());
    return names;
}

json rabi_evolve_cfg() {
    return json{{"model", "rabi"},
                {"rabi", {{"omega", 1.0}}},
                {"query", "evolve"},
                {"times", {0.0, 0.5, 1.0, 1.5, 2.0}}};
}

json cat_branches_cfg() {
    return json{{"model", "cat"},
                {"cat", {{"gamma", 0.5}, {"bins", 1}, {"t_max", 2.0}}},
                {"query", "branches"},
                {"times", {0.0, 1.0, 2.0}}};
}

json ideal_future_cfg() {
    return json{{"model", "ideal_measurement"},
                {"ideal_measurement",
                 {{"coefficients", {{0.5, 0.0}, {0.8660254037844386, 0.0}}},
                  {"interaction_time", 1.0}}},
                {"query", "future"},
                {"perspective", {{"n", 0}, {"t0", 0.0}}},
                {"times", {0.5, 1.0}}};
}

json cat_logic_cfg() {
    return json{{"model", "cat"},
                {"cat", {{"gamma", 0.5}, {"bins", 2}, {"t_max", 2.0}}},
                {"query", "logic"},
                {"times", {2.0}},
                {"perspective", {{"n", 0}, {"t0", 1.0}, {"record", {{"0", 0}}}}},
                {"proposition", "E(0,1) & !E(0,2)"}};
}

json cat_sample_cfg() {
    return json{{"model", "cat"},
                {"cat", {{"gamma", 0.5}, {"bins", 10}, {"t_max", 2.0}}},
                {"query", "sample"},
                {"times", {0.0, 0.5, 1.0, 1.5, 2.0}},
                {"seed", 7}};
}

} // namespace

TEST_CASE("the evolve query writes a norm trace and a final snapshot") {
    const fs::path dir = fresh_dir("evolve");
    const std::string summary = run(parse_config(rabi_evolve_cfg().dump()), opts_in(dir));
    CHECK(summary.starts_with("evolve:"));

    const std::string csv = read_text_file((dir / "evolution.csv").string());
    CHECK(csv.starts_with("t,norm,energy\n0,1,0\n"));
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);

    const StateVector last = load_snapshot((dir / "snapshot.json").string());
    CHECK(last.dim() == 2);
    CHECK(near(std::abs(last.amp(0)), std::abs(std::cos(2.0)), 1e-12));

    CHECK(!fs::exists(dir / "evolution.svg"));
}

TEST_CASE("the branches query reports the decay weights") {
    const fs::path dir = fresh_dir("branches");
    const std::string summary = run(parse_config(cat_branches_cfg().dump()), opts_in(dir));
    CHECK(summary.starts_with("branches:"));
    CHECK(summary.find("alive=") != std::string::npos);

    const std::string csv = read_text_file((dir / "branches.csv").string());
    CHECK(csv.starts_with("t,alive_weight,dead_weight\n0,1,0\n"));

    const json table = json::parse(read_text_file((dir / "branch_table.json").string()));
    CHECK(table["time"].get<double>() == 2.0);
    CHECK(near(table["branches"][0]["weight"].get<double>(), std::exp(-2.0), 1e-12));
    CHECK(near(table["branches"][1]["weight"].get<double>(), 1.0 - std::exp(-2.0), 1e-12));
}

TEST_CASE("the future query writes a Born-rule truth table") {
    const fs::path dir = fresh_dir("future");
    const std::string summary = run(parse_config(ideal_future_cfg().dump()), opts_in(dir));
    CHECK(summary.starts_with("future:"));

    const json table = json::parse(read_text_file((dir / "truth_table.json").string()));
    CHECK(near(table["sum"].get<double>(), 1.0, 1e-9));
    CHECK(near(table["consistency_defect"].get<double>(), 0.0, 1e-9));
    CHECK(near(table["table"][0]["truth_value"].get<double>(), 0.0, 1e-9));
    CHECK(near(table["table"][1]["truth_value"].get<double>(), 0.25, 1e-9));
    CHECK(near(table["table"][2]["truth_value"].get<double>(), 0.75, 1e-9));

    const std::string csv = read_text_file((dir / "future_series.csv").string());
    CHECK(csv.starts_with("t,ready_truth,outcome_1_truth,outcome_2_truth,"
                          "sum,consistency_defect\n"));
}

TEST_CASE("the logic query evaluates a dated proposition") {
    const fs::path dir = fresh_dir("logic");
    const std::string summary = run(parse_config(cat_logic_cfg().dump()), opts_in(dir));
    CHECK(summary.starts_with("logic:"));

    const json out = json::parse(read_text_file((dir / "logic.json").string()));
    CHECK(out["proposition"].get<std::string>() == "E(0,1) & !E(0,2)");
    CHECK(near(out["truth_value"].get<double>(), 1.0 - std::exp(-1.0), 1e-9));

    const std::string csv = read_text_file((dir / "logic.csv").string());
    CHECK(csv.starts_with("proposition,truth_value\n\"E(0,1) & !E(0,2)\","));
}

TEST_CASE("logic events must be dated on the grid or in the record") {
    json cfg = cat_logic_cfg();
    cfg["proposition"] = "E(0,1.5)";
    const fs::path dir = fresh_dir("logic_offgrid");
    CHECK_THROWS_WITH_AS(run(parse_config(cfg.dump()), opts_in(dir)),
                         doctest::Contains("neither on the times grid nor in the record"),
                         ConfigError);
}

TEST_CASE("the sample query records a watched history") {
    const fs::path dir = fresh_dir("sample");
    const std::string summary = run(parse_config(cat_sample_cfg().dump()), opts_in(dir));
    CHECK(summary.starts_with("sample: seed 7"));

    const json rec = json::parse(read_text_file((dir / "record.json").string()));
    CHECK(rec["seed"].get<std::uint64_t>() == 7);
    CHECK(rec["record"].size() == 5);
    CHECK(rec["record"]["0"].get<int>() == 0);
    CHECK(near(rec["table_sums"]["0"].get<double>(), 1.0, 1e-9));

    const std::string csv = read_text_file((dir / "record.csv").string());
    CHECK(csv.starts_with("t,index,label\n0,0,alive\n"));
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
}

TEST_CASE("plots are emitted only on request") {
    const fs::path dir = fresh_dir("plotted");
    run(parse_config(cat_branches_cfg().dump()), opts_in(dir, true));
    REQUIRE(fs::exists(dir / "branches.svg"));
    const std::string svg = read_text_file((dir / "branches.svg").string());
    CHECK(svg.starts_with("<svg"));
    CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("nested output directories are created on demand") {
    const fs::path dir = fresh_dir("nest") / "deep" / "down";
    run(parse_config(rabi_evolve_cfg().dump()), opts_in(dir));
    CHECK(fs::exists(dir / "evolution.csv"));
}

TEST_CASE("rerunning any bundled query reproduces its bytes") {
    const std::vector<json> configs{rabi_evolve_cfg(), cat_branches_cfg(),
                                    ideal_future_cfg(), cat_logic_cfg(), cat_sample_cfg()};
    for (const json& cfg_json : configs) {
        const RunConfig cfg = parse_config(cfg_json.dump());
        const fs::path a = fresh_dir("twin_a");
        const fs::path b = fresh_dir("twin_b");
        const std::string sa = run(cfg, opts_in(a, true));
        const std::string sb = run(cfg, opts_in(b, true));
        CHECK(sa == sb);
        const auto names_a = dir_files(a);
        const auto names_b = dir_files(b);
        REQUIRE(names_a == names_b);
        REQUIRE(!names_a.empty());
        for (const auto& name : names_a) {
            CHECK(read_text_file((a / name).string()) ==
                  read_text_file((b / name).string()));
        }
    }
}
