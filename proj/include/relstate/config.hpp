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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "relstate/hilbert.hpp"

namespace relstate {

enum class Query { evolve, branches, future, logic, sample };

struct CatConfig {
    double gamma = 0.0;
    Index bins = 0;
    double t_max = 0.0;
};

struct IdealMeasurementConfig {
    std::vector<Complex> coefficients;
    double interaction_time = 1.0;
};

struct RabiConfig {
    double omega = 1.0;
};

struct CustomConfig {
    Index dim_s = 0;
    Index dim_e = 0;
    Mat hamiltonian;
    std::optional<Vec> initial;
    std::optional<std::string> initial_snapshot;
    std::vector<Vec> experience_basis;  // empty means computational basis
    std::vector<std::string> labels;    // empty means generated labels
};

struct PerspectiveConfig {
    Index n = 0;
    double t0 = 0.0;
    std::map<double, Index> record;
};

/// One validated run request. Parsing rejects unknown keys, missing
/// query-required fields, and malformed values with ConfigError.
struct RunConfig {
    std::string model;  // "cat", "ideal_measurement", "rabi" or "custom"
    std::optional<CatConfig> cat;
    std::optional<IdealMeasurementConfig> ideal_measurement;
    std::optional<RabiConfig> rabi;
    std::optional<CustomConfig> custom;

    Query query = Query::branches;
    std::vector<double> times;  // strictly increasing, nonempty
    std::optional<PerspectiveConfig> perspective;
    std::optional<std::string> proposition;
    std::uint64_t seed = 0;
};

RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);

const char* query_name(Query q);

} // namespace relstate
