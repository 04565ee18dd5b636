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

#include "relstate/config.hpp"

#include <charconv>
#include <initializer_list>
#include <system_error>
#include <utility>

#include <json.hpp>

#include "relstate/io.hpp"

namespace relstate {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw ConfigError("config: " + msg); }

void check_keys(const json& obj, const std::string& where,
                std::initializer_list<const char*> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : allowed) {
            if (it.key() == k) {
                known = true;
                break;
            }
        }
        if (!known) {
            fail(where + ": unknown key \"" + it.key() + "\"");
        }
    }
}

const json& field(const json& obj, const std::string& where, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        fail(where + ": missing required key \"" + key + "\"");
    }
    return *it;
}

double as_number(const json& j, const std::string& what) {
    if (!j.is_number()) {
        fail(what + " must be a number");
    }
    return j.get<double>();
}

long long as_integer(const json& j, const std::string& what) {
    if (!j.is_number_integer()) {
        fail(what + " must be an integer");
    }
    return j.get<long long>();
}

std::string as_string(const json& j, const std::string& what) {
    if (!j.is_string()) {
        fail(what + " must be a string");
    }
    return j.get<std::string>();
}

Complex as_complex(const json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        fail(what + " must be a [re, im] pair");
    }
    return Complex(j[0].get<double>(), j[1].get<double>());
}

Vec as_amplitudes(const json& j, const std::string& what) {
    if (!j.is_array() || j.empty()) {
        fail(what + " must be a nonempty array of [re, im] pairs");
    }
    Vec v(static_cast<Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        v(static_cast<Index>(i)) = as_complex(j[i], what + " entry");
    }
    return v;
}

Mat as_matrix(const json& j, const std::string& what) {
    if (!j.is_array() || j.empty()) {
        fail(what + " must be a nonempty array of rows");
    }
    const std::size_t rows = j.size();
    Mat m(static_cast<Index>(rows), static_cast<Index>(rows));
    for (std::size_t r = 0; r < rows; ++r) {
        const json& row = j[r];
        if (!row.is_array() || row.size() != rows) {
            fail(what + " must be square (row-major nested arrays)");
        }
        for (std::size_t c = 0; c < rows; ++c) {
            m(static_cast<Index>(r), static_cast<Index>(c)) =
                as_complex(row[c], what + " entry");
        }
    }
    return m;
}

double parse_time_key(const std::string& key) {
    double t = 0.0;
    const auto res = std::from_chars(key.data(), key.data() + key.size(), t);
    if (res.ec != std::errc() || res.ptr != key.data() + key.size()) {
        fail("perspective.record: key \"" + key + "\" is not a decimal time");
    }
    return t;
}

CatConfig parse_cat(const json& j) {
    check_keys(j, "cat", {"gamma", "bins", "t_max"});
    CatConfig c;
    c.gamma = as_number(field(j, "cat", "gamma"), "cat.gamma");
    c.bins = static_cast<Index>(as_integer(field(j, "cat", "bins"), "cat.bins"));
    c.t_max = as_number(field(j, "cat", "t_max"), "cat.t_max");
    return c;
}

IdealMeasurementConfig parse_ideal(const json& j) {
    check_keys(j, "ideal_measurement", {"coefficients", "interaction_time"});
    IdealMeasurementConfig c;
    const json& coeffs = field(j, "ideal_measurement", "coefficients");
    if (!coeffs.is_array() || coeffs.empty()) {
        fail("ideal_measurement.coefficients must be a nonempty array");
    }
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        c.coefficients.push_back(
            as_complex(coeffs[k], "ideal_measurement.coefficients entry"));
    }
    c.interaction_time = as_number(field(j, "ideal_measurement", "interaction_time"),
                                   "ideal_measurement.interaction_time");
    return c;
}

RabiConfig parse_rabi(const json& j) {
    check_keys(j, "rabi", {"omega"});
    RabiConfig c;
    c.omega = as_number(field(j, "rabi", "omega"), "rabi.omega");
    return c;
}

CustomConfig parse_custom(const json& j) {
    check_keys(j, "custom",
               {"dim_s", "dim_e", "hamiltonian", "initial", "initial_snapshot",
                "experience_basis", "labels"});
    CustomConfig c;
    c.dim_s = static_cast<Index>(as_integer(field(j, "custom", "dim_s"), "custom.dim_s"));
    c.dim_e = static_cast<Index>(as_integer(field(j, "custom", "dim_e"), "custom.dim_e"));
    if (c.dim_s < 1 || c.dim_e < 1) {
        fail("custom dimensions must be positive");
    }
    c.hamiltonian = as_matrix(field(j, "custom", "hamiltonian"), "custom.hamiltonian");
    if (c.hamiltonian.rows() != c.dim_s * c.dim_e) {
        fail("custom.hamiltonian dimension does not equal dim_s * dim_e");
    }
    const bool has_initial = j.contains("initial");
    const bool has_snapshot = j.contains("initial_snapshot");
    if (has_initial == has_snapshot) {
        fail("custom needs exactly one of initial and initial_snapshot");
    }
    if (has_initial) {
        c.initial = as_amplitudes(j["initial"], "custom.initial");
    } else {
        c.initial_snapshot = as_string(j["initial_snapshot"], "custom.initial_snapshot");
    }
    if (j.contains("experience_basis")) {
        const json& basis = j["experience_basis"];
        if (!basis.is_array() || static_cast<Index>(basis.size()) != c.dim_s) {
            fail("custom.experience_basis must list dim_s vectors");
        }
        for (std::size_t n = 0; n < basis.size(); ++n) {
            c.experience_basis.push_back(
                as_amplitudes(basis[n], "custom.experience_basis vector"));
        }
    }
    if (j.contains("labels")) {
        const json& labels = j["labels"];
        if (!labels.is_array() || static_cast<Index>(labels.size()) != c.dim_s) {
            fail("custom.labels must list dim_s strings");
        }
        for (std::size_t n = 0; n < labels.size(); ++n) {
            c.labels.push_back(as_string(labels[n], "custom.labels entry"));
        }
    }
    return c;
}

PerspectiveConfig parse_perspective(const json& j) {
    check_keys(j, "perspective", {"n", "t0", "record"});
    PerspectiveConfig p;
    p.n = static_cast<Index>(as_integer(field(j, "perspective", "n"), "perspective.n"));
    if (p.n < 0) {
        fail("perspective.n must be nonnegative");
    }
    p.t0 = as_number(field(j, "perspective", "t0"), "perspective.t0");
    if (j.contains("record")) {
        const json& rec = j["record"];
        if (!rec.is_object()) {
            fail("perspective.record must be an object keyed by time");
        }
        for (auto it = rec.begin(); it != rec.end(); ++it) {
            const double t = parse_time_key(it.key());
            const long long n = as_integer(it.value(), "perspective.record value");
            if (n < 0) {
                fail("perspective.record indices must be nonnegative");
            }
            p.record[t] = static_cast<Index>(n);
        }
    }
    return p;
}

Query parse_query(const std::string& name) {
    if (name == "evolve") return Query::evolve;
    if (name == "branches") return Query::branches;
    if (name == "future") return Query::future;
    if (name == "logic") return Query::logic;
    if (name == "sample") return Query::sample;
    fail("unknown query \"" + name + "\"");
}

} // namespace

const char* query_name(Query q) {
    switch (q) {
        case Query::evolve: return "evolve";
        case Query::branches: return "branches";
        case Query::future: return "future";
        case Query::logic: return "logic";
        case Query::sample: return "sample";
    }
    return "unknown";
}

RunConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        fail(e.what());
    }
    if (!j.is_object()) {
        fail("top level must be an object");
    }
    check_keys(j, "top level",
               {"model", "cat", "ideal_measurement", "rabi", "custom", "query", "times",
                "perspective", "proposition", "seed"});

    RunConfig cfg;
    cfg.model = as_string(field(j, "top level", "model"), "model");
    if (cfg.model != "cat" && cfg.model != "ideal_measurement" && cfg.model != "rabi" &&
        cfg.model != "custom") {
        fail("unknown model \"" + cfg.model + "\"");
    }
    for (const char* section : {"cat", "ideal_measurement", "rabi", "custom"}) {
        if (j.contains(section) && cfg.model != section) {
            fail(std::string("section \"") + section + "\" present but model is \"" +
                 cfg.model + "\"");
        }
    }
    if (cfg.model == "cat") {
        cfg.cat = parse_cat(field(j, "top level", "cat"));
    } else if (cfg.model == "ideal_measurement") {
        cfg.ideal_measurement = parse_ideal(field(j, "top level", "ideal_measurement"));
    } else if (cfg.model == "rabi") {
        cfg.rabi = parse_rabi(field(j, "top level", "rabi"));
    } else {
        cfg.custom = parse_custom(field(j, "top level", "custom"));
    }

    cfg.query = parse_query(as_string(field(j, "top level", "query"), "query"));

    const json& times = field(j, "top level", "times");
    if (!times.is_array() || times.empty()) {
        fail("times must be a nonempty array");
    }
    for (std::size_t k = 0; k < times.size(); ++k) {
        cfg.times.push_back(as_number(times[k], "times entry"));
        if (k > 0 && !(cfg.times[k] > cfg.times[k - 1])) {
            fail("times must be strictly increasing");
        }
    }

    if (j.contains("perspective")) {
        if (cfg.query != Query::future && cfg.query != Query::logic) {
            fail("perspective is only meaningful for future and logic queries");
        }
        cfg.perspective = parse_perspective(j["perspective"]);
    } else if (cfg.query == Query::future || cfg.query == Query::logic) {
        fail(std::string(query_name(cfg.query)) + " query requires a perspective");
    }

    if (j.contains("proposition")) {
        if (cfg.query != Query::logic) {
            fail("proposition is only meaningful for the logic query");
        }
        cfg.proposition = as_string(j["proposition"], "proposition");
        if (cfg.proposition->empty()) {
            fail("proposition must not be empty");
        }
    } else if (cfg.query == Query::logic) {
        fail("logic query requires a proposition");
    }

    if (j.contains("seed")) {
        const json& seed = j["seed"];
        if (!seed.is_number_integer() ||
            (!seed.is_number_unsigned() && seed.get<long long>() < 0)) {
            fail("seed must be a nonnegative integer");
        }
        cfg.seed = seed.get<std::uint64_t>();
    }

    if (cfg.query == Query::future) {
        for (double t : cfg.times) {
            if (!(t > cfg.perspective->t0)) {
                fail("future query times must lie strictly after perspective.t0");
            }
        }
    }

    return cfg;
}

RunConfig load_config(const std::string& path) {
    try {
        return parse_config(read_text_file(path));
    } catch (const IoFormatError& e) {
        throw ConfigError(e.what());
    }
}

} // namespace relstate
