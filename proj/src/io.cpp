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

#include "relstate/io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "relstate/format.hpp"

namespace relstate {

namespace {

using nlohmann::json;

json parse_or_throw(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw IoFormatError(std::string(what) + ": " + e.what());
    }
}

Complex complex_from_json(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw IoFormatError(std::string(what) + ": complex entries must be [re, im] pairs");
    }
    return Complex(j[0].get<double>(), j[1].get<double>());
}

} // namespace

std::string snapshot_to_json(const StateVector& psi) {
    json amps = json::array();
    for (Index i = 0; i < psi.dim(); ++i) {
        const Complex a = psi.amp(i);
        amps.push_back(json::array({a.real(), a.imag()}));
    }
    json j;
    j["dim"] = psi.dim();
    j["amplitudes"] = std::move(amps);
    return j.dump();
}

StateVector snapshot_from_json(const std::string& text) {
    const json j = parse_or_throw(text, "snapshot");
    if (!j.is_object() || !j.contains("dim") || !j.contains("amplitudes")) {
        throw IoFormatError("snapshot: expected an object with dim and amplitudes");
    }
    if (!j["dim"].is_number_integer()) {
        throw IoFormatError("snapshot: dim must be an integer");
    }
    const auto dim = j["dim"].get<long long>();
    if (dim < 1) {
        throw IoFormatError("snapshot: dim must be positive");
    }
    const json& amps = j["amplitudes"];
    if (!amps.is_array() || static_cast<long long>(amps.size()) != dim) {
        throw IoFormatError("snapshot: amplitudes must be an array of dim entries");
    }
    Vec v(static_cast<Index>(dim));
    for (Index i = 0; i < static_cast<Index>(dim); ++i) {
        v(i) = complex_from_json(amps[static_cast<std::size_t>(i)], "snapshot");
    }
    return make_state(v, false);
}

void save_snapshot(const std::string& path, const StateVector& psi) {
    write_text_file(path, snapshot_to_json(psi) + "\n");
}

StateVector load_snapshot(const std::string& path) {
    return snapshot_from_json(read_text_file(path));
}

std::string branch_table_csv(const BranchDecomposition& d) {
    std::string out = "n,weight,real_flag\n";
    for (const auto& b : d.branches) {
        out += std::to_string(b.n);
        out += ',';
        out += format_double(b.weight);
        out += b.real_flag ? ",1\n" : ",0\n";
    }
    return out;
}

std::string branch_table_json(const BranchDecomposition& d) {
    json branches = json::array();
    for (const auto& b : d.branches) {
        json e;
        e["n"] = b.n;
        e["weight"] = b.weight;
        e["real"] = b.real_flag;
        branches.push_back(std::move(e));
    }
    json j;
    j["time"] = d.time;
    j["branches"] = std::move(branches);
    return j.dump() + "\n";
}

std::string truth_table_csv(const std::vector<TruthValue>& table) {
    std::string out = "m,truth_value\n";
    double sum = 0.0;
    for (std::size_t m = 0; m < table.size(); ++m) {
        sum += table[m].value();
        out += std::to_string(m);
        out += ',';
        out += format_double(table[m].value());
        out += '\n';
    }
    out += "sum," + format_double(sum) + "\n";
    out += "consistency_defect," + format_double(1.0 - sum) + "\n";
    return out;
}

std::string truth_table_json(const std::vector<TruthValue>& table) {
    json entries = json::array();
    double sum = 0.0;
    for (std::size_t m = 0; m < table.size(); ++m) {
        sum += table[m].value();
        json e;
        e["m"] = m;
        e["truth_value"] = table[m].value();
        entries.push_back(std::move(e));
    }
    json j;
    j["table"] = std::move(entries);
    j["sum"] = sum;
    j["consistency_defect"] = 1.0 - sum;
    return j.dump() + "\n";
}

std::string record_json(const SampledRecord& rec) {
    json record = json::object();
    json sums = json::object();
    for (std::size_t k = 0; k < rec.times.size(); ++k) {
        const std::string key = format_double(rec.times[k]);
        record[key] = rec.indices[k];
        sums[key] = rec.table_sums[k];
    }
    json j;
    j["seed"] = rec.seed;
    j["record"] = std::move(record);
    j["table_sums"] = std::move(sums);
    return j.dump() + "\n";
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out += "\"\"";
        } else {
            out += c;
        }
    }
    out += '"';
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw IoFormatError("cannot open " + path + " for writing");
    }
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f) {
        throw IoFormatError("write to " + path + " failed");
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw IoFormatError("cannot open " + path);
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace relstate
