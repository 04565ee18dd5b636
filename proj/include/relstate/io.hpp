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
#include <vector>

#include "relstate/future_truth.hpp"
#include "relstate/hilbert.hpp"
#include "relstate/relative_state.hpp"

namespace relstate {

// All emitters format numbers with shortest round-trip notation, so a given
// value always produces the same bytes.

/// Snapshot format: {"dim": int, "amplitudes": [[re, im], ...]}.
std::string snapshot_to_json(const StateVector& psi);
StateVector snapshot_from_json(const std::string& text);
void save_snapshot(const std::string& path, const StateVector& psi);
StateVector load_snapshot(const std::string& path);

/// CSV columns (n, weight, real_flag); real_flag emitted as 1/0.
std::string branch_table_csv(const BranchDecomposition& d);
std::string branch_table_json(const BranchDecomposition& d);

/// CSV columns (m, truth_value) followed by the diagnostic rows
/// (sum, consistency_defect).
std::string truth_table_csv(const std::vector<TruthValue>& table);
std::string truth_table_json(const std::vector<TruthValue>& table);

/// JSON object {"seed": ..., "record": {time: index, ...},
/// "table_sums": {time: sum, ...}}; times keyed by their shortest
/// round-trip decimal form.
std::string record_json(const SampledRecord& rec);

/// RFC-4180 style quoting: the field is wrapped in double quotes when it
/// contains a comma, quote or newline, with inner quotes doubled.
std::string csv_quote(const std::string& field);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

} // namespace relstate
