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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace relstate {

enum class ErrorKind {
    zero_vector,        // normalizing an all-zero amplitude vector
    not_normalized,     // squared norm off unity beyond tolerance
    dim_mismatch,       // incompatible dimensions
    role,               // operator role tag not satisfied by its entries
    empty_branch,       // branch weight below the pruning floor
    singular_branch,    // vanishing denominator with non-vanishing numerator
    empty_perspective,  // perspective branch carries no weight
    dead_end,           // sampler hit an all-zero transition table
    range,              // argument outside the model's domain
    too_many_disjuncts, // disjointness refinement exceeded the configured cap
    io_format,          // malformed snapshot or table file
    record_gap,         // past-dated event at a time absent from the memory record
    contract,           // numerical contract violated (bounds, realness, sums)
    parse,              // proposition text rejected
    config,             // run configuration rejected
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

struct ZeroVectorError : Error {
    explicit ZeroVectorError(const std::string& w) : Error(ErrorKind::zero_vector, w) {}
};
struct NotNormalizedError : Error {
    explicit NotNormalizedError(const std::string& w) : Error(ErrorKind::not_normalized, w) {}
};
struct DimMismatchError : Error {
    explicit DimMismatchError(const std::string& w) : Error(ErrorKind::dim_mismatch, w) {}
};
struct RoleError : Error {
    explicit RoleError(const std::string& w) : Error(ErrorKind::role, w) {}
};
struct EmptyBranchError : Error {
    explicit EmptyBranchError(const std::string& w) : Error(ErrorKind::empty_branch, w) {}
};
struct SingularBranchError : Error {
    explicit SingularBranchError(const std::string& w) : Error(ErrorKind::singular_branch, w) {}
};
struct EmptyPerspectiveError : Error {
    explicit EmptyPerspectiveError(const std::string& w) : Error(ErrorKind::empty_perspective, w) {}
};
struct DeadEndError : Error {
    explicit DeadEndError(const std::string& w) : Error(ErrorKind::dead_end, w) {}
};
struct RangeError : Error {
    explicit RangeError(const std::string& w) : Error(ErrorKind::range, w) {}
};
struct TooManyDisjunctsError : Error {
    explicit TooManyDisjunctsError(const std::string& w) : Error(ErrorKind::too_many_disjuncts, w) {}
};
struct IoFormatError : Error {
    explicit IoFormatError(const std::string& w) : Error(ErrorKind::io_format, w) {}
};
struct RecordGapError : Error {
    explicit RecordGapError(const std::string& w) : Error(ErrorKind::record_gap, w) {}
};
struct ContractError : Error {
    explicit ContractError(const std::string& w) : Error(ErrorKind::contract, w) {}
};

// Parse failures carry the byte offset of the offending character.
struct ParseError : Error {
    ParseError(std::size_t position, const std::string& w)
        : Error(ErrorKind::parse, w + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& w) : Error(ErrorKind::config, w) {}
};

} // namespace relstate
