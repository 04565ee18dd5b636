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

#include <vector>

#include "relstate/hilbert.hpp"

namespace relstate {

/// One term of the expansion over the experience basis: the unnormalized
/// component of the universal state correlated with experience n, and its
/// squared norm (the branch's degree of reality). real_flag marks whether
/// the weight clears the pruning floor, i.e. the experience occurs at all.
struct Branch {
    Index n;
    Vec component;
    double weight;
    bool real_flag;
};

/// The indexed family {(n, Phi_n, weight_n)} of a state at a given time.
/// Branches are reported in basis order; weights sum to one for any
/// normalized input state.
struct BranchDecomposition {
    double time;
    Factorization factorization;
    std::vector<Branch> branches;

    double total_weight() const;
};

BranchDecomposition decompose(const StateVector& psi, const Factorization& f, double time = 0.0);

/// Normalized relative state Phi_n / |Phi_n| of branch n.
/// Throws EmptyBranchError when the branch weight is at or below the floor:
/// the experience does not occur, so there is no state relative to it.
StateVector relative_state(const BranchDecomposition& d, Index n);

struct ObserverCount {
    double expectation;
    double variance;
};

/// Moments of the observable that counts the observer once in every branch.
/// Each branch is an eigenstate with eigenvalue 1, so by completeness of the
/// experience basis this evaluates to (1, 0) for any normalized state.
ObserverCount observer_count(const StateVector& psi, const Factorization& f);

} // namespace relstate
