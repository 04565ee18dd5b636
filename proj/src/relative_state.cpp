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

#include "relstate/relative_state.hpp"

#include <string>
#include <utility>

namespace relstate {

double BranchDecomposition::total_weight() const {
    double sum = 0.0;
    for (const auto& b : branches) {
        sum += b.weight;
    }
    return sum;
}

BranchDecomposition decompose(const StateVector& psi, const Factorization& f, double time) {
    if (psi.dim() != f.dim_total()) {
        throw DimMismatchError("decompose: state dimension " + std::to_string(psi.dim()) +
                               " does not match factorization " + std::to_string(f.dim_total()));
    }
    std::vector<Branch> branches;
    branches.reserve(static_cast<std::size_t>(f.dim_s()));
    for (Index n = 0; n < f.dim_s(); ++n) {
        Vec phi = experience_component(psi.amps(), f, n);
        const double w = phi.squaredNorm();
        branches.push_back(Branch{n, std::move(phi), w, w > kPruneEpsilon});
    }
    return BranchDecomposition{time, f, std::move(branches)};
}

StateVector relative_state(const BranchDecomposition& d, Index n) {
    if (n < 0 || n >= static_cast<Index>(d.branches.size())) {
        throw RangeError("relative_state: branch index out of range");
    }
    const Branch& b = d.branches[static_cast<std::size_t>(n)];
    if (b.weight <= kPruneEpsilon) {
        throw EmptyBranchError("relative_state: experience " + std::to_string(n) +
                               " does not occur (weight below pruning floor)");
    }
    return make_state(b.component, true);
}

ObserverCount observer_count(const StateVector& psi, const Factorization& f) {
    const BranchDecomposition d = decompose(psi, f);
    // Every branch carries observer number 1, so both moments reduce to the
    // weight sum and the variance to m2 - m1^2.
    double m1 = 0.0;
    double m2 = 0.0;
    for (const auto& b : d.branches) {
        m1 += 1.0 * b.weight;
        m2 += 1.0 * 1.0 * b.weight;
    }
    return ObserverCount{m1, m2 - m1 * m1};
}

} // namespace relstate
