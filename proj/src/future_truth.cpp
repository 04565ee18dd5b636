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

#include "relstate/future_truth.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "relstate/rng.hpp"

namespace relstate {

Perspective::Perspective(Factorization f, Index n, double t0, std::map<double, Index> record)
    : f_(std::move(f)), n_(n), t0_(t0), record_(std::move(record)) {
    if (n_ < 0 || n_ >= f_.dim_s()) {
        throw RangeError("perspective: experience index out of basis range");
    }
    auto it = record_.find(t0_);
    if (it == record_.end()) {
        record_[t0_] = n_;
    } else if (it->second != n_) {
        throw RangeError("perspective: record at t0 contradicts N");
    }
    for (const auto& [t, idx] : record_) {
        if (t > t0_) {
            throw RangeError("perspective: record time after t0");
        }
        if (idx < 0 || idx >= f_.dim_s()) {
            throw RangeError("perspective: recorded experience index out of basis range");
        }
    }
}

TruthValue TruthValue::checked(double raw) {
    if (!(raw >= -kAlgebraTol && raw <= 1.0 + kAlgebraTol)) {
        throw ContractError("truth value " + std::to_string(raw) +
                            " outside [0,1] beyond tolerance");
    }
    return TruthValue(std::min(1.0, std::max(0.0, raw)));
}

namespace {

// Shared state of one (psi_t0, perspective, t) query: the evolved universal
// state's components and the evolved perspective component's components.
struct TableContext {
    std::vector<Vec> phi_t;  // Phi_m(t), components of Psi(t)
    std::vector<Vec> chi_t;  // components of U(t,t0) (Pi_N x I) Psi(t0)
    double weight_n;         // <Psi(t0)|(Pi_N x I)|Psi(t0)>
};

TableContext make_context(const StateVector& psi_t0, const Dynamics& dynamics,
                          const Perspective& p, double t) {
    const Factorization& f = p.factorization();
    if (psi_t0.dim() != f.dim_total()) {
        throw DimMismatchError("future truth: state does not match factorization");
    }
    if (dynamics.dim() != f.dim_total()) {
        throw DimMismatchError("future truth: dynamics does not match factorization");
    }
    if (!(t > p.t0())) {
        throw RangeError("future truth: target time must lie after t0");
    }
    const Vec projected = project_experience(psi_t0.amps(), f, p.n());
    const double weight_n = projected.squaredNorm();
    if (weight_n <= kPruneEpsilon) {
        throw EmptyPerspectiveError("future truth: perspective branch " +
                                    std::to_string(p.n()) + " carries no weight");
    }
    const Vec psi_t = dynamics.propagate(psi_t0.amps(), p.t0(), t);
    const Vec chi = dynamics.propagate(projected, p.t0(), t);
    return TableContext{experience_components(psi_t, f), experience_components(chi, f), weight_n};
}

double entry_value(const TableContext& ctx, Index m) {
    const Vec& phi_m = ctx.phi_t[static_cast<std::size_t>(m)];
    const Vec& chi_m = ctx.chi_t[static_cast<std::size_t>(m)];
    const double denom_m = phi_m.squaredNorm();
    const double numer = std::norm(phi_m.dot(chi_m));
    if (denom_m <= kPruneEpsilon) {
        // Branch m is not real at t. The numerator is Cauchy-Schwarz bounded
        // by denom_m, so it must vanish too; then the statement is false.
        if (numer <= kPruneEpsilon) {
            return 0.0;
        }
        throw SingularBranchError("future truth: branch " + std::to_string(m) +
                                  " has vanishing weight but nonvanishing numerator");
    }
    return numer / (denom_m * ctx.weight_n);
}

} // namespace

TruthValue future_truth_value(const StateVector& psi_t0, const Dynamics& dynamics,
                              const Perspective& p, Index m, double t) {
    if (m < 0 || m >= p.factorization().dim_s()) {
        throw RangeError("future truth: target experience index out of basis range");
    }
    const TableContext ctx = make_context(psi_t0, dynamics, p, t);
    return TruthValue::checked(entry_value(ctx, m));
}

TruthValue future_truth_value(const StateVector& psi_t0, const Operator& h,
                              const Perspective& p, Index m, double t) {
    return future_truth_value(psi_t0, HamiltonianDynamics(h), p, m, t);
}

std::vector<TruthValue> future_truth_table(const StateVector& psi_t0, const Dynamics& dynamics,
                                           const Perspective& p, double t) {
    const TableContext ctx = make_context(psi_t0, dynamics, p, t);
    std::vector<TruthValue> table;
    table.reserve(ctx.phi_t.size());
    for (Index m = 0; m < p.factorization().dim_s(); ++m) {
        table.push_back(TruthValue::checked(entry_value(ctx, m)));
    }
    return table;
}

std::vector<TruthValue> future_truth_table(const StateVector& psi_t0, const Operator& h,
                                           const Perspective& p, double t) {
    return future_truth_table(psi_t0, HamiltonianDynamics(h), p, t);
}

double consistency_defect(const StateVector& psi_t0, const Dynamics& dynamics,
                          const Perspective& p, double t) {
    const auto table = future_truth_table(psi_t0, dynamics, p, t);
    double sum = 0.0;
    for (const auto& tv : table) {
        sum += tv.value();
    }
    const double defect = 1.0 - sum;
    if (defect < -kAlgebraTol) {
        throw ContractError("consistency defect " + std::to_string(defect) +
                            " below -tolerance: table sum exceeds 1");
    }
    return defect;
}

double consistency_defect(const StateVector& psi_t0, const Operator& h,
                          const Perspective& p, double t) {
    return consistency_defect(psi_t0, HamiltonianDynamics(h), p, t);
}

std::map<double, Index> SampledRecord::as_map() const {
    std::map<double, Index> m;
    for (std::size_t k = 0; k < times.size(); ++k) {
        m[times[k]] = indices[k];
    }
    return m;
}

SampledRecord sample_record(const StateVector& psi_first, const Dynamics& dynamics,
                            const Factorization& f, const std::vector<double>& times,
                            std::uint64_t seed) {
    if (times.empty()) {
        throw RangeError("sample_record: empty time grid");
    }
    for (std::size_t k = 1; k < times.size(); ++k) {
        if (!(times[k] > times[k - 1])) {
            throw RangeError("sample_record: times must be strictly increasing");
        }
    }

    SampleRng rng(seed);
    SampledRecord rec;
    rec.seed = seed;
    rec.times = times;

    // First index: drawn from the branch weights at times[0].
    const BranchDecomposition d0 = decompose(psi_first, f, times[0]);
    std::vector<double> weights;
    weights.reserve(d0.branches.size());
    bool any = false;
    for (const auto& b : d0.branches) {
        weights.push_back(b.real_flag ? b.weight : 0.0);
        any = any || b.real_flag;
    }
    if (!any) {
        throw DeadEndError("sample_record: no real branch at the initial time");
    }
    Index n = static_cast<Index>(rng.categorical(weights));
    rec.indices.push_back(n);
    double sum0 = 0.0;
    for (double w : weights) {
        sum0 += w;
    }
    rec.table_sums.push_back(sum0);

    // Each later step restarts the truth-value formula from the previously
    // sampled (index, time) pair; the universal state keeps evolving
    // unconditionally underneath.
    Vec state = psi_first.amps();
    for (std::size_t k = 1; k < times.size(); ++k) {
        const double t_prev = times[k - 1];
        const double t_now = times[k];
        const Perspective p(f, n, t_prev);
        const auto table =
            future_truth_table(make_state(state, true), dynamics, p, t_now);
        std::vector<double> probs;
        probs.reserve(table.size());
        double s = 0.0;
        for (const auto& tv : table) {
            probs.push_back(tv.value());
            s += tv.value();
        }
        if (s <= 0.0) {
            throw DeadEndError("sample_record: all-zero truth table at t = " +
                               std::to_string(t_now));
        }
        // categorical() renormalizes by the table sum; s < 1 is recorded as
        // the diagnostic for this step.
        n = static_cast<Index>(rng.categorical(probs));
        rec.indices.push_back(n);
        rec.table_sums.push_back(s);
        state = dynamics.propagate(state, t_prev, t_now);
    }
    return rec;
}

SampledRecord sample_record(const StateVector& psi_first, const Operator& h,
                            const Factorization& f, const std::vector<double>& times,
                            std::uint64_t seed) {
    HamiltonianDynamics dyn(h);
    return sample_record(psi_first, dyn, f, times, seed);
}

} // namespace relstate
