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
#include <vector>

#include "relstate/evolution.hpp"
#include "relstate/relative_state.hpp"

namespace relstate {

/// The internal context from which future statements are graded: which
/// experience N is held now (t0), plus the memory record of experiences at
/// earlier times. The record always contains t0 itself, mapped to N.
class Perspective {
  public:
    Perspective(Factorization f, Index n, double t0, std::map<double, Index> record = {});

    const Factorization& factorization() const noexcept { return f_; }
    Index n() const noexcept { return n_; }
    double t0() const noexcept { return t0_; }
    const std::map<double, Index>& record() const noexcept { return record_; }

  private:
    Factorization f_;
    Index n_;
    double t0_;
    std::map<double, Index> record_;
};

/// A degree of truth in [0,1]. Raw values may exceed the bounds by at most
/// kAlgebraTol (they are quotients of measured quantities); anything worse
/// is a contract violation, anything within tolerance is clamped.
class TruthValue {
  public:
    static TruthValue checked(double raw);
    double value() const noexcept { return v_; }

  private:
    explicit TruthValue(double v) : v_(v) {}
    double v_;
};

/// Degree of truth, from perspective (N, t0), of "my experience at the later
/// time t will be eta_m":
///
///     |<Psi(t)| (Pi_m x I) U(t,t0) (Pi_N x I) |Psi(t0)>|^2
///     --------------------------------------------------------
///     <Psi(t)|(Pi_m x I)|Psi(t)> <Psi(t0)|(Pi_N x I)|Psi(t0)>
///
/// Psi(t) is propagated internally from psi_t0. A 0/0 quotient (target
/// branch empty and numerator vanishing) is defined as 0: the experience is
/// not real at t, so the statement is false.
TruthValue future_truth_value(const StateVector& psi_t0, const Dynamics& dynamics,
                              const Perspective& p, Index m, double t);

/// Convenience overload for constant-Hamiltonian dynamics.
TruthValue future_truth_value(const StateVector& psi_t0, const Operator& h,
                              const Perspective& p, Index m, double t);

/// One truth value per experience index; shares the propagation work
/// across entries.
std::vector<TruthValue> future_truth_table(const StateVector& psi_t0, const Dynamics& dynamics,
                                           const Perspective& p, double t);
std::vector<TruthValue> future_truth_table(const StateVector& psi_t0, const Operator& h,
                                           const Perspective& p, double t);

/// 1 - sum of the truth table. Zero exactly when every projected evolved
/// component is parallel to the matching branch component at t; positive
/// otherwise, never below -kAlgebraTol.
double consistency_defect(const StateVector& psi_t0, const Dynamics& dynamics,
                          const Perspective& p, double t);
double consistency_defect(const StateVector& psi_t0, const Operator& h,
                          const Perspective& p, double t);

/// One sampled experience history: which experience index was drawn at each
/// grid time, plus the per-step truth-table sums (1 minus the consistency
/// defect the sampler renormalized away).
struct SampledRecord {
    std::uint64_t seed;
    std::vector<double> times;
    std::vector<Index> indices;
    std::vector<double> table_sums;

    std::map<double, Index> as_map() const;
};

/// Samples a perceived experience history along the time grid. The first
/// index is drawn from the branch weights of psi_first (the state at
/// times[0]); each later index is drawn from the truth table conditioned on
/// the previously sampled (index, time) pair, renormalized over its nonzero
/// entries. Deterministic for a fixed seed.
SampledRecord sample_record(const StateVector& psi_first, const Dynamics& dynamics,
                            const Factorization& f, const std::vector<double>& times,
                            std::uint64_t seed);
SampledRecord sample_record(const StateVector& psi_first, const Operator& h,
                            const Factorization& f, const std::vector<double>& times,
                            std::uint64_t seed);

} // namespace relstate
