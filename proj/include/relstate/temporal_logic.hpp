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
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relstate/future_truth.hpp"

namespace relstate {

enum class Tense { past, present, future };

/// One dated elementary statement: "my experience at time t is eta_n".
struct ExperienceProposition {
    Index n;
    double t;

    friend bool operator==(const ExperienceProposition& a, const ExperienceProposition& b) {
        return a.n == b.n && a.t == b.t;
    }
};

/// Tense is decided by exact comparison against the perspective's t0; times
/// are expected to come from one shared discrete grid.
Tense classify_tense(const ExperienceProposition& e, const Perspective& p);

/// A conjunction of dated events holding at most one event per time, kept
/// sorted by strictly increasing time. The empty history is the vacuous
/// conjunction with truth 1.
class History {
  public:
    History() = default;
    static History of(std::vector<ExperienceProposition> events);

    /// Merged conjunction of a and b; nullopt when they assign different
    /// indices at a shared time (the merge is identically false).
    static std::optional<History> merged(const History& a, const History& b);

    const std::vector<ExperienceProposition>& events() const noexcept { return events_; }
    bool empty() const noexcept { return events_.empty(); }

    friend bool operator==(const History& a, const History& b) {
        return a.events_ == b.events_;
    }
    friend bool operator<(const History& a, const History& b);

  private:
    std::vector<ExperienceProposition> events_;
};

/// Two histories exclude each other iff they assign different indices at
/// some shared time.
bool disjoint(const History& a, const History& b);

/// Truth of one history from perspective p. Events dated at or before t0
/// are gated against the memory record: each match contributes factor 1 and
/// any mismatch makes the whole history false. An event dated at an
/// unrecorded past time cannot be graded and raises RecordGapError. The
/// future segment (m_1,t_1),...,(m_k,t_k) takes the chain value
///
///   ||(Pi_{m_k} x I) U(t_k,t_{k-1}) ... (Pi_{m_1} x I) U(t_1,t0) psi_N||^2
///   ---------------------------------------------------------------------
///                              ||psi_N||^2
///
/// with psi_N = (Pi_N x I) Psi(t0), which for a single future event agrees
/// with the quotient of future_truth_value exactly when the projected
/// evolved component is parallel to the branch component.
TruthValue history_truth(const History& h, const StateVector& psi_t0,
                         const Dynamics& dynamics, const Perspective& p);
TruthValue history_truth(const History& h, const StateVector& psi_t0,
                         const Operator& hamiltonian, const Perspective& p);

/// A proposition over dated experience statements, stored as the connective
/// tree (kept for display) from which the disjunction-of-histories normal
/// form is derived on demand.
class Proposition {
  public:
    enum class Kind { event, negation, conjunction, disjunction };

    static Proposition event(Index n, double t);
    static Proposition negation(Proposition a);
    static Proposition conjunction(Proposition a, Proposition b);
    static Proposition disjunction(Proposition a, Proposition b);

    /// Parses the text syntax: `E(n,t)` for events, `!` (negation, binds
    /// tightest), `&` (conjunction), `|` (disjunction), parentheses; n is a
    /// nonnegative integer and t a decimal literal. Malformed input raises
    /// ParseError carrying the byte offset of the defect.
    static Proposition parse(std::string_view text);

    Kind kind() const noexcept;
    const ExperienceProposition& event_data() const;
    const Proposition& operand(std::size_t i) const;
    std::size_t operand_count() const noexcept;

    /// Canonical text rendering with minimal parentheses.
    std::string text() const;

    /// Disjunctive normal form over an experience basis of size dim_s.
    /// Negations are eliminated structurally: a negated event at time t
    /// becomes the disjunction of the other dim_s - 1 events at t, and De
    /// Morgan's laws push negation through the connectives. Conjunctions of
    /// histories merge event lists; merges that conflict at a shared time
    /// are identically false and are dropped. Exceeding max_disjuncts
    /// raises TooManyDisjunctsError.
    std::vector<History> dnf(Index dim_s, std::size_t max_disjuncts) const;

  private:
    struct Node;
    explicit Proposition(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct EvalOptions {
    std::size_t max_disjuncts = 4096;
};

/// Returns a pairwise disjoint set of histories covering the same
/// disjunction. Input that is already pairwise disjoint (after removing
/// exact duplicates) passes through unchanged; otherwise every history is
/// split over the full experience basis at the union of all mentioned
/// times, and identical completions are kept once. Exceeding max_disjuncts
/// raises TooManyDisjunctsError.
std::vector<History> refine_disjoint(std::vector<History> disjuncts, Index dim_s,
                                     std::size_t max_disjuncts);

/// Truth value of a proposition from perspective p. Events and the
/// conjunction/disjunction structure evaluate as the sum of history_truth
/// over a pairwise disjoint normal form (refined first when needed);
/// negation evaluates as 1 minus the truth of its operand.
TruthValue evaluate(const Proposition& prop, const StateVector& psi_t0,
                    const Dynamics& dynamics, const Perspective& p,
                    const EvalOptions& options = {});
TruthValue evaluate(const Proposition& prop, const StateVector& psi_t0,
                    const Operator& hamiltonian, const Perspective& p,
                    const EvalOptions& options = {});

} // namespace relstate
