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

#include "relstate/temporal_logic.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <set>
#include <system_error>
#include <utility>

#include "relstate/format.hpp"

namespace relstate {

Tense classify_tense(const ExperienceProposition& e, const Perspective& p) {
    if (e.t < p.t0()) {
        return Tense::past;
    }
    if (e.t == p.t0()) {
        return Tense::present;
    }
    return Tense::future;
}

History History::of(std::vector<ExperienceProposition> events) {
    std::sort(events.begin(), events.end(), [](const auto& a, const auto& b) {
        return a.t < b.t || (a.t == b.t && a.n < b.n);
    });
    History h;
    for (const auto& e : events) {
        if (e.n < 0) {
            throw RangeError("history: negative experience index");
        }
        if (!h.events_.empty() && h.events_.back().t == e.t) {
            if (h.events_.back().n == e.n) {
                continue;  // repeated event, conjunction is idempotent
            }
            throw RangeError("history: two different events at time " + format_double(e.t));
        }
        h.events_.push_back(e);
    }
    return h;
}

std::optional<History> History::merged(const History& a, const History& b) {
    History out;
    auto ia = a.events_.begin();
    auto ib = b.events_.begin();
    while (ia != a.events_.end() || ib != b.events_.end()) {
        if (ib == b.events_.end() || (ia != a.events_.end() && ia->t < ib->t)) {
            out.events_.push_back(*ia++);
        } else if (ia == a.events_.end() || ib->t < ia->t) {
            out.events_.push_back(*ib++);
        } else {
            if (ia->n != ib->n) {
                return std::nullopt;
            }
            out.events_.push_back(*ia);
            ++ia;
            ++ib;
        }
    }
    return out;
}

bool operator<(const History& a, const History& b) {
    return std::lexicographical_compare(
        a.events_.begin(), a.events_.end(), b.events_.begin(), b.events_.end(),
        [](const ExperienceProposition& x, const ExperienceProposition& y) {
            return x.t < y.t || (x.t == y.t && x.n < y.n);
        });
}

bool disjoint(const History& a, const History& b) {
    auto ia = a.events().begin();
    auto ib = b.events().begin();
    while (ia != a.events().end() && ib != b.events().end()) {
        if (ia->t < ib->t) {
            ++ia;
        } else if (ib->t < ia->t) {
            ++ib;
        } else {
            if (ia->n != ib->n) {
                return true;
            }
            ++ia;
            ++ib;
        }
    }
    return false;
}

TruthValue history_truth(const History& h, const StateVector& psi_t0,
                         const Dynamics& dynamics, const Perspective& p) {
    const Factorization& f = p.factorization();
    if (psi_t0.dim() != f.dim_total() || dynamics.dim() != f.dim_total()) {
        throw DimMismatchError("history truth: dimensions do not match factorization");
    }

    std::vector<ExperienceProposition> future;
    for (const auto& e : h.events()) {
        if (e.n >= f.dim_s()) {
            throw RangeError("history truth: experience index out of basis range");
        }
        if (classify_tense(e, p) == Tense::future) {
            future.push_back(e);
            continue;
        }
        const auto it = p.record().find(e.t);
        if (it == p.record().end()) {
            throw RecordGapError("history truth: no memory record at time " +
                                 format_double(e.t));
        }
        if (it->second != e.n) {
            return TruthValue::checked(0.0);
        }
    }
    if (future.empty()) {
        return TruthValue::checked(1.0);
    }

    Vec v = project_experience(psi_t0.amps(), f, p.n());
    const double weight_n = v.squaredNorm();
    if (weight_n <= kPruneEpsilon) {
        throw EmptyPerspectiveError("history truth: perspective branch carries no weight");
    }
    double t_prev = p.t0();
    for (const auto& e : future) {
        v = dynamics.propagate(v, t_prev, e.t);
        v = project_experience(v, f, e.n);
        t_prev = e.t;
    }
    // Projectors contract and the propagation is norm-preserving, so the
    // quotient is bounded by 1 up to roundoff.
    return TruthValue::checked(v.squaredNorm() / weight_n);
}

TruthValue history_truth(const History& h, const StateVector& psi_t0,
                         const Operator& hamiltonian, const Perspective& p) {
    return history_truth(h, psi_t0, HamiltonianDynamics(hamiltonian), p);
}

struct Proposition::Node {
    Kind kind;
    ExperienceProposition ev{0, 0.0};
    std::vector<Proposition> kids;
};

Proposition Proposition::event(Index n, double t) {
    if (n < 0) {
        throw RangeError("proposition: negative experience index");
    }
    auto node = std::make_shared<Node>();
    node->kind = Kind::event;
    node->ev = ExperienceProposition{n, t};
    return Proposition(std::move(node));
}

Proposition Proposition::negation(Proposition a) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::negation;
    node->kids.push_back(std::move(a));
    return Proposition(std::move(node));
}

Proposition Proposition::conjunction(Proposition a, Proposition b) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::conjunction;
    node->kids.push_back(std::move(a));
    node->kids.push_back(std::move(b));
    return Proposition(std::move(node));
}

Proposition Proposition::disjunction(Proposition a, Proposition b) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::disjunction;
    node->kids.push_back(std::move(a));
    node->kids.push_back(std::move(b));
    return Proposition(std::move(node));
}

Proposition::Kind Proposition::kind() const noexcept { return node_->kind; }

const ExperienceProposition& Proposition::event_data() const {
    if (node_->kind != Kind::event) {
        throw ContractError("proposition: event_data on a connective node");
    }
    return node_->ev;
}

const Proposition& Proposition::operand(std::size_t i) const {
    if (i >= node_->kids.size()) {
        throw ContractError("proposition: operand index out of range");
    }
    return node_->kids[i];
}

std::size_t Proposition::operand_count() const noexcept { return node_->kids.size(); }

namespace {

class PropositionParser {
  public:
    explicit PropositionParser(std::string_view s) : s_(s) {}

    Proposition parse() {
        Proposition p = parse_disjunction();
        skip_ws();
        if (pos_ != s_.size()) {
            throw ParseError(pos_, "unexpected trailing input");
        }
        return p;
    }

  private:
    std::string_view s_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() &&
               (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n' || s_[pos_] == '\r')) {
            ++pos_;
        }
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* description) {
        if (!eat(c)) {
            throw ParseError(pos_, std::string("expected ") + description);
        }
    }

    Proposition parse_disjunction() {
        Proposition left = parse_conjunction();
        while (eat('|')) {
            left = Proposition::disjunction(std::move(left), parse_conjunction());
        }
        return left;
    }

    Proposition parse_conjunction() {
        Proposition left = parse_factor();
        while (eat('&')) {
            left = Proposition::conjunction(std::move(left), parse_factor());
        }
        return left;
    }

    Proposition parse_factor() {
        skip_ws();
        if (pos_ >= s_.size()) {
            throw ParseError(pos_, "expected 'E(n,t)', '!' or '('");
        }
        const char c = s_[pos_];
        if (c == '!') {
            ++pos_;
            return Proposition::negation(parse_factor());
        }
        if (c == '(') {
            ++pos_;
            Proposition p = parse_disjunction();
            expect(')', "')'");
            return p;
        }
        if (c == 'E') {
            return parse_event();
        }
        throw ParseError(pos_, "expected 'E(n,t)', '!' or '('");
    }

    Proposition parse_event() {
        ++pos_;  // the 'E'
        expect('(', "'(' after 'E'");
        skip_ws();
        unsigned long long n = 0;
        const auto n_result = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), n);
        if (n_result.ec != std::errc() || n_result.ptr == s_.data() + pos_) {
            throw ParseError(pos_, "expected a nonnegative experience index");
        }
        if (n > static_cast<unsigned long long>(std::numeric_limits<int>::max())) {
            throw ParseError(pos_, "experience index too large");
        }
        pos_ = static_cast<std::size_t>(n_result.ptr - s_.data());
        expect(',', "','");
        skip_ws();
        double t = 0.0;
        const auto t_result = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), t);
        if (t_result.ec != std::errc() || t_result.ptr == s_.data() + pos_) {
            throw ParseError(pos_, "expected a decimal time literal");
        }
        pos_ = static_cast<std::size_t>(t_result.ptr - s_.data());
        expect(')', "')'");
        return Proposition::event(static_cast<Index>(n), t);
    }
};

} // namespace

Proposition Proposition::parse(std::string_view text) {
    return PropositionParser(text).parse();
}

namespace {

// Binding strength, loosest first; a child is parenthesized when it binds
// looser than its context requires.
int level_of(Proposition::Kind k) {
    switch (k) {
        case Proposition::Kind::disjunction: return 0;
        case Proposition::Kind::conjunction: return 1;
        case Proposition::Kind::negation: return 2;
        case Proposition::Kind::event: return 3;
    }
    return 3;
}

void render(const Proposition& p, int min_level, std::string& out) {
    const bool parens = level_of(p.kind()) < min_level;
    if (parens) {
        out += '(';
    }
    switch (p.kind()) {
        case Proposition::Kind::event: {
            const auto& e = p.event_data();
            out += "E(";
            out += std::to_string(e.n);
            out += ',';
            out += format_double(e.t);
            out += ')';
            break;
        }
        case Proposition::Kind::negation:
            out += '!';
            render(p.operand(0), 2, out);
            break;
        case Proposition::Kind::conjunction:
            render(p.operand(0), 1, out);
            out += " & ";
            render(p.operand(1), 1, out);
            break;
        case Proposition::Kind::disjunction:
            render(p.operand(0), 0, out);
            out += " | ";
            render(p.operand(1), 0, out);
            break;
    }
    if (parens) {
        out += ')';
    }
}

void check_disjunct_cap(std::size_t count, std::size_t cap) {
    if (count > cap) {
        throw TooManyDisjunctsError("disjunction-of-histories form exceeds " +
                                    std::to_string(cap) + " disjuncts");
    }
}

void dedupe(std::vector<History>& hs) {
    std::sort(hs.begin(), hs.end());
    hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
}

std::vector<History> dnf_node(const Proposition& p, bool negated, Index dim_s, std::size_t cap);

std::vector<History> dnf_union(const Proposition& a, const Proposition& b, bool negated,
                               Index dim_s, std::size_t cap) {
    std::vector<History> out = dnf_node(a, negated, dim_s, cap);
    std::vector<History> right = dnf_node(b, negated, dim_s, cap);
    out.insert(out.end(), std::make_move_iterator(right.begin()),
               std::make_move_iterator(right.end()));
    dedupe(out);
    check_disjunct_cap(out.size(), cap);
    return out;
}

std::vector<History> dnf_product(const Proposition& a, const Proposition& b, bool negated,
                                 Index dim_s, std::size_t cap) {
    const std::vector<History> left = dnf_node(a, negated, dim_s, cap);
    const std::vector<History> right = dnf_node(b, negated, dim_s, cap);
    std::vector<History> out;
    for (const auto& ha : left) {
        for (const auto& hb : right) {
            if (auto m = History::merged(ha, hb)) {
                out.push_back(std::move(*m));
                check_disjunct_cap(out.size(), cap);
            }
        }
    }
    dedupe(out);
    return out;
}

std::vector<History> dnf_node(const Proposition& p, bool negated, Index dim_s,
                              std::size_t cap) {
    switch (p.kind()) {
        case Proposition::Kind::event: {
            const auto& e = p.event_data();
            if (e.n >= dim_s) {
                throw RangeError("proposition: experience index out of basis range");
            }
            std::vector<History> out;
            if (!negated) {
                out.push_back(History::of({e}));
            } else {
                // The denial of one experience is the disjunction of all
                // the others at the same time.
                for (Index m = 0; m < dim_s; ++m) {
                    if (m != e.n) {
                        out.push_back(History::of({ExperienceProposition{m, e.t}}));
                    }
                }
            }
            return out;
        }
        case Proposition::Kind::negation:
            return dnf_node(p.operand(0), !negated, dim_s, cap);
        case Proposition::Kind::conjunction:
            return negated ? dnf_union(p.operand(0), p.operand(1), true, dim_s, cap)
                           : dnf_product(p.operand(0), p.operand(1), false, dim_s, cap);
        case Proposition::Kind::disjunction:
            return negated ? dnf_product(p.operand(0), p.operand(1), true, dim_s, cap)
                           : dnf_union(p.operand(0), p.operand(1), false, dim_s, cap);
    }
    throw ContractError("proposition: unknown node kind");
}

} // namespace

std::string Proposition::text() const {
    std::string out;
    render(*this, 0, out);
    return out;
}

std::vector<History> Proposition::dnf(Index dim_s, std::size_t max_disjuncts) const {
    if (dim_s <= 0) {
        throw RangeError("proposition: basis size must be positive");
    }
    return dnf_node(*this, false, dim_s, max_disjuncts);
}

std::vector<History> refine_disjoint(std::vector<History> disjuncts, Index dim_s,
                                     std::size_t max_disjuncts) {
    dedupe(disjuncts);
    bool pairwise = true;
    for (std::size_t i = 0; i + 1 < disjuncts.size() && pairwise; ++i) {
        for (std::size_t j = i + 1; j < disjuncts.size(); ++j) {
            if (!disjoint(disjuncts[i], disjuncts[j])) {
                pairwise = false;
                break;
            }
        }
    }
    if (pairwise) {
        return disjuncts;
    }

    std::vector<double> grid;
    for (const auto& h : disjuncts) {
        for (const auto& e : h.events()) {
            grid.push_back(e.t);
        }
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    std::set<History> refined;
    for (const auto& h : disjuncts) {
        std::vector<double> missing;
        for (double t : grid) {
            const bool present = std::any_of(h.events().begin(), h.events().end(),
                                             [t](const auto& e) { return e.t == t; });
            if (!present) {
                missing.push_back(t);
            }
        }
        std::size_t completions = 1;
        for (std::size_t k = 0; k < missing.size(); ++k) {
            completions *= static_cast<std::size_t>(dim_s);
            check_disjunct_cap(completions, max_disjuncts);
        }
        std::vector<Index> digits(missing.size(), 0);
        while (true) {
            std::vector<ExperienceProposition> events = h.events();
            for (std::size_t k = 0; k < missing.size(); ++k) {
                events.push_back(ExperienceProposition{digits[k], missing[k]});
            }
            refined.insert(History::of(std::move(events)));
            check_disjunct_cap(refined.size(), max_disjuncts);

            std::size_t k = 0;
            for (; k < digits.size(); ++k) {
                if (++digits[k] < dim_s) {
                    break;
                }
                digits[k] = 0;
            }
            if (k == digits.size()) {
                break;
            }
        }
    }
    return std::vector<History>(refined.begin(), refined.end());
}

TruthValue evaluate(const Proposition& prop, const StateVector& psi_t0,
                    const Dynamics& dynamics, const Perspective& p,
                    const EvalOptions& options) {
    switch (prop.kind()) {
        case Proposition::Kind::event:
            return history_truth(History::of({prop.event_data()}), psi_t0, dynamics, p);
        case Proposition::Kind::negation: {
            const TruthValue inner = evaluate(prop.operand(0), psi_t0, dynamics, p, options);
            return TruthValue::checked(1.0 - inner.value());
        }
        case Proposition::Kind::conjunction:
        case Proposition::Kind::disjunction: {
            std::vector<History> hs =
                prop.dnf(p.factorization().dim_s(), options.max_disjuncts);
            if (hs.empty()) {
                return TruthValue::checked(0.0);
            }
            hs = refine_disjoint(std::move(hs), p.factorization().dim_s(),
                                 options.max_disjuncts);
            double sum = 0.0;
            for (const auto& h : hs) {
                sum += history_truth(h, psi_t0, dynamics, p).value();
            }
            return TruthValue::checked(sum);
        }
    }
    throw ContractError("proposition: unknown node kind");
}

TruthValue evaluate(const Proposition& prop, const StateVector& psi_t0,
                    const Operator& hamiltonian, const Perspective& p,
                    const EvalOptions& options) {
    return evaluate(prop, psi_t0, HamiltonianDynamics(hamiltonian), p, options);
}

} // namespace relstate
