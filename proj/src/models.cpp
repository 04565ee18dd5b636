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

#include "relstate/models.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "relstate/format.hpp"

namespace relstate {

namespace {

std::vector<double> default_cat_grid(Index bins, double t_max) {
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(bins) + 1);
    for (Index j = 0; j <= bins; ++j) {
        grid.push_back(static_cast<double>(j) * t_max / static_cast<double>(bins));
    }
    return grid;
}

} // namespace

CatModel::CatModel(double gamma, Index bins, double t_max)
    : CatModel(gamma, bins, t_max, default_cat_grid(bins, t_max)) {}

CatModel::CatModel(double gamma, Index bins, double t_max, std::vector<double> grid)
    : gamma_(gamma), bins_(bins), t_max_(t_max), grid_(std::move(grid)) {
    if (!(gamma_ > 0.0)) {
        throw RangeError("cat model: decay rate must be positive");
    }
    if (bins_ < 1) {
        throw RangeError("cat model: at least one observation bin required");
    }
    if (!(t_max_ > 0.0)) {
        throw RangeError("cat model: watch window must have positive length");
    }
    if (grid_.empty()) {
        throw RangeError("cat model: empty time grid");
    }
    for (std::size_t k = 0; k < grid_.size(); ++k) {
        if (grid_[k] < 0.0 || grid_[k] > t_max_) {
            throw RangeError("cat model: grid time " + format_double(grid_[k]) +
                             " outside [0, t_max]");
        }
        if (k > 0 && !(grid_[k] > grid_[k - 1])) {
            throw RangeError("cat model: grid times must be strictly increasing");
        }
    }
}

double CatModel::bin_edge(Index j) const {
    if (j < 0 || j > bins_) {
        throw RangeError("cat model: bin edge index out of range");
    }
    return static_cast<double>(j) * t_max_ / static_cast<double>(bins_);
}

StateVector cat_state_at(const CatModel& m, double t) {
    if (t < 0.0 || t > m.t_max()) {
        throw RangeError("cat state: time " + format_double(t) + " outside [0, t_max]");
    }
    const Index dim = (m.bins() + 1) * 2;
    Vec amps = Vec::Zero(dim);
    const double g = m.gamma();
    amps(0) = std::exp(-g * t);
    for (Index j = 1; j <= m.bins(); ++j) {
        const double lo = m.bin_edge(j - 1);
        const double hi = std::min(m.bin_edge(j), t);
        if (hi <= lo) {
            break;  // later bins have not begun
        }
        const double w = std::exp(-2.0 * g * lo) - std::exp(-2.0 * g * hi);
        amps(j * 2 + 1) = std::sqrt(std::max(0.0, w));
    }
    // The bin weights telescope against the survival weight; assert rather
    // than renormalize.
    return make_state(amps, false);
}

Factorization cat_factorization(const CatModel& m) {
    return Factorization::computational(m.bins() + 1, 2);
}

std::vector<std::string> cat_labels(const CatModel& m) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(m.bins()) + 1);
    labels.emplace_back("alive");
    if (m.bins() == 1) {
        labels.emplace_back("dead");
        return labels;
    }
    for (Index j = 1; j <= m.bins(); ++j) {
        labels.push_back("dead_bin_" + std::to_string(j));
    }
    return labels;
}

Vec CatDynamics::propagate(const Vec& v, double t0, double t) const {
    if (v.size() != dim()) {
        throw DimMismatchError("cat flow: vector dimension mismatch");
    }
    if (t < t0) {
        throw RangeError("cat flow: records are irreversible, t must not precede t0");
    }
    if (t0 < 0.0 || t > model_.t_max()) {
        throw RangeError("cat flow: interval outside the watch window [0, t_max]");
    }
    if (t == t0) {
        return v;
    }
    Vec out = v;
    const Complex a = v(0);
    const double g = model_.gamma();
    out(0) = a * std::exp(-g * (t - t0));
    if (a == Complex(0.0, 0.0)) {
        return out;
    }
    for (Index j = 1; j <= model_.bins(); ++j) {
        const double lo = std::max(model_.bin_edge(j - 1), t0);
        const double hi = std::min(model_.bin_edge(j), t);
        if (hi <= lo) {
            continue;
        }
        const double w = std::exp(-2.0 * g * (lo - t0)) - std::exp(-2.0 * g * (hi - t0));
        out(j * 2 + 1) += a * std::sqrt(std::max(0.0, w));
    }
    return out;
}

IdealMeasurementModel::IdealMeasurementModel(std::vector<Complex> coefficients,
                                             double interaction_time)
    : c_(std::move(coefficients)), interaction_time_(interaction_time) {
    if (c_.empty()) {
        throw RangeError("ideal measurement: at least one outcome required");
    }
    if (!(interaction_time_ > 0.0)) {
        throw RangeError("ideal measurement: interaction time must be positive");
    }
    double total = 0.0;
    for (const Complex& ck : c_) {
        total += std::norm(ck);
    }
    if (std::abs(total - 1.0) > kAlgebraTol) {
        throw NotNormalizedError("ideal measurement: outcome weights sum to " +
                                 format_double(total) + ", expected 1");
    }
}

Operator ideal_measurement_hamiltonian(const IdealMeasurementModel& m) {
    const Index k_count = m.outcomes();
    const Index dim = (k_count + 1) * k_count;
    const double omega = std::numbers::pi / (2.0 * m.interaction_time());
    Mat h = Mat::Zero(dim, dim);
    // One independent rotation plane per outcome k: from (ready, s_k) at
    // flat k-1 to (record k, s_k) at flat k*K + (k-1).
    for (Index k = 1; k <= k_count; ++k) {
        const Index p = k - 1;
        const Index q = k * k_count + (k - 1);
        h(p, q) = Complex(0.0, -omega);
        h(q, p) = Complex(0.0, omega);
    }
    return Operator::from(std::move(h), OpRole::hermitian);
}

StateVector ideal_measurement_initial(const IdealMeasurementModel& m) {
    return ideal_measurement_state(m, 0.0);
}

StateVector ideal_measurement_state(const IdealMeasurementModel& m, double t) {
    const Index k_count = m.outcomes();
    const Index dim = (k_count + 1) * k_count;
    const double theta = std::numbers::pi * t / (2.0 * m.interaction_time());
    Vec amps = Vec::Zero(dim);
    for (Index k = 1; k <= k_count; ++k) {
        const Complex ck = m.coefficients()[static_cast<std::size_t>(k - 1)];
        amps(k - 1) = ck * std::cos(theta);
        amps(k * k_count + (k - 1)) = ck * std::sin(theta);
    }
    return make_state(amps, false);
}

Factorization ideal_measurement_factorization(const IdealMeasurementModel& m) {
    return Factorization::computational(m.outcomes() + 1, m.outcomes());
}

std::vector<std::string> ideal_measurement_labels(const IdealMeasurementModel& m) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(m.outcomes()) + 1);
    labels.emplace_back("ready");
    for (Index k = 1; k <= m.outcomes(); ++k) {
        labels.push_back("outcome_" + std::to_string(k));
    }
    return labels;
}

Operator pauli_x() {
    Mat x(2, 2);
    x << Complex(0.0, 0.0), Complex(1.0, 0.0), Complex(1.0, 0.0), Complex(0.0, 0.0);
    return Operator::from(std::move(x), OpRole::hermitian);
}

Operator rabi_hamiltonian(double omega) {
    Mat h = omega * pauli_x().entries();
    return Operator::from(std::move(h), OpRole::hermitian);
}

Operator rabi_propagator_reference(double omega, double t) {
    const double c = std::cos(omega * t);
    const double s = std::sin(omega * t);
    Mat u(2, 2);
    u << Complex(c, 0.0), Complex(0.0, -s), Complex(0.0, -s), Complex(c, 0.0);
    return Operator::from(std::move(u), OpRole::unitary);
}

} // namespace relstate
