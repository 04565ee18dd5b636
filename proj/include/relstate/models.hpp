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

#include "relstate/evolution.hpp"
#include "relstate/hilbert.hpp"

namespace relstate {

/// A two-level system decaying at rate gamma, watched continuously by an
/// observer who bins the decay time: the observer factor has one "still
/// alive" record state plus one "saw it die in bin j" state per bin. Bins
/// partition [0, t_max] uniformly.
class CatModel {
  public:
    CatModel(double gamma, Index bins, double t_max);
    CatModel(double gamma, Index bins, double t_max, std::vector<double> grid);

    double gamma() const noexcept { return gamma_; }
    Index bins() const noexcept { return bins_; }
    double t_max() const noexcept { return t_max_; }
    const std::vector<double>& grid() const noexcept { return grid_; }

    /// Boundary j of the uniform bin partition, j in [0, bins].
    double bin_edge(Index j) const;

  private:
    double gamma_;
    Index bins_;
    double t_max_;
    std::vector<double> grid_;
};

/// The watched-decay state at time t: amplitude e^{-gamma t} on
/// (record "alive", system alive) and amplitude
/// sqrt(e^{-2 gamma t_{j-1}} - e^{-2 gamma min(t_j, t)}) on
/// (record "died in bin j", system dead) for every bin that has begun.
/// The bin weights telescope, so the state is normalized exactly.
StateVector cat_state_at(const CatModel& m, double t);

/// Observer-record factor first: dim_S = bins + 1 (index 0 = "alive",
/// index j = "died in bin j"), dim_E = 2 (system alive/dead).
Factorization cat_factorization(const CatModel& m);

/// Experience labels matching the factorization indices: "alive" then
/// "dead" (single bin) or "dead_bin_j".
std::vector<std::string> cat_labels(const CatModel& m);

/// Forward flow of the watched decay. The (alive record, alive system)
/// amplitude decays by e^{-gamma (t - t0)} and the lost weight is deposited
/// on the death-record states of the bins covering (t0, t]; every other
/// basis state is a frozen record and is left untouched. The flow is
/// norm-preserving on states carrying no death amplitude for bins still
/// open at t0, which holds for the model's trajectory and its experience
/// projections whenever t0 lies on a bin boundary.
class CatDynamics final : public Dynamics {
  public:
    explicit CatDynamics(CatModel m) : model_(std::move(m)) {}

    Index dim() const noexcept override { return (model_.bins() + 1) * 2; }
    Vec propagate(const Vec& v, double t0, double t) const override;

    const CatModel& model() const noexcept { return model_; }

  private:
    CatModel model_;
};

/// An interaction that copies K pointer states of the measured system into
/// K observer record states over an interaction time T: the ready state
/// |eta_0>|s_k> rotates into |eta_k>|s_k> for every k.
class IdealMeasurementModel {
  public:
    IdealMeasurementModel(std::vector<Complex> coefficients, double interaction_time);

    const std::vector<Complex>& coefficients() const noexcept { return c_; }
    double interaction_time() const noexcept { return interaction_time_; }
    Index outcomes() const noexcept { return static_cast<Index>(c_.size()); }

  private:
    std::vector<Complex> c_;
    double interaction_time_;
};

/// Hermitian generator of the copying interaction: a pi/(2T) rotation on
/// each span{|eta_0>|s_k>, |eta_k>|s_k>} plane, chosen so the t=T endpoint
/// is reached exactly and without extra phases.
Operator ideal_measurement_hamiltonian(const IdealMeasurementModel& m);

/// |eta_0> (x) sum_k c_k |s_k>.
StateVector ideal_measurement_initial(const IdealMeasurementModel& m);

/// Closed form of the interaction at angle theta = pi t / (2T):
/// sum_k c_k (cos(theta) |eta_0> + sin(theta) |eta_k>) |s_k>. Serves as an
/// oracle for evolving the initial state under the generator.
StateVector ideal_measurement_state(const IdealMeasurementModel& m, double t);

/// dim_S = outcomes + 1 (ready plus one record per outcome), dim_E = outcomes.
Factorization ideal_measurement_factorization(const IdealMeasurementModel& m);

/// "ready", "outcome_1", ..., "outcome_K".
std::vector<std::string> ideal_measurement_labels(const IdealMeasurementModel& m);

Operator pauli_x();

/// omega * sigma_x on a two-level system.
Operator rabi_hamiltonian(double omega);

/// Closed form cos(omega t) I - i sin(omega t) sigma_x of
/// exp(-i omega sigma_x t); analytic oracle for the spectral propagator.
Operator rabi_propagator_reference(double omega, double t);

} // namespace relstate
