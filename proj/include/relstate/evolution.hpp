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

#include <memory>

#include "relstate/hilbert.hpp"

namespace relstate {

/// Exact Schroedinger propagator for a constant Hamiltonian, hbar = 1.
/// U is built spectrally: U = V diag(exp(-i lambda dt)) V'.
struct Propagator {
    Operator hamiltonian;
    double duration;
    Operator unitary;
};

Propagator propagator(const Operator& h, double dt);

/// exp(-iH(t-t0)) psi. Reversible: t < t0 is allowed.
StateVector evolve(const StateVector& psi, const Operator& h, double t0, double t);

/// Two-time linear propagation of arbitrary vectors. Constant-Hamiltonian
/// dynamics is the standard implementation; built-in models may supply
/// closed-form flows instead.
class Dynamics {
  public:
    virtual ~Dynamics() = default;
    virtual Index dim() const = 0;
    virtual Vec propagate(const Vec& v, double t0, double t) const = 0;
};

/// Spectral-method dynamics for a constant hermitian Hamiltonian.
/// The eigendecomposition is computed once and reused for every call.
class HamiltonianDynamics final : public Dynamics {
  public:
    explicit HamiltonianDynamics(Operator h);

    Index dim() const override { return h_.dim(); }
    Vec propagate(const Vec& v, double t0, double t) const override;

    const Operator& hamiltonian() const { return h_; }
    /// Real expectation <v|H|v> (energy for normalized v).
    double energy(const Vec& v) const;

  private:
    Operator h_;
    Eigen::VectorXd eigenvalues_;
    Mat eigenvectors_;
};

std::shared_ptr<const Dynamics> make_dynamics(const Operator& h);

} // namespace relstate
