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

#include "relstate/evolution.hpp"

#include <cmath>
#include <utility>

namespace relstate {

namespace {

void require_hermitian(const Operator& h, const char* where) {
    if (h.role() != OpRole::hermitian) {
        throw RoleError(std::string(where) + ": Hamiltonian role must be hermitian");
    }
}

// Self-adjoint eigendecomposition; eigenvectors columnwise in V.
std::pair<Eigen::VectorXd, Mat> eigensystem(const Operator& h) {
    Eigen::SelfAdjointEigenSolver<Mat> solver(h.entries());
    if (solver.info() != Eigen::Success) {
        throw ContractError("eigendecomposition of Hamiltonian failed to converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

Mat spectral_exponential(const Eigen::VectorXd& lambda, const Mat& v, double dt) {
    Vec phases(lambda.size());
    for (Index k = 0; k < lambda.size(); ++k) {
        phases(k) = std::polar(1.0, -lambda(k) * dt);
    }
    return v * phases.asDiagonal() * v.adjoint();
}

} // namespace

Propagator propagator(const Operator& h, double dt) {
    require_hermitian(h, "propagator");
    const auto [lambda, v] = eigensystem(h);
    Operator u = Operator::from(spectral_exponential(lambda, v, dt), OpRole::unitary);
    return Propagator{h, dt, std::move(u)};
}

StateVector evolve(const StateVector& psi, const Operator& h, double t0, double t) {
    require_hermitian(h, "evolve");
    if (psi.dim() != h.dim()) {
        throw DimMismatchError("evolve: state and Hamiltonian dimensions differ");
    }
    HamiltonianDynamics dyn(h);
    return make_state(dyn.propagate(psi.amps(), t0, t), false);
}

HamiltonianDynamics::HamiltonianDynamics(Operator h) : h_(std::move(h)) {
    require_hermitian(h_, "HamiltonianDynamics");
    auto [lambda, v] = eigensystem(h_);
    eigenvalues_ = std::move(lambda);
    eigenvectors_ = std::move(v);
}

Vec HamiltonianDynamics::propagate(const Vec& v, double t0, double t) const {
    if (v.size() != dim()) {
        throw DimMismatchError("propagate: vector dimension differs from Hamiltonian");
    }
    const double dt = t - t0;
    if (dt == 0.0) {
        return v;
    }
    Vec coeffs = eigenvectors_.adjoint() * v;
    for (Index k = 0; k < coeffs.size(); ++k) {
        coeffs(k) *= std::polar(1.0, -eigenvalues_(k) * dt);
    }
    return eigenvectors_ * coeffs;
}

double HamiltonianDynamics::energy(const Vec& v) const {
    return v.dot(h_.entries() * v).real();
}

std::shared_ptr<const Dynamics> make_dynamics(const Operator& h) {
    return std::make_shared<HamiltonianDynamics>(h);
}

} // namespace relstate
