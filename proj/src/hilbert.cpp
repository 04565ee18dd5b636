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

#include "relstate/hilbert.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace relstate {

namespace {

using RowMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// View a flat S-major vector as a dim_s x dim_e matrix, row n = <n|_S slice.
Eigen::Map<const RowMat> as_matrix(const Vec& psi, const Factorization& f) {
    return Eigen::Map<const RowMat>(psi.data(), f.dim_s(), f.dim_e());
}

void check_dims(Index got, Index want, const char* where) {
    if (got != want) {
        throw DimMismatchError(std::string(where) + ": dimension " + std::to_string(got) +
                               " does not match " + std::to_string(want));
    }
}

} // namespace

StateVector StateVector::from(Vec amplitudes, bool normalize) {
    if (amplitudes.size() == 0) {
        throw DimMismatchError("make_state: empty amplitude sequence");
    }
    const double sq = amplitudes.squaredNorm();
    if (normalize) {
        if (sq == 0.0) {
            throw ZeroVectorError("make_state: cannot normalize the zero vector");
        }
        amplitudes /= std::sqrt(sq);
    } else if (std::abs(sq - 1.0) > kAlgebraTol) {
        throw NotNormalizedError("make_state: squared norm " + std::to_string(sq) +
                                 " is not 1 within tolerance");
    }
    return StateVector(std::move(amplitudes));
}

StateVector StateVector::basis(Index dim, Index k) {
    if (k < 0 || k >= dim) {
        throw RangeError("basis state index out of range");
    }
    Vec v = Vec::Zero(dim);
    v(k) = 1.0;
    return StateVector(std::move(v));
}

StateVector make_state(const std::vector<Complex>& amplitudes, bool normalize) {
    Vec v(static_cast<Index>(amplitudes.size()));
    for (Index i = 0; i < v.size(); ++i) {
        v(i) = amplitudes[static_cast<std::size_t>(i)];
    }
    return StateVector::from(std::move(v), normalize);
}

StateVector make_state(const Vec& amplitudes, bool normalize) {
    return StateVector::from(amplitudes, normalize);
}

Operator Operator::from(Mat entries, OpRole role) {
    if (entries.rows() == 0 || entries.rows() != entries.cols()) {
        throw DimMismatchError("operator entries must form a nonempty square matrix");
    }
    const auto max_abs = [](const Mat& m) { return m.cwiseAbs().maxCoeff(); };
    switch (role) {
    case OpRole::hermitian:
        if (max_abs(entries - entries.adjoint()) > kAlgebraTol) {
            throw RoleError("operator tagged hermitian is not self-adjoint within tolerance");
        }
        break;
    case OpRole::unitary:
        if (max_abs(entries.adjoint() * entries - Mat::Identity(entries.rows(), entries.cols())) >
            kAlgebraTol) {
            throw RoleError("operator tagged unitary fails U'U = I within tolerance");
        }
        break;
    case OpRole::projector: {
        const double herm = max_abs(entries - entries.adjoint());
        const double idem = max_abs(entries * entries - entries);
        if (herm > kAlgebraTol || idem > kAlgebraTol) {
            throw RoleError("operator tagged projector fails P^2 = P = P' within tolerance");
        }
        break;
    }
    case OpRole::general:
        break;
    }
    return Operator(std::move(entries), role);
}

Operator Operator::identity(Index dim) {
    return Operator(Mat::Identity(dim, dim), OpRole::projector);
}

Operator Operator::projector_onto(const StateVector& v) {
    Mat p = v.amps() * v.amps().adjoint();
    return Operator(std::move(p), OpRole::projector);
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    // Product of unit vectors stays unit, no re-normalization pass.
    return make_state(tensor(a.amps(), b.amps()), false);
}

Vec tensor(const Vec& a, const Vec& b) {
    Vec out(a.size() * b.size());
    for (Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Vec apply(const Operator& m, const Vec& v) {
    check_dims(v.size(), m.dim(), "apply");
    return m.entries() * v;
}

Vec apply(const Operator& m, const StateVector& v) {
    return apply(m, v.amps());
}

double projector_expectation(const Operator& projector, const StateVector& psi) {
    if (projector.role() != OpRole::projector) {
        throw RoleError("projector_expectation: operator role is not projector");
    }
    check_dims(psi.dim(), projector.dim(), "projector_expectation");
    const Complex q = psi.amps().dot(projector.entries() * psi.amps());
    if (std::abs(q.imag()) > kAlgebraTol) {
        throw ContractError("projector_expectation: imaginary part " +
                            std::to_string(q.imag()) + " exceeds tolerance");
    }
    double value = q.real();
    if (value < -kAlgebraTol || value > 1.0 + kAlgebraTol) {
        throw ContractError("projector_expectation: value " + std::to_string(value) +
                            " outside [0,1] beyond tolerance");
    }
    return std::min(1.0, std::max(0.0, value));
}

Factorization Factorization::from(Index dim_s, Index dim_e,
                                  std::vector<StateVector> experience_basis) {
    if (dim_s < 1 || dim_e < 1) {
        throw DimMismatchError("factorization dims must be positive");
    }
    if (static_cast<Index>(experience_basis.size()) != dim_s) {
        throw DimMismatchError("experience basis must hold dim_s states");
    }
    bool computational = true;
    for (Index i = 0; i < dim_s; ++i) {
        const auto& bi = experience_basis[static_cast<std::size_t>(i)];
        check_dims(bi.dim(), dim_s, "experience basis state");
        for (Index j = 0; j <= i; ++j) {
            const Complex g = experience_basis[static_cast<std::size_t>(j)].amps().dot(bi.amps());
            const double want = (i == j) ? 1.0 : 0.0;
            if (std::abs(g - want) > kAlgebraTol) {
                throw NotNormalizedError("experience basis Gram matrix deviates from identity");
            }
        }
        for (Index k = 0; k < dim_s; ++k) {
            const Complex want = (k == i) ? Complex(1.0) : Complex(0.0);
            if (bi.amp(k) != want) {
                computational = false;
            }
        }
    }
    return Factorization(dim_s, dim_e, std::move(experience_basis), computational);
}

Factorization Factorization::computational(Index dim_s, Index dim_e) {
    if (dim_s < 1 || dim_e < 1) {
        throw DimMismatchError("factorization dims must be positive");
    }
    std::vector<StateVector> basis;
    basis.reserve(static_cast<std::size_t>(dim_s));
    for (Index n = 0; n < dim_s; ++n) {
        basis.push_back(StateVector::basis(dim_s, n));
    }
    return Factorization(dim_s, dim_e, std::move(basis), true);
}

Vec experience_component(const Vec& psi, const Factorization& f, Index n) {
    check_dims(psi.size(), f.dim_total(), "experience_component");
    if (n < 0 || n >= f.dim_s()) {
        throw RangeError("experience index out of range");
    }
    if (f.is_computational()) {
        return psi.segment(n * f.dim_e(), f.dim_e());
    }
    const auto m = as_matrix(psi, f);
    return m.transpose() * f.experience_basis()[static_cast<std::size_t>(n)].amps().conjugate();
}

std::vector<Vec> experience_components(const Vec& psi, const Factorization& f) {
    check_dims(psi.size(), f.dim_total(), "experience_components");
    std::vector<Vec> comps;
    comps.reserve(static_cast<std::size_t>(f.dim_s()));
    for (Index n = 0; n < f.dim_s(); ++n) {
        comps.push_back(experience_component(psi, f, n));
    }
    return comps;
}

Vec assemble_components(const std::vector<Vec>& comps, const Factorization& f) {
    if (static_cast<Index>(comps.size()) != f.dim_s()) {
        throw DimMismatchError("assemble_components: wrong number of components");
    }
    Vec out = Vec::Zero(f.dim_total());
    for (Index n = 0; n < f.dim_s(); ++n) {
        const Vec& phi = comps[static_cast<std::size_t>(n)];
        check_dims(phi.size(), f.dim_e(), "assemble_components");
        const Vec& eta = f.experience_basis()[static_cast<std::size_t>(n)].amps();
        for (Index i = 0; i < f.dim_s(); ++i) {
            out.segment(i * f.dim_e(), f.dim_e()) += eta(i) * phi;
        }
    }
    return out;
}

Vec project_experience(const Vec& psi, const Factorization& f, Index n) {
    const Vec phi = experience_component(psi, f, n);
    const Vec& eta = f.experience_basis()[static_cast<std::size_t>(n)].amps();
    Vec out = Vec::Zero(f.dim_total());
    for (Index i = 0; i < f.dim_s(); ++i) {
        out.segment(i * f.dim_e(), f.dim_e()) = eta(i) * phi;
    }
    return out;
}

} // namespace relstate
