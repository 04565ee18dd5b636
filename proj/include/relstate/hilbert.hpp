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

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "relstate/errors.hpp"

namespace relstate {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;
using Index = Eigen::Index;

// Tolerance for all algebraic identities (normalization, hermiticity,
// unitarity, projector idempotence, realness of expectation values).
inline constexpr double kAlgebraTol = 1e-9;

// Weights at or below this floor count as "branch did not occur".
inline constexpr double kPruneEpsilon = 1e-12;

/// A normalized state vector on a finite-dimensional Hilbert space.
/// Unnormalized vectors (branch components) are passed around as raw Vec;
/// this type asserts the unit-norm invariant at construction.
class StateVector {
  public:
    static StateVector from(Vec amplitudes, bool normalize);
    static StateVector basis(Index dim, Index k);

    Index dim() const noexcept { return amps_.size(); }
    const Vec& amps() const noexcept { return amps_; }
    Complex amp(Index i) const { return amps_(i); }
    double squared_norm() const { return amps_.squaredNorm(); }

  private:
    explicit StateVector(Vec amps) : amps_(std::move(amps)) {}
    Vec amps_;
};

enum class OpRole { hermitian, unitary, projector, general };

/// A square complex matrix with a declared role; the role's algebraic
/// identity is checked at construction within kAlgebraTol.
class Operator {
  public:
    static Operator from(Mat entries, OpRole role);
    static Operator identity(Index dim);
    /// Rank-one projector |v><v| onto a normalized state.
    static Operator projector_onto(const StateVector& v);

    Index dim() const noexcept { return entries_.rows(); }
    const Mat& entries() const noexcept { return entries_; }
    OpRole role() const noexcept { return role_; }

  private:
    Operator(Mat entries, OpRole role) : entries_(std::move(entries)), role_(role) {}
    Mat entries_;
    OpRole role_;
};

/// A declared tensor split dim_U = dim_S * dim_E together with an orthonormal
/// experience basis of the S factor. Flattening is S-major throughout: the
/// amplitude of |i>_S |j>_E sits at flat index i*dim_E + j.
class Factorization {
  public:
    static Factorization from(Index dim_s, Index dim_e, std::vector<StateVector> experience_basis);
    /// Experience basis defaults to the computational basis of the S factor.
    static Factorization computational(Index dim_s, Index dim_e);

    Index dim_s() const noexcept { return dim_s_; }
    Index dim_e() const noexcept { return dim_e_; }
    Index dim_total() const noexcept { return dim_s_ * dim_e_; }
    const std::vector<StateVector>& experience_basis() const noexcept { return basis_; }
    bool is_computational() const noexcept { return computational_; }

  private:
    Factorization(Index s, Index e, std::vector<StateVector> b, bool comp)
        : dim_s_(s), dim_e_(e), basis_(std::move(b)), computational_(comp) {}
    Index dim_s_;
    Index dim_e_;
    std::vector<StateVector> basis_;
    bool computational_;
};

StateVector make_state(const std::vector<Complex>& amplitudes, bool normalize);
StateVector make_state(const Vec& amplitudes, bool normalize);

/// Kronecker product of states, S-major flattening.
StateVector tensor(const StateVector& a, const StateVector& b);
Vec tensor(const Vec& a, const Vec& b);

/// Kronecker product of matrices (used to build product-space operators).
Mat kron(const Mat& a, const Mat& b);

Vec apply(const Operator& m, const Vec& v);
Vec apply(const Operator& m, const StateVector& v);

/// <psi|P|psi> for a projector P: real within kAlgebraTol, clamped to [0,1].
double projector_expectation(const Operator& projector, const StateVector& psi);

/// Component of psi along experience index n: Phi_n = (<eta_n| (x) I) psi.
/// Works on unnormalized vectors; returns a vector in the E factor.
Vec experience_component(const Vec& psi, const Factorization& f, Index n);

/// All components at once; index n of the result is Phi_n.
std::vector<Vec> experience_components(const Vec& psi, const Factorization& f);

/// Rebuild sum_n |eta_n>|Phi_n> from components.
Vec assemble_components(const std::vector<Vec>& comps, const Factorization& f);

/// (Pi_n (x) I) psi, i.e. |eta_n><eta_n| on the S factor, identity on E.
Vec project_experience(const Vec& psi, const Factorization& f, Index n);

} // namespace relstate
