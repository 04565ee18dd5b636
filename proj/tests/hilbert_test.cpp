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

#include <cmath>
#include <vector>

#include <doctest.h>

#include <relstate/hilbert.hpp>

#include "oracles.hpp"

using namespace relstate;
using oracles::near;

TEST_CASE("state construction accepts normalized input and basis vectors") {
    const StateVector zero = make_state(std::vector<Complex>{Complex(1.0), Complex(0.0)}, false);
    CHECK(zero.dim() == 2);
    CHECK(zero.amp(0) == Complex(1.0));
    CHECK(zero.amp(1) == Complex(0.0));

    const StateVector b1 = StateVector::basis(4, 1);
    CHECK(b1.amp(1) == Complex(1.0));
    CHECK(b1.squared_norm() == 1.0);
    CHECK_THROWS_AS(StateVector::basis(2, 2), RangeError);
    CHECK_THROWS_AS(StateVector::basis(2, -1), RangeError);
}

TEST_CASE("state construction normalizes on request") {
    const StateVector plus = make_state(std::vector<Complex>{Complex(1.0), Complex(1.0)}, true);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(near(plus.amp(0).real(), r, 1e-15));
    CHECK(near(plus.amp(1).real(), r, 1e-15));
}

TEST_CASE("state construction rejects degenerate input") {
    CHECK_THROWS_AS(make_state(std::vector<Complex>{Complex(0.0), Complex(0.0)}, true), ZeroVectorError);
    CHECK_THROWS_AS(make_state(std::vector<Complex>{Complex(0.5), Complex(0.5)}, false), NotNormalizedError);
    CHECK_THROWS_AS(make_state(std::vector<Complex>{}, false), DimMismatchError);
}

TEST_CASE("operator roles are validated at construction") {
    Mat h(2, 2);
    h << Complex(0.0), Complex(0.0, -1.0), Complex(0.0, 1.0), Complex(0.0);
    CHECK_NOTHROW(Operator::from(h, OpRole::hermitian));

    Mat bad(2, 2);
    bad << Complex(0.0), Complex(1.0), Complex(0.0), Complex(0.0);
    CHECK_THROWS_AS(Operator::from(bad, OpRole::hermitian), RoleError);
    CHECK_THROWS_AS(Operator::from(bad, OpRole::unitary), RoleError);
    CHECK_THROWS_AS(Operator::from(bad, OpRole::projector), RoleError);
    CHECK_NOTHROW(Operator::from(bad, OpRole::general));

    Mat rect(2, 3);
    rect.setZero();
    CHECK_THROWS_AS(Operator::from(rect, OpRole::general), DimMismatchError);

    // Hermitian but not idempotent: valid hermitian, invalid projector.
    Mat twice = 2.0 * Mat::Identity(2, 2);
    CHECK_NOTHROW(Operator::from(twice, OpRole::hermitian));
    CHECK_THROWS_AS(Operator::from(twice, OpRole::projector), RoleError);
}

TEST_CASE("rank-one projector onto a state") {
    const StateVector plus = make_state(std::vector<Complex>{Complex(1.0), Complex(1.0)}, true);
    const Operator p = Operator::projector_onto(plus);
    CHECK(p.role() == OpRole::projector);
    CHECK(near(oracles::max_abs_diff(p.entries() * p.entries(), p.entries()), 0.0, 1e-15));
    CHECK(near(projector_expectation(p, plus), 1.0, 1e-15));
}

TEST_CASE("tensor of basis states lands on the S-major flat index") {
    const StateVector t = tensor(StateVector::basis(2, 0), StateVector::basis(2, 1));
    CHECK(t.dim() == 4);
    CHECK(t.amp(1) == Complex(1.0));
    CHECK(near(t.squared_norm(), 1.0, 1e-15));
}

TEST_CASE("tensor distributes amplitudes over the E factor") {
    const StateVector plus = make_state(std::vector<Complex>{Complex(1.0), Complex(1.0)}, true);
    const StateVector t = tensor(plus, StateVector::basis(2, 0));
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(near(t.amp(0).real(), r, 1e-15));
    CHECK(t.amp(1) == Complex(0.0));
    CHECK(near(t.amp(2).real(), r, 1e-15));
    CHECK(t.amp(3) == Complex(0.0));
}

TEST_CASE("tensor norm is multiplicative on raw vectors") {
    oracles::Rng rng(101);
    for (int trial = 0; trial < 20; ++trial) {
        const Index da = rng.uniform_index(1, 5);
        const Index db = rng.uniform_index(1, 5);
        Vec a(da), b(db);
        for (Index i = 0; i < da; ++i) a(i) = Complex(rng.normal(), rng.normal());
        for (Index i = 0; i < db; ++i) b(i) = Complex(rng.normal(), rng.normal());
        CHECK(near(tensor(a, b).norm(), a.norm() * b.norm(), 1e-12));
    }
}

TEST_CASE("tensor is associative up to flat reindexing on basis triples") {
    const Index d1 = 2, d2 = 3, d3 = 2;
    for (Index i = 0; i < d1; ++i) {
        for (Index j = 0; j < d2; ++j) {
            for (Index k = 0; k < d3; ++k) {
                const Vec left = tensor(tensor(StateVector::basis(d1, i).amps(),
                                               StateVector::basis(d2, j).amps()),
                                        StateVector::basis(d3, k).amps());
                const Vec right = tensor(StateVector::basis(d1, i).amps(),
                                         tensor(StateVector::basis(d2, j).amps(),
                                                StateVector::basis(d3, k).amps()));
                CHECK(oracles::max_abs_diff(left, right) == 0.0);
            }
        }
    }
}

TEST_CASE("kron matches the dense oracle") {
    oracles::Rng rng(102);
    Mat a(2, 2), b(3, 3);
    for (Index i = 0; i < 2; ++i)
        for (Index j = 0; j < 2; ++j) a(i, j) = Complex(rng.normal(), rng.normal());
    for (Index i = 0; i < 3; ++i)
        for (Index j = 0; j < 3; ++j) b(i, j) = Complex(rng.normal(), rng.normal());
    CHECK(near(oracles::max_abs_diff(kron(a, b), oracles::kron_dense(a, b)), 0.0, 0.0));
}

TEST_CASE("apply: identity, permutation, and norm preservation for unitaries") {
    const StateVector psi = make_state(std::vector<Complex>{Complex(0.6), Complex(0.0, 0.8)}, false);
    CHECK(near(oracles::max_abs_diff(relstate::apply(Operator::identity(2), psi), psi.amps()), 0.0, 0.0));

    Mat sx(2, 2);
    sx << Complex(0.0), Complex(1.0), Complex(1.0), Complex(0.0);
    const Vec flipped = relstate::apply(Operator::from(sx, OpRole::unitary), StateVector::basis(2, 0));
    CHECK(flipped(0) == Complex(0.0));
    CHECK(flipped(1) == Complex(1.0));

    oracles::Rng rng(103);
    const Mat h = rng.random_hermitian(4);
    const Mat u = oracles::propagator_pade(h, 0.7);
    const Operator uop = Operator::from(u, OpRole::unitary);
    for (int trial = 0; trial < 10; ++trial) {
        const Vec v = rng.random_state(4);
        CHECK(near(relstate::apply(uop, v).norm(), 1.0, 1e-9));
    }

    CHECK_THROWS_AS(relstate::apply(Operator::identity(3), psi), DimMismatchError);
}

TEST_CASE("projecting onto one experience keeps exactly that branch") {
    // Psi = sum_n c_n |n>|phi_n> built explicitly; (Pi_N x I) Psi must
    // reproduce the N-th term alone.
    oracles::Rng rng(104);
    const Index dim_s = 3, dim_e = 4;
    const Factorization f = Factorization::computational(dim_s, dim_e);
    std::vector<Vec> phis;
    Vec psi = Vec::Zero(dim_s * dim_e);
    for (Index n = 0; n < dim_s; ++n) {
        Vec phi(dim_e);
        for (Index j = 0; j < dim_e; ++j) phi(j) = Complex(rng.normal(), rng.normal());
        phis.push_back(phi);
        psi += tensor(StateVector::basis(dim_s, n).amps(), phi);
    }
    for (Index n = 0; n < dim_s; ++n) {
        const Vec projected = project_experience(psi, f, n);
        const Vec expected = tensor(StateVector::basis(dim_s, n).amps(), phis[static_cast<std::size_t>(n)]);
        CHECK(near(oracles::max_abs_diff(projected, expected), 0.0, 1e-15));
        CHECK(near(oracles::max_abs_diff(experience_component(psi, f, n),
                                         phis[static_cast<std::size_t>(n)]),
                   0.0, 1e-15));
    }
    CHECK_THROWS_AS(experience_component(psi, f, dim_s), RangeError);
}

TEST_CASE("projection agrees with the dense projector for a rotated basis") {
    oracles::Rng rng(105);
    const Index dim_s = 3, dim_e = 2;
    // Orthonormal non-computational basis from a random unitary's columns.
    const Mat u = oracles::propagator_pade(rng.random_hermitian(dim_s), 1.0);
    std::vector<StateVector> basis;
    std::vector<Vec> raw;
    for (Index n = 0; n < dim_s; ++n) {
        basis.push_back(make_state(Vec(u.col(n)), false));
        raw.push_back(u.col(n));
    }
    const Factorization f = Factorization::from(dim_s, dim_e, basis);
    CHECK_FALSE(f.is_computational());

    const auto projectors = oracles::basis_projectors(raw, dim_e);
    const Vec psi = rng.random_state(dim_s * dim_e);
    for (Index n = 0; n < dim_s; ++n) {
        const Vec direct = projectors[static_cast<std::size_t>(n)] * psi;
        CHECK(near(oracles::max_abs_diff(project_experience(psi, f, n), direct), 0.0, 1e-12));
    }
}

TEST_CASE("assemble_components inverts experience_components") {
    oracles::Rng rng(106);
    for (const bool rotated : {false, true}) {
        const Index dim_s = 4, dim_e = 3;
        Factorization f = Factorization::computational(dim_s, dim_e);
        if (rotated) {
            const Mat u = oracles::propagator_pade(rng.random_hermitian(dim_s), 0.6);
            std::vector<StateVector> basis;
            for (Index n = 0; n < dim_s; ++n) {
                basis.push_back(make_state(Vec(u.col(n)), false));
            }
            f = Factorization::from(dim_s, dim_e, basis);
        }
        const Vec psi = rng.random_state(dim_s * dim_e);
        const Vec back = assemble_components(experience_components(psi, f), f);
        CHECK(near(oracles::max_abs_diff(back, psi), 0.0, 1e-12));
    }
}

TEST_CASE("factorization rejects non-orthonormal bases and wrong dims") {
    const StateVector e0 = StateVector::basis(2, 0);
    CHECK_THROWS_AS(Factorization::from(2, 2, {e0, e0}), NotNormalizedError);
    CHECK_THROWS_AS(Factorization::from(2, 2, {e0}), DimMismatchError);
    CHECK_THROWS_AS(Factorization::from(0, 2, {}), DimMismatchError);
    CHECK_THROWS_AS(Factorization::computational(2, 0), DimMismatchError);

    const Factorization f = Factorization::computational(3, 2);
    CHECK(f.dim_total() == 6);
    CHECK(f.is_computational());
}

TEST_CASE("projector expectation: identity, symmetry, complement, rank-k oracle") {
    const StateVector plus = make_state(std::vector<Complex>{Complex(1.0), Complex(1.0)}, true);
    CHECK(near(projector_expectation(Operator::identity(2), plus), 1.0, 1e-12));
    CHECK(near(projector_expectation(Operator::projector_onto(StateVector::basis(2, 0)), plus),
               0.5, 1e-15));

    oracles::Rng rng(107);
    const Index dim = 5;
    // Rank-2 projector from two orthonormal columns of a random unitary.
    const Mat u = oracles::propagator_pade(rng.random_hermitian(dim), 0.9);
    Mat p = Mat::Zero(dim, dim);
    p += u.col(0) * u.col(0).adjoint();
    p += u.col(1) * u.col(1).adjoint();
    const Operator proj = Operator::from(p, OpRole::projector);
    const Mat comp = Mat::Identity(dim, dim) - p;
    const Operator proj_c = Operator::from(comp, OpRole::projector);
    for (int trial = 0; trial < 10; ++trial) {
        const StateVector psi = make_state(rng.random_state(dim), false);
        const double got = projector_expectation(proj, psi);
        // Eigendecomposition oracle: sum of squared overlaps with the range.
        const double want = std::norm(u.col(0).dot(psi.amps())) +
                            std::norm(u.col(1).dot(psi.amps()));
        CHECK(near(got, want, 1e-12));
        CHECK(got >= 0.0);
        CHECK(got <= 1.0);
        CHECK(near(got + projector_expectation(proj_c, psi), 1.0, 1e-9));
    }

    Mat h(2, 2);
    h << Complex(1.0), Complex(0.0), Complex(0.0), Complex(-1.0);
    CHECK_THROWS_AS(projector_expectation(Operator::from(h, OpRole::hermitian), plus),
                    RoleError);
}
