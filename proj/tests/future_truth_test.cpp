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
#include <map>
#include <vector>

#include <doctest.h>

#include <relstate/future_truth.hpp>
#include <relstate/models.hpp>

#include "oracles.hpp"

using namespace relstate;
using oracles::near;

TEST_CASE("perspective always records t0 and validates its inputs") {
    const Factorization f = Factorization::computational(3, 2);
    const Perspective p(f, 1, 2.0, {{1.0, 0}});
    CHECK(p.record().at(2.0) == 1);
    CHECK(p.record().at(1.0) == 0);

    CHECK_NOTHROW(Perspective(f, 1, 2.0, {{2.0, 1}}));
    CHECK_THROWS_AS(Perspective(f, 3, 0.0), RangeError);
    CHECK_THROWS_AS(Perspective(f, 1, 2.0, {{2.0, 0}}), RangeError);
    CHECK_THROWS_AS(Perspective(f, 1, 2.0, {{3.0, 0}}), RangeError);
    CHECK_THROWS_AS(Perspective(f, 1, 2.0, {{1.0, 5}}), RangeError);
}

TEST_CASE("truth values are clamped inside tolerance and rejected beyond it") {
    CHECK(TruthValue::checked(1.0 + 0.5e-9).value() == 1.0);
    CHECK(TruthValue::checked(-0.5e-9).value() == 0.0);
    CHECK(TruthValue::checked(0.375).value() == 0.375);
    CHECK_THROWS_AS(TruthValue::checked(1.5), ContractError);
    CHECK_THROWS_AS(TruthValue::checked(-1e-3), ContractError);
}

TEST_CASE("frozen dynamics leaves future truth on the held experience") {
    oracles::Rng rng(401);
    const Factorization f = Factorization::computational(3, 3);
    const Operator h0 = Operator::from(Mat::Zero(9, 9), OpRole::hermitian);
    const StateVector psi = make_state(rng.random_state(9), false);
    const Perspective p(f, 1, 0.0);
    const auto table = future_truth_table(psi, h0, p, 1.0);
    REQUIRE(table.size() == 3);
    CHECK(near(table[0].value(), 0.0, 1e-12));
    CHECK(near(table[1].value(), 1.0, 1e-12));
    CHECK(near(table[2].value(), 0.0, 1e-12));
    CHECK(near(consistency_defect(psi, h0, p, 1.0), 0.0, 1e-12));
}

TEST_CASE("ideal measurement recovers the Born weights") {
    const IdealMeasurementModel m({Complex(std::sqrt(0.25)), Complex(std::sqrt(0.75))}, 2.0);
    const Operator h = ideal_measurement_hamiltonian(m);
    const Factorization f = ideal_measurement_factorization(m);
    const Perspective p(f, 0, 0.0);
    const StateVector psi0 = ideal_measurement_initial(m);

    const auto table = future_truth_table(psi0, h, p, 2.0);
    REQUIRE(table.size() == 3);
    CHECK(near(table[0].value(), 0.0, 1e-9));
    CHECK(near(table[1].value(), 0.25, 1e-9));
    CHECK(near(table[2].value(), 0.75, 1e-9));
    CHECK(near(consistency_defect(psi0, h, p, 2.0), 0.0, 1e-9));

    CHECK(near(future_truth_value(psi0, h, p, 1, 2.0).value(), 0.25, 1e-9));
}

TEST_CASE("random measurement coefficients land on their Born weights") {
    oracles::Rng rng(402);
    for (int trial = 0; trial < 25; ++trial) {
        const Index k = rng.uniform_index(2, 5);
        std::vector<Complex> c;
        double norm2 = 0.0;
        for (Index i = 0; i < k; ++i) {
            c.emplace_back(rng.normal(), rng.normal());
            norm2 += std::norm(c.back());
        }
        for (auto& ci : c) ci /= std::sqrt(norm2);

        const IdealMeasurementModel m(c, 1.0);
        const Operator h = ideal_measurement_hamiltonian(m);
        const Perspective p(ideal_measurement_factorization(m), 0, 0.0);
        const auto table = future_truth_table(ideal_measurement_initial(m), h, p, 1.0);
        CHECK(near(table[0].value(), 0.0, 1e-9));
        for (Index i = 0; i < k; ++i) {
            CHECK(near(table[static_cast<std::size_t>(i + 1)].value(),
                       std::norm(c[static_cast<std::size_t>(i)]), 1e-9));
        }
    }
}

TEST_CASE("every table entry is a bounded truth value and the sum never tops 1") {
    oracles::Rng rng(403);
    const Factorization f = Factorization::computational(4, 2);
    for (int trial = 0; trial < 40; ++trial) {
        const Operator h = Operator::from(rng.random_hermitian(8), OpRole::hermitian);
        const StateVector psi = make_state(rng.random_state(8), false);
        const Index n = rng.uniform_index(0, 3);
        const double t = rng.uniform(0.1, 3.0);
        const auto table = future_truth_table(psi, h, Perspective(f, n, 0.0), t);
        double sum = 0.0;
        for (const auto& tv : table) {
            CHECK(tv.value() >= 0.0);
            CHECK(tv.value() <= 1.0);
            sum += tv.value();
        }
        CHECK(sum <= 1.0 + 1e-9);
    }
}

TEST_CASE("the quotient matches a dense-matrix evaluation of the same formula") {
    oracles::Rng rng(404);

    SUBCASE("computational experience basis") {
        const Index dim_s = 4, dim_e = 2;
        const Factorization f = Factorization::computational(dim_s, dim_e);
        const auto projectors = oracles::computational_projectors(dim_s, dim_e);
        for (int trial = 0; trial < 20; ++trial) {
            const Mat h = rng.random_hermitian(dim_s * dim_e);
            const StateVector psi = make_state(rng.random_state(dim_s * dim_e), false);
            const Index n = rng.uniform_index(0, dim_s - 1);
            const double t0 = rng.uniform(-1.0, 1.0);
            const double t = t0 + rng.uniform(0.1, 2.0);
            const Perspective p(f, n, t0);
            const Operator hop = Operator::from(h, OpRole::hermitian);
            for (Index m = 0; m < dim_s; ++m) {
                const double got = future_truth_value(psi, hop, p, m, t).value();
                const double want =
                    oracles::truth_quotient(h, psi.amps(), projectors, n, t0, m, t);
                CHECK(near(got, want, 1e-9));
            }
        }
    }

    SUBCASE("rotated experience basis") {
        const Index dim_s = 3, dim_e = 2;
        const Mat u = oracles::propagator_pade(rng.random_hermitian(dim_s), 0.8);
        std::vector<StateVector> basis;
        std::vector<Vec> raw;
        for (Index n = 0; n < dim_s; ++n) {
            basis.push_back(make_state(Vec(u.col(n)), false));
            raw.push_back(u.col(n));
        }
        const Factorization f = Factorization::from(dim_s, dim_e, basis);
        const auto projectors = oracles::basis_projectors(raw, dim_e);
        for (int trial = 0; trial < 10; ++trial) {
            const Mat h = rng.random_hermitian(dim_s * dim_e);
            const StateVector psi = make_state(rng.random_state(dim_s * dim_e), false);
            const Perspective p(f, 0, 0.0);
            const Operator hop = Operator::from(h, OpRole::hermitian);
            for (Index m = 0; m < dim_s; ++m) {
                CHECK(near(future_truth_value(psi, hop, p, m, 1.1).value(),
                           oracles::truth_quotient(h, psi.amps(), projectors, 0, 0.0, m, 1.1),
                           1e-9));
            }
        }
    }
}

TEST_CASE("single-branch starts are consistent: sums reach 1 and match the chain") {
    oracles::Rng rng(405);
    const Index dim_s = 4, dim_e = 2;
    const Factorization f = Factorization::computational(dim_s, dim_e);
    const auto projectors = oracles::computational_projectors(dim_s, dim_e);
    for (int trial = 0; trial < 20; ++trial) {
        const Mat h = rng.random_hermitian(dim_s * dim_e);
        const Operator hop = Operator::from(h, OpRole::hermitian);
        const Index n = rng.uniform_index(0, dim_s - 1);
        const StateVector psi =
            tensor(StateVector::basis(dim_s, n), make_state(rng.random_state(dim_e), false));
        const Perspective p(f, n, 0.0);
        const double t = rng.uniform(0.2, 2.0);

        const auto table = future_truth_table(psi, hop, p, t);
        double sum = 0.0;
        for (Index m = 0; m < dim_s; ++m) {
            sum += table[static_cast<std::size_t>(m)].value();
            const double chain = oracles::chain_value(h, psi.amps(), projectors, n, 0.0,
                                                      {{m, t}});
            CHECK(near(table[static_cast<std::size_t>(m)].value(), chain, 1e-9));
        }
        CHECK(near(sum, 1.0, 1e-9));
        CHECK(near(consistency_defect(psi, hop, p, t), 0.0, 1e-9));
    }
}

TEST_CASE("generic entangled evolution leaves a visible consistency defect") {
    oracles::Rng rng(406);
    const Factorization f = Factorization::computational(4, 2);
    double max_defect = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const Operator h = Operator::from(rng.random_hermitian(8), OpRole::hermitian);
        const StateVector psi = make_state(rng.random_state(8), false);
        const double d = consistency_defect(psi, h, Perspective(f, 0, 0.0), 1.7);
        CHECK(d >= -1e-9);
        CHECK(d <= 1.0);
        max_defect = std::max(max_defect, d);
    }
    CHECK(max_defect > 1e-6);
}

TEST_CASE("future truth rejects out-of-domain queries") {
    const Factorization f = Factorization::computational(2, 2);
    const Operator h = Operator::from(Mat::Zero(4, 4), OpRole::hermitian);
    const StateVector psi = tensor(StateVector::basis(2, 0), StateVector::basis(2, 0));
    const Perspective p(f, 0, 1.0);

    CHECK_THROWS_AS(future_truth_value(psi, h, p, 0, 1.0), RangeError);
    CHECK_THROWS_AS(future_truth_value(psi, h, p, 0, 0.5), RangeError);
    CHECK_THROWS_AS(future_truth_value(psi, h, p, 2, 2.0), RangeError);

    // The perspective branch must carry weight.
    const Perspective empty(f, 1, 1.0);
    CHECK_THROWS_AS(future_truth_table(psi, h, empty, 2.0), EmptyPerspectiveError);

    // Dimension checks against state and dynamics.
    const Operator h6 = Operator::from(Mat::Zero(6, 6), OpRole::hermitian);
    CHECK_THROWS_AS(future_truth_table(psi, h6, p, 2.0), DimMismatchError);
}

TEST_CASE("sampled records are reproducible and frozen once decided") {
    const CatModel m(0.5, 4, 2.0);
    const CatDynamics dyn(m);
    const Factorization f = cat_factorization(m);
    const std::vector<double> grid{0.0, 0.5, 1.0, 1.5, 2.0};
    const StateVector psi0 = cat_state_at(m, 0.0);

    const SampledRecord a = sample_record(psi0, dyn, f, grid, 99);
    const SampledRecord b = sample_record(psi0, dyn, f, grid, 99);
    CHECK(a.indices == b.indices);
    CHECK(a.seed == 99);
    CHECK(a.times == grid);
    CHECK(a.as_map().at(0.0) == a.indices[0]);

    // Death records stay fixed for the rest of the trajectory.
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const SampledRecord r = sample_record(psi0, dyn, f, grid, seed);
        CHECK(r.indices[0] == 0);  // everything starts alive
        Index dead_bin = 0;
        for (const Index n : r.indices) {
            if (dead_bin != 0) {
                CHECK(n == dead_bin);
            } else if (n != 0) {
                dead_bin = n;
            }
        }
        CHECK(near(r.table_sums[0], 1.0, 1e-12));
    }
}

TEST_CASE("a sharp measurement outcome is sampled with certainty") {
    const IdealMeasurementModel m({Complex(1.0)}, 1.0);
    const Operator h = ideal_measurement_hamiltonian(m);
    const Factorization f = ideal_measurement_factorization(m);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const SampledRecord r =
            sample_record(ideal_measurement_initial(m), h, f, {0.0, 1.0}, seed);
        CHECK(r.indices[0] == 0);
        CHECK(r.indices[1] == 1);
    }
}

TEST_CASE("sample_record validates its grid") {
    const CatModel m(0.5, 2, 2.0);
    const CatDynamics dyn(m);
    const Factorization f = cat_factorization(m);
    const StateVector psi0 = cat_state_at(m, 0.0);
    CHECK_THROWS_AS(sample_record(psi0, dyn, f, {}, 0), RangeError);
    CHECK_THROWS_AS(sample_record(psi0, dyn, f, {0.0, 0.0}, 0), RangeError);
    CHECK_THROWS_AS(sample_record(psi0, dyn, f, {1.0, 0.5}, 0), RangeError);
}
