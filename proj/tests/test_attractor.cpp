/*
* Copyright (C) 2026 The rdlab authors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*     http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/

#include "oracles.hpp"

#include "rdlab/attractor.hpp"
#include "rdlab/energy.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

using namespace rdlab;

namespace
{

// sup over y of inf over z, by listing every pair.
double exhaustive_semidistance(const std::vector<Field>& Y, const std::vector<Field>& Z)
{
    std::vector<std::vector<double>> d(Y.size(), std::vector<double>(Z.size()));
    for (std::size_t i = 0; i < Y.size(); ++i) {
        for (std::size_t j = 0; j < Z.size(); ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < Y[i].size(); ++k) {
                s += (Y[i][k] - Z[j][k]) * (Y[i][k] - Z[j][k]);
            }
            d[i][j] = std::sqrt(s * Y[i].grid().cell_volume());
        }
    }
    double worst = 0.0;
    for (const auto& row : d) {
        worst = std::max(worst, *std::min_element(row.begin(), row.end()));
    }
    return worst;
}

std::vector<Field> random_set(oracle::Gen& gen, const Grid& g, int count)
{
    std::vector<Field> s;
    for (int i = 0; i < count; ++i) {
        s.push_back(gen.field(g, gen.uniform(0.1, 2.0)));
    }
    return s;
}

} // namespace

TEST_CASE("property: Hausdorff semi-distance agrees with pair enumeration")
{
    oracle::Gen gen(61);
    for (int trial = 0; trial < 30; ++trial) {
        const Grid g(gen.integer(1, 2), 2.0, gen.integer(3, 9));
        const auto Y = random_set(gen, g, gen.integer(1, 7));
        const auto Z = random_set(gen, g, gen.integer(1, 7));
        CHECK(hausdorff_semidistance(Y, Z, NormKind::l2) == doctest::Approx(exhaustive_semidistance(Y, Z)));
    }
}

TEST_CASE("property: semi-distance axioms")
{
    oracle::Gen gen(62);
    for (int trial = 0; trial < 30; ++trial) {
        const Grid g(1, 3.0, 15);
        const auto X = random_set(gen, g, gen.integer(1, 5));
        const auto Y = random_set(gen, g, gen.integer(1, 5));
        const auto Z = random_set(gen, g, gen.integer(1, 5));
        for (NormKind n : {NormKind::l2, NormKind::h1}) {
            CHECK(hausdorff_semidistance(X, X, n) == 0.0);
            auto XY = X;
            XY.insert(XY.end(), Y.begin(), Y.end());
            CHECK(hausdorff_semidistance(X, XY, n) == 0.0);
            CHECK(hausdorff_semidistance(X, Z, n) <=
                  hausdorff_semidistance(X, Y, n) + hausdorff_semidistance(Y, Z, n) + 1e-12);
        }
    }
    CHECK_THROWS(hausdorff_semidistance({}, {Field(Grid(1, 1.0, 3))}, NormKind::l2));
}

TEST_CASE("semi-distance is asymmetric")
{
    const Grid g(1, 2.0, 3); // h = 1
    const Field zero(g);
    const Field far(g, {3.0, 0.0, 4.0});
    CHECK(hausdorff_semidistance({zero}, {zero, far}, NormKind::l2) == 0.0);
    CHECK(hausdorff_semidistance({zero, far}, {zero}, NormKind::l2) == doctest::Approx(5.0));
    // H1 adds the gradient: differences 3, -3, 4, -4
    CHECK(field_distance(zero, far, NormKind::h1) == doctest::Approx(std::sqrt(25.0 + 50.0)));
}

TEST_CASE("linear stationary problem: the attractor is the direct-solve steady state")
{
    const Grid g(1, 8.0, 127);
    ModelSpec m;
    m.lambda = 1.0;
    m.p = 2.0;
    m.beta = 0.0;
    ForcingSpec f;
    f.amplitude = 1.0;
    f.rate = 0.0;
    const Problem problem(g, m, f);

    // (lambda - Delta_h) u = rho by dense elimination
    auto a = oracle::implicit_matrix(g, 1.0, 1.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i][i] -= 1.0;
    }
    const Field steady(g, oracle::dense_solve(a, problem.rho));

    const AttractorSetup setup{problem, SolverControls{}, TemperedFamily{}, 5, 4, 1};
    const AttractorApprox A = approximate_attractor(setup, 0.0, {10.0, 20.0, 40.0, 60.0}, 1e-6);
    CHECK(A.converged);
    CHECK(A.members.size() == 4);
    CHECK(hausdorff_semidistance(A.members, {steady}, NormKind::l2) <= 1e-6);
    CHECK(hausdorff_semidistance(A.members, {steady}, NormKind::h1) <= 1e-6);
    CHECK(A.diameter <= 1e-6);
    for (std::size_t j = 1; j < A.history.size(); ++j) {
        CHECK(A.history[j].gap < A.history[j - 1].gap);
    }

    const InvarianceReport inv = check_invariance(setup, A, 1.0);
    CHECK(inv.passed);
    CHECK(std::max(inv.forward, inv.backward) <= 1e-6);

    const AttractionReport att = check_attraction(setup, A, TemperedFamily{4.0, 0.0, 0.2, 0.0, 8},
                                                  {10.0, 20.0, 40.0}, NormKind::h1, 3, 77, 1e-3);
    CHECK(att.passed);
    CHECK(att.monotone);
    REQUIRE(att.distances.size() == 3);
    CHECK(att.distances.back() <= 1e-6);
}

TEST_CASE("unconverged ladders are flagged and keep the longest horizon")
{
    const Grid g(1, 4.0, 31);
    ForcingSpec f;
    f.amplitude = 1.0;
    const Problem problem(g, ModelSpec::cubic(), f);
    const AttractorSetup setup{problem, SolverControls{}, TemperedFamily{}, 3, 3, 1};
    const AttractorApprox A = approximate_attractor(setup, 0.0, {0.5, 1.0}, 1e-12);
    CHECK_FALSE(A.converged);
    CHECK(A.horizon == 1.0);
    CHECK(A.history.size() == 1);
    CHECK(A.pairwise.size() == 9);
    CHECK_THROWS(approximate_attractor(setup, 0.0, {1.0}, 1e-3));
    CHECK_THROWS(approximate_attractor(setup, 0.0, {2.0, 1.0}, 1e-3));
}

TEST_CASE("pullback endpoints are independent of the job count")
{
    const Grid g(1, 4.0, 31);
    ForcingSpec f;
    f.amplitude = 1.0;
    const Problem problem(g, ModelSpec::cubic(), f);
    AttractorSetup serial{problem, SolverControls{}, TemperedFamily{}, 3, 4, 1};
    AttractorSetup threaded = serial;
    threaded.jobs = 3;
    const auto a = pullback_endpoints(serial, serial.family, 0.0, 2.0, 4, 3);
    const auto b = pullback_endpoints(threaded, threaded.family, 0.0, 2.0, 4, 3);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i] == b[i]);
    }
}
