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

#include "rdlab/estimates.hpp"
#include "rdlab/family.hpp"

#include <doctest.h>

#include <cmath>

using namespace rdlab;

namespace
{

ForcingSpec pulse(double amplitude, double rate)
{
    ForcingSpec g;
    g.amplitude = amplitude;
    g.rate = rate;
    return g;
}

} // namespace

TEST_CASE("bound constants for the unforced-profile cubic model")
{
    const Grid grid(1, 8.0, 127);
    const Problem problem(grid, ModelSpec::cubic(), pulse(1.0, 0.0));
    const double r = 3.0;
    const BoundConstants c = bound_constants(problem, 0.0, 10.0, r);
    const double E0 = std::exp(-10.0) * r * r;
    const double W = problem.rho_sq; // int_{-inf}^0 e^{xi} d xi = 1
    CHECK(c.initial_energy == doctest::Approx(E0));
    CHECK(c.forcing_weighted == doctest::Approx(W));
    CHECK(c.dissipation_source == 0.0);
    CHECK(c.phi34 == 0.0);
    CHECK(c.B1 == doctest::Approx(E0 + 2.0 * W));
    CHECK(c.absorbing_l2() == doctest::Approx(E0 + 2.0 * W));
    CHECK(c.B2 == doctest::Approx(E0 + 2.0 * W));
    CHECK(c.B3 == doctest::Approx(E0 + 4.0 * W));
    CHECK(c.window_l2 == doctest::Approx(std::exp(2.0) * 2.0 * c.B2));
    CHECK(c.window_grad == doctest::Approx(std::exp(2.0) * c.B3 / 2.0));
    CHECK(c.window_lp == doctest::Approx(std::exp(2.0) * c.B3 / 2.0));
    CHECK(c.forcing_derivative == 0.0);
    CHECK(c.ut >= 3.0 * c.ut_window);
    CHECK(cutoff_constant() == doctest::Approx(3.0 * std::sqrt(2.0)));
}

TEST_CASE("property: tail bound is nonincreasing in k and absorbs the initial data")
{
    oracle::Gen gen(71);
    for (int trial = 0; trial < 20; ++trial) {
        const Grid grid(gen.integer(1, 2), 6.0, 31);
        const Problem problem(grid,
                              ModelSpec::with_derived_constants(gen.uniform(0.5, 2.0), 4.0, 1.0,
                                                                gen.uniform(-1.0, 1.0)),
                              pulse(gen.uniform(0.0, 3.0), gen.uniform(-0.2, 0.3)));
        const double r = gen.uniform(0.1, 10.0);
        double prev = std::numeric_limits<double>::infinity();
        const BoundConstants c = bound_constants(problem, 0.0, gen.uniform(2.0, 40.0), r);
        for (double k = 0.5; k <= 6.0 / std::sqrt(2.0); k += 0.25) {
            const double b = tail_bound(problem, c, k);
            CHECK(b <= prev);
            prev = b;
        }
        const BoundConstants near = bound_constants(problem, 0.0, 5.0, r);
        const BoundConstants far = bound_constants(problem, 0.0, 50.0, r);
        CHECK(far.absorbing_l2() <= near.absorbing_l2());
        CHECK(far.h1 <= near.h1);
    }
}

TEST_CASE("time derivative of a linear eigenmode run is exact")
{
    const Grid grid(1, 4.0, 63);
    ModelSpec m;
    m.p = 2.0;
    m.beta = 0.0;
    const Problem problem(grid, m, ForcingSpec::zero());
    SolverControls c;
    const Trajectory tr = Stepper(problem, c).evolve(first_eigenfunction(grid), 0.0, 1.0);
    const Field d = time_derivative(tr);
    const double rate = 1.0 + first_eigenvalue(grid);
    for (std::size_t i = 0; i < d.size(); ++i) {
        CHECK(d[i] == doctest::Approx(-rate * tr.final_state[i]).epsilon(1e-10).scale(1e-12));
    }
}

TEST_CASE("every checker holds on a small forced cubic problem")
{
    const Grid grid(1, 8.0, 255);
    const Problem problem(grid, ModelSpec::cubic(), pulse(2.0, -0.25));
    const EstimateSetup setup{problem, SolverControls{}, TemperedFamily{}, 42, 2, 1};
    const RunSet runs = run_pullbacks(setup, 0.0, {5.0, 10.0, 20.0});
    CHECK(runs.runs.size() == 6);
    CHECK(runs.at(2, 1).horizon == 20.0);
    CHECK(runs.at(2, 1).initial_radius == doctest::Approx(TemperedFamily{}.radius(-20.0)));

    const auto check = [](const EstimateReport& r) {
        INFO(r.name);
        CHECK_FALSE(r.entries.empty());
        CHECK(r.passed);
        for (const auto& e : r.entries) {
            INFO(e.quantity << " at horizon " << e.horizon);
            CHECK(e.margin == doctest::Approx(e.bound - e.observed));
            CHECK(e.passed);
        }
    };
    const EstimateReport absorbing = check_absorbing_l2(setup, runs);
    check(absorbing);
    CHECK(absorbing.first_passing_horizon.has_value());
    check(check_time_integrals(setup, runs));
    check(check_h1_bound(setup, runs));
    check(check_ut_bound(setup, runs));
    const EstimateReport tail = check_tail(setup, runs, 1e-2, {0.5, 1.0, 2.0, 3.0, 4.0, 5.0});
    check(tail);
    CHECK(tail.summary_value("empirical_K").has_value());
    CHECK(*tail.summary_value("empirical_K") <= 8.0 / std::sqrt(2.0));
    check(check_h1_cauchy(setup, runs, {{10.0, 20.0}}));
}

TEST_CASE("checkers refuse unusable input")
{
    const Grid grid(1, 4.0, 31);
    const Problem problem(grid, ModelSpec::cubic(), pulse(1.0, 0.0));
    const EstimateSetup setup{problem, SolverControls{}, TemperedFamily{}, 1, 1, 1};
    const RunSet shortruns = run_pullbacks(setup, 0.0, {1.0});
    CHECK_THROWS(check_h1_bound(setup, shortruns));
    const RunSet runs = run_pullbacks(setup, 0.0, {2.0, 3.0});
    CHECK_THROWS(check_tail(setup, runs, 1e-2, {5.0}));
    CHECK_THROWS(check_tail(setup, runs, 0.0, {1.0}));
    CHECK_THROWS(check_h1_cauchy(setup, runs, {{3.0, 2.0}}));
}
