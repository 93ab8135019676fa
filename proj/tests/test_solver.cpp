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

#include "rdlab/energy.hpp"
#include "rdlab/solver.hpp"

#include <doctest.h>

#include <cmath>

using namespace rdlab;

namespace
{

Problem linear_problem(const Grid& g, double lambda)
{
    ModelSpec m;
    m.lambda = lambda;
    m.p = 2.0;
    m.beta = 0.0;
    m.kappa = 0.0;
    return Problem(g, m, ForcingSpec::zero());
}

} // namespace

TEST_CASE("linear unforced eigenmode decays by the exact discrete factor")
{
    for (int dim : {1, 2}) {
        const Grid g(dim, 4.0, dim == 1 ? 127 : 31);
        const Problem problem = linear_problem(g, 1.0);
        SolverControls c;
        c.dt = 1e-3;
        const Field phi = first_eigenfunction(g);
        const Trajectory tr = Stepper(problem, c).evolve(phi, 0.0, 5.0);
        const double mu = first_eigenvalue(g);
        const double factor = std::pow(1.0 + c.dt * (1.0 + mu), -static_cast<double>(tr.steps()));
        CHECK(tr.steps() == 5000);
        const double ratio = std::sqrt(l2_norm_sq(tr.final_state) / l2_norm_sq(phi));
        CHECK(ratio == doctest::Approx(factor).epsilon(1e-10));
        // continuum rate e^{-(lambda + mu) t}, first order in dt
        const double continuum = std::exp(-(1.0 + mu) * 5.0);
        CHECK(std::abs(std::log(ratio) / std::log(continuum) - 1.0) < 1e-3);
    }
}

TEST_CASE("cocycle: evolving in two legs reproduces a single run bit for bit")
{
    const Grid g(1, 6.0, 127);
    ForcingSpec f;
    f.amplitude = 2.0;
    f.rate = -0.25;
    const Problem problem(g, ModelSpec::cubic(), f);
    oracle::Gen gen(12);
    const Field u0 = gen.field(g, 3.0);
    const Stepper stepper(problem, SolverControls{});
    const Trajectory whole = stepper.evolve(u0, -4.0, 0.0);
    const Trajectory first = stepper.evolve(u0, -4.0, -1.5);
    const Trajectory second = stepper.evolve(first.final_state, -1.5, 0.0);
    CHECK(whole.final_state == second.final_state);
    CHECK(whole.steps() == first.steps() + second.steps());
    CHECK(pullback_solve(problem, 0.0, 4.0, u0, SolverControls{}) == whole.final_state);
}

TEST_CASE("the final step is shortened to land on t1")
{
    const Grid g(1, 2.0, 15);
    const Problem problem = linear_problem(g, 1.0);
    SolverControls c;
    c.dt = 0.1;
    const Trajectory tr = Stepper(problem, c).evolve(first_eigenfunction(g), 0.0, 0.25);
    CHECK(tr.steps() == 3);
    CHECK(tr.records.back().t == 0.25);
    CHECK(tr.last_step == doctest::Approx(0.05));
}

TEST_CASE("implicit and imex schemes agree to first order")
{
    const Grid g(1, 6.0, 63);
    ForcingSpec f;
    f.amplitude = 1.0;
    const Problem problem(g, ModelSpec::cubic(), f);
    oracle::Gen gen(13);
    const Field u0 = gen.field(g, 1.0);
    double previous_gap = 0.0;
    for (double dt : {1.0 / 64.0, 1.0 / 128.0, 1.0 / 256.0}) {
        SolverControls a;
        a.dt = dt;
        SolverControls b = a;
        b.scheme = Scheme::imex;
        const Field ua = pullback_solve(problem, 0.0, 1.0, u0, a);
        const Field ub = pullback_solve(problem, 0.0, 1.0, u0, b);
        const double gap = std::sqrt(l2_norm_sq(ua - ub));
        CHECK(gap < 0.05);
        if (previous_gap > 0.0) {
            CHECK(gap < 0.7 * previous_gap);
        }
        previous_gap = gap;
    }
}

TEST_CASE("time step must respect the one-sided Lipschitz constant")
{
    SolverControls c;
    ModelSpec m = ModelSpec::cubic();
    m.constants.alpha3 = 100.0;
    c.dt = 0.01;
    CHECK_FALSE(c.validate(m).empty());
    c.dt = 0.005;
    CHECK(c.validate(m).empty());
    c.dt = -1.0;
    CHECK_FALSE(c.validate(m).empty());
}

TEST_CASE("explicit reaction blow-up is reported with its time")
{
    const Grid g(1, 2.0, 15);
    ModelSpec m = ModelSpec::cubic();
    m.beta = -1.0; // f = +s^3
    const Problem problem(g, m, ForcingSpec::zero());
    SolverControls c;
    c.scheme = Scheme::imex;
    c.dt = 0.01;
    Field u0(g);
    for (std::size_t i = 0; i < u0.size(); ++i) {
        u0[i] = 10.0;
    }
    try {
        Stepper(problem, c).evolve(u0, 0.0, 5.0);
        FAIL("expected a solver error");
    }
    catch (const SolverError& e) {
        CHECK(e.time() >= 0.0);
        CHECK(e.time() <= 5.0);
    }
}

TEST_CASE("snapshots and records")
{
    const Grid g(1, 2.0, 15);
    const Problem problem = linear_problem(g, 1.0);
    SolverControls c;
    c.dt = 0.125;
    c.snapshot_every = 2;
    const Trajectory tr = Stepper(problem, c).evolve(first_eigenfunction(g), 0.0, 1.0);
    CHECK(tr.records.size() == 9);
    CHECK(tr.records.front().t == 0.0);
    CHECK(tr.snapshots.size() >= 4);
    CHECK(tr.snapshots.front().t == 0.0);
    CHECK(tr.snapshots.back().t == 1.0);
    for (std::size_t j = 1; j < tr.records.size(); ++j) {
        CHECK(tr.records[j].l2_sq < tr.records[j - 1].l2_sq);
    }
}
