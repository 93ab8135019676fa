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

#include "rdlab/solver.hpp"

#include "rdlab/energy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rdlab
{

namespace
{

double max_abs(std::span<const double> v)
{
    double m = 0.0;
    for (double x : v) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

double norm2(std::span<const double> v)
{
    double s = 0.0;
    for (double x : v) {
        s += x * x;
    }
    return std::sqrt(s);
}

bool all_finite(std::span<const double> v)
{
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

} // namespace

std::string to_string(Scheme s)
{
    return s == Scheme::implicit ? "implicit" : "imex";
}

std::vector<std::string> SolverControls::validate(const ModelSpec& model) const
{
    std::vector<std::string> out;
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        out.emplace_back("solver.dt must be positive");
    }
    else if (dt * model.constants.alpha3 > 0.5) {
        std::ostringstream msg;
        msg << "solver.dt: dt * alpha3 = " << dt * model.constants.alpha3
            << " exceeds the stability margin 1/2";
        out.push_back(msg.str());
    }
    if (!(newton_tol > 0.0)) {
        out.emplace_back("solver.newton_tol must be positive");
    }
    if (newton_max_iterations < 1) {
        out.emplace_back("solver.newton_max_iterations must be at least 1");
    }
    if (!(slack_constant >= 0.0)) {
        out.emplace_back("solver.slack_constant must be nonnegative");
    }
    return out;
}

SolverError::SolverError(const std::string& what, double time)
    : std::runtime_error(what + " at t = " + std::to_string(time))
    , m_time(time)
{
}

Stepper::Stepper(const Problem& problem, const SolverControls& controls)
    : m_problem(problem)
    , m_controls(controls)
{
    const auto errors = controls.validate(problem.model);
    if (!errors.empty()) {
        throw std::invalid_argument(errors.front());
    }
    m_operator = std::make_unique<ShiftedLaplacian>(problem.grid, controls.dt, problem.model.lambda);
}

void Stepper::nonlinearity(std::span<const double> v, std::span<double> f) const
{
    const ModelSpec& m = m_problem.model;
    const bool quartic = m.p == 4.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double s = v[i];
        const double power = quartic ? s * s * s : abs_pow(s, m.p - 2.0) * s;
        f[i] = -m.beta * power + m.kappa * s + m_problem.psi[i];
    }
}

int Stepper::step(Field& u, double t, double dt) const
{
    if (dt == m_controls.dt) {
        return step_with(*m_operator, u, t, dt);
    }
    const ShiftedLaplacian op(m_problem.grid, dt, m_problem.model.lambda);
    return step_with(op, u, t, dt);
}

int Stepper::step_with(const ShiftedLaplacian& op, Field& u, double t, double dt) const
{
    const std::size_t n = u.size();
    const double t_next = t + dt;
    const double a_next = m_problem.forcing.a(t_next);
    std::vector<double> b(n);
    for (std::size_t i = 0; i < n; ++i) {
        b[i] = u[i] + dt * a_next * m_problem.rho[i];
    }
    std::vector<double> f(n);

    if (m_controls.scheme == Scheme::imex) {
        nonlinearity(u.values(), f);
        for (std::size_t i = 0; i < n; ++i) {
            b[i] += dt * f[i];
        }
        op.solve(b, u.values());
        if (!u.is_finite()) {
            throw SolverError("non-finite values (blow-up)", t_next);
        }
        return 0;
    }

    const ModelSpec& m = m_problem.model;
    std::vector<double> v(u.values().begin(), u.values().end());
    std::vector<double> residual(n), trial(n), trial_residual(n), delta(n), extra(n), mv(n);

    auto evaluate = [&](const std::vector<double>& x, std::vector<double>& r) {
        nonlinearity(x, f);
        op.apply(x, mv);
        for (std::size_t i = 0; i < n; ++i) {
            r[i] = mv[i] - dt * f[i] - b[i];
        }
        return norm2(r);
    };

    double rnorm = evaluate(v, residual);
    const Point origin{};
    for (int it = 1; it <= m_controls.newton_max_iterations; ++it) {
        for (std::size_t i = 0; i < n; ++i) {
            extra[i] = -dt * m.dfds(origin, v[i]);
            residual[i] = -residual[i];
        }
        op.solve_with_diagonal(extra, residual, delta);
        if (!all_finite(delta)) {
            throw SolverError("non-finite Newton update", t_next);
        }
        double scale = 1.0;
        double trial_norm = 0.0;
        for (;;) {
            for (std::size_t i = 0; i < n; ++i) {
                trial[i] = v[i] + scale * delta[i];
            }
            trial_norm = evaluate(trial, trial_residual);
            if (trial_norm <= (1.0 - 1e-4 * scale) * rnorm || scale < 1.0 / 1024.0) {
                break;
            }
            scale *= 0.5;
        }
        const double step_size = scale * max_abs(delta);
        v.swap(trial);
        residual.swap(trial_residual);
        rnorm = trial_norm;
        if (!std::isfinite(rnorm)) {
            throw SolverError("non-finite values (blow-up)", t_next);
        }
        if (step_size <= m_controls.newton_tol * std::max(1.0, max_abs(v))) {
            std::copy(v.begin(), v.end(), u.values().begin());
            return it;
        }
    }
    throw SolverError("Newton iteration did not converge", t_next);
}

Trajectory Stepper::evolve(const Field& u0, double t0, double t1) const
{
    require_same_grid(u0.grid(), m_problem.grid);
    if (!(t1 > t0)) {
        throw std::invalid_argument("evolve needs t1 > t0");
    }
    if (!u0.is_finite()) {
        throw SolverError("non-finite initial data", t0);
    }
    const double dt = m_controls.dt;
    const double span = t1 - t0;
    auto full = static_cast<long long>(std::floor(span / dt));
    const double remainder = span - static_cast<double>(full) * dt;
    long long total = full;
    if (remainder > 1e-9 * dt) {
        ++total;
    }
    total = std::max<long long>(total, 1);

    Trajectory traj(m_problem.grid);
    traj.t0 = t0;
    traj.t1 = t1;
    traj.dt = dt;
    traj.records.reserve(static_cast<std::size_t>(total) + 1);
    traj.records.push_back(measure(m_problem.model, u0, t0));
    if (m_controls.snapshot_every > 0) {
        traj.snapshots.push_back({t0, u0});
    }

    Field u = u0;
    for (long long k = 0; k < total; ++k) {
        const double t = t0 + static_cast<double>(k) * dt;
        const double t_next = (k + 1 == total) ? t1 : t0 + static_cast<double>(k + 1) * dt;
        if (k + 1 == total) {
            traj.previous_state = u;
            traj.last_step = t_next - t;
        }
        StepRecord r;
        const int iterations = step(u, t, t_next - t);
        r = measure(m_problem.model, u, t_next);
        r.newton_iterations = iterations;
        traj.records.push_back(r);
        if (m_controls.snapshot_every > 0 &&
            ((static_cast<std::size_t>(k) + 1) % m_controls.snapshot_every == 0 || k + 1 == total)) {
            traj.snapshots.push_back({t_next, u});
        }
    }
    traj.final_state = std::move(u);
    return traj;
}

Field Stepper::pullback(double tau, double horizon, const Field& u0) const
{
    if (!(horizon > 0.0)) {
        throw std::invalid_argument("pullback horizon must be positive");
    }
    require_same_grid(u0.grid(), m_problem.grid);
    const double t0 = tau - horizon;
    const double dt = m_controls.dt;
    auto full = static_cast<long long>(std::floor(horizon / dt));
    const double remainder = horizon - static_cast<double>(full) * dt;
    long long total = full;
    if (remainder > 1e-9 * dt) {
        ++total;
    }
    total = std::max<long long>(total, 1);
    Field u = u0;
    for (long long k = 0; k < total; ++k) {
        const double t = t0 + static_cast<double>(k) * dt;
        const double t_next = (k + 1 == total) ? tau : t0 + static_cast<double>(k + 1) * dt;
        step(u, t, t_next - t);
    }
    return u;
}

Field step(const Problem& problem, const Field& u, double t, const SolverControls& controls)
{
    const Stepper stepper(problem, controls);
    Field out = u;
    stepper.step(out, t);
    return out;
}

Trajectory evolve(const Problem& problem, const Field& u0, double t0, double t1, const SolverControls& controls)
{
    return Stepper(problem, controls).evolve(u0, t0, t1);
}

Field pullback_solve(const Problem& problem, double tau, double horizon, const Field& u0,
                     const SolverControls& controls)
{
    return Stepper(problem, controls).pullback(tau, horizon, u0);
}

} // namespace rdlab
