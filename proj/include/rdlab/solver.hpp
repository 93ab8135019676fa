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

#ifndef RDLAB_SOLVER_HPP
#define RDLAB_SOLVER_HPP

#include "rdlab/grid.hpp"
#include "rdlab/linear_operator.hpp"
#include "rdlab/problem.hpp"
#include "rdlab/trajectory.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace rdlab
{

enum class Scheme
{
    implicit, ///< backward Euler with Newton on f(x, u+)
    imex,     ///< backward Euler linear part, explicit f(x, u)
};

std::string to_string(Scheme s);

struct SolverControls
{
    double dt = 1.0 / 128.0;
    Scheme scheme = Scheme::implicit;
    double newton_tol = 1e-12;
    int newton_max_iterations = 100;
    bool monitor_energy = true;
    double slack_constant = 10.0;
    /// Keep every k-th state as a snapshot (0: none).
    std::size_t snapshot_every = 0;

    /// Violated requirements: dt > 0 and dt * alpha3 <= 1/2.
    std::vector<std::string> validate(const ModelSpec& model) const;
};

/// Failure of a time step (Newton divergence or non-finite values) at a given time.
class SolverError : public std::runtime_error
{
public:
    SolverError(const std::string& what, double time);
    double time() const { return m_time; }

private:
    double m_time;
};

/**
 * Time stepper for one problem. The implicit operator for the nominal step is
 * factored once; const member functions are safe to call from several threads.
 */
class Stepper
{
public:
    Stepper(const Problem& problem, const SolverControls& controls);

    const Problem& problem() const { return m_problem; }
    const SolverControls& controls() const { return m_controls; }

    /// Advances u from t to t + dt; returns the number of Newton iterations.
    int step(Field& u, double t, double dt) const;
    int step(Field& u, double t) const { return step(u, t, m_controls.dt); }

    /// Steps from t0 to t1; the last step is shortened to land on t1.
    Trajectory evolve(const Field& u0, double t0, double t1) const;

    /// phi(t, tau - t, u0): evolve from tau - t to tau and return the endpoint.
    Field pullback(double tau, double horizon, const Field& u0) const;

private:
    int step_with(const ShiftedLaplacian& op, Field& u, double t, double dt) const;
    void nonlinearity(std::span<const double> v, std::span<double> f) const;

    const Problem& m_problem;
    SolverControls m_controls;
    std::unique_ptr<ShiftedLaplacian> m_operator;
};

Field step(const Problem& problem, const Field& u, double t, const SolverControls& controls);
Trajectory evolve(const Problem& problem, const Field& u0, double t0, double t1, const SolverControls& controls);
Field pullback_solve(const Problem& problem, double tau, double horizon, const Field& u0,
                     const SolverControls& controls);

} // namespace rdlab

#endif // RDLAB_SOLVER_HPP
