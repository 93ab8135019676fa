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

#ifndef RDLAB_ENERGY_HPP
#define RDLAB_ENERGY_HPP

#include "rdlab/grid.hpp"
#include "rdlab/model.hpp"
#include "rdlab/problem.hpp"
#include "rdlab/trajectory.hpp"

#include <cstddef>
#include <limits>
#include <vector>

namespace rdlab
{

double l2_norm_sq(const Field& u);
/// h^n sum |grad_h u|^2 with forward differences, including the gaps to the zero boundary.
double h1_seminorm_sq(const Field& u);
double lp_norm_p(const Field& u, double p);
double potential_integral(const ModelSpec& model, const Field& u);
double inner_product(const Field& u, const Field& v);

/// ||u - v||^2 + ||grad(u - v)||^2.
double h1_distance_sq(const Field& u, const Field& v);

/// h^n sum over nodes with |x| >= k of u^2; throws for k < 0 or k > L.
double tail_mass(const Field& u, double k);
/// h^n sum theta(|x|^2 / k^2) u^2; throws for k <= 0 or k > L.
double weighted_tail_mass(const Field& u, double k);

StepRecord measure(const ModelSpec& model, const Field& u, double t);

enum class Quantity
{
    l2,   ///< ||u||^2
    grad, ///< ||grad u||^2
    lp,   ///< ||u||_p^p
    h1,   ///< ||u||^2 + ||grad u||^2
};

double select(const StepRecord& r, Quantity q);

/**
 * Right-endpoint rule over the recorded steps of e^{lambda xi} q(xi),
 * restricted to [from, to]: each step contributes its length times the value
 * at the new time level, the quadrature under which backward Euler satisfies
 * the energy inequality exactly. lambda = 0 gives the unweighted integral.
 */
double weighted_time_integral(const Trajectory& traj, double lambda, Quantity q,
                              double from = -std::numeric_limits<double>::infinity(),
                              double to = std::numeric_limits<double>::infinity());

/// Discretization slack c (dt + h^2) max(1, magnitude).
double energy_slack(double c, double dt, double h, double magnitude);

struct EnergyCheck
{
    std::vector<double> residual;  ///< one per step
    std::vector<double> slack;     ///< one per step
    std::size_t positive = 0;      ///< residuals > 0
    std::size_t violations = 0;    ///< residuals > slack
    double worst_excess = -std::numeric_limits<double>::infinity(); ///< max(residual - slack)
};

/**
 * Per-step residual of the differential energy inequality
 * d/dt ||u||^2 + 2||grad u||^2 + (3/2) lambda ||u||^2 + 2 alpha1 ||u||_p^p <= 2||phi1||_1 + (2/lambda)||g||^2
 * with the time derivative replaced by the step difference quotient.
 */
EnergyCheck energy_residual(const Problem& problem, const Trajectory& traj, double slack_constant);

} // namespace rdlab

#endif // RDLAB_ENERGY_HPP
