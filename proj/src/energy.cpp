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

#include "rdlab/energy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rdlab
{

namespace
{

double forward_gradient_sum(const Grid& grid, std::span<const double> u)
{
    const auto n = static_cast<std::size_t>(grid.points_per_axis());
    const double h = grid.spacing();
    double sum = 0.0;
    auto gap = [&](double a, double b) {
        const double d = (b - a) / h;
        sum += d * d;
    };
    if (grid.dimension() == 1) {
        gap(0.0, u[0]);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            gap(u[i], u[i + 1]);
        }
        gap(u[n - 1], 0.0);
        return sum * grid.cell_volume();
    }
    for (std::size_t j = 0; j < n; ++j) {
        gap(0.0, u[n * j]);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            gap(u[i + n * j], u[i + 1 + n * j]);
        }
        gap(u[n - 1 + n * j], 0.0);
    }
    for (std::size_t i = 0; i < n; ++i) {
        gap(0.0, u[i]);
        for (std::size_t j = 0; j + 1 < n; ++j) {
            gap(u[i + n * j], u[i + n * (j + 1)]);
        }
        gap(u[i + n * (n - 1)], 0.0);
    }
    return sum * grid.cell_volume();
}

void check_radius(const Grid& grid, double k)
{
    if (k < 0.0) {
        throw std::invalid_argument("tail radius must be nonnegative");
    }
    if (k > grid.radius()) {
        throw std::invalid_argument("tail radius exceeds the truncation radius");
    }
}

} // namespace

double l2_norm_sq(const Field& u)
{
    double sum = 0.0;
    for (double v : u.values()) {
        sum += v * v;
    }
    return sum * u.grid().cell_volume();
}

double h1_seminorm_sq(const Field& u)
{
    return forward_gradient_sum(u.grid(), u.values());
}

double lp_norm_p(const Field& u, double p)
{
    double sum = 0.0;
    for (double v : u.values()) {
        sum += abs_pow(v, p);
    }
    return sum * u.grid().cell_volume();
}

double potential_integral(const ModelSpec& model, const Field& u)
{
    const Grid& grid = u.grid();
    double sum = 0.0;
    if (model.psi.is_zero()) {
        const Point origin{};
        for (double v : u.values()) {
            sum += model.F(origin, v);
        }
    }
    else {
        for (std::size_t i = 0; i < u.size(); ++i) {
            sum += model.F(grid.node(i), u[i]);
        }
    }
    return sum * grid.cell_volume();
}

double inner_product(const Field& u, const Field& v)
{
    require_same_grid(u.grid(), v.grid());
    double sum = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        sum += u[i] * v[i];
    }
    return sum * u.grid().cell_volume();
}

double h1_distance_sq(const Field& u, const Field& v)
{
    const Field w = u - v;
    return l2_norm_sq(w) + h1_seminorm_sq(w);
}

double tail_mass(const Field& u, double k)
{
    const Grid& grid = u.grid();
    check_radius(grid, k);
    const double k2 = k * k;
    double sum = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (grid.node_radius_sq(i) >= k2) {
            sum += u[i] * u[i];
        }
    }
    return sum * grid.cell_volume();
}

double weighted_tail_mass(const Field& u, double k)
{
    const Grid& grid = u.grid();
    check_radius(grid, k);
    if (k == 0.0) {
        throw std::invalid_argument("weighted tail mass needs a positive radius");
    }
    const double k2 = k * k;
    double sum = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        sum += cutoff_theta(grid.node_radius_sq(i) / k2) * u[i] * u[i];
    }
    return sum * grid.cell_volume();
}

StepRecord measure(const ModelSpec& model, const Field& u, double t)
{
    StepRecord r;
    r.t = t;
    r.l2_sq = l2_norm_sq(u);
    r.grad_sq = h1_seminorm_sq(u);
    r.lp_p = lp_norm_p(u, model.p);
    r.potential = potential_integral(model, u);
    return r;
}

double select(const StepRecord& r, Quantity q)
{
    switch (q) {
    case Quantity::l2:
        return r.l2_sq;
    case Quantity::grad:
        return r.grad_sq;
    case Quantity::lp:
        return r.lp_p;
    case Quantity::h1:
        return r.l2_sq + r.grad_sq;
    }
    return 0.0;
}

double weighted_time_integral(const Trajectory& traj, double lambda, Quantity q, double from, double to)
{
    const auto& rec = traj.records;
    if (rec.empty()) {
        throw std::invalid_argument("trajectory has no recorded diagnostics");
    }
    double total = 0.0;
    for (std::size_t j = 0; j + 1 < rec.size(); ++j) {
        const double a = std::max(rec[j].t, from);
        const double b = std::min(rec[j + 1].t, to);
        if (b <= a) {
            continue;
        }
        total += (b - a) * std::exp(lambda * rec[j + 1].t) * select(rec[j + 1], q);
    }
    return total;
}

double energy_slack(double c, double dt, double h, double magnitude)
{
    return c * (dt + h * h) * std::max(1.0, magnitude);
}

EnergyCheck energy_residual(const Problem& problem, const Trajectory& traj, double slack_constant)
{
    const ModelSpec& m = problem.model;
    const double lambda = m.lambda;
    const double C = 2.0 * problem.phi1_l1;
    const double h = problem.grid.spacing();
    EnergyCheck out;
    const auto& rec = traj.records;
    for (std::size_t j = 0; j + 1 < rec.size(); ++j) {
        const StepRecord& a = rec[j];
        const StepRecord& b = rec[j + 1];
        const double dt = b.t - a.t;
        const double source = C + 2.0 / lambda * problem.forcing_norm_sq(b.t);
        const double terms[] = {(b.l2_sq - a.l2_sq) / dt, 2.0 * b.grad_sq, 1.5 * lambda * b.l2_sq,
                                2.0 * m.constants.alpha1 * b.lp_p};
        double lhs = 0.0;
        double magnitude = source;
        for (double t : terms) {
            lhs += t;
            magnitude = std::max(magnitude, std::abs(t));
        }
        const double residual = lhs - source;
        const double slack = energy_slack(slack_constant, dt, h, magnitude);
        out.residual.push_back(residual);
        out.slack.push_back(slack);
        if (residual > 0.0) {
            ++out.positive;
        }
        if (residual > slack) {
            ++out.violations;
        }
        out.worst_excess = std::max(out.worst_excess, residual - slack);
    }
    return out;
}

} // namespace rdlab
