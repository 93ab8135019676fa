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

#ifndef RDLAB_ESTIMATES_HPP
#define RDLAB_ESTIMATES_HPP

#include "rdlab/family.hpp"
#include "rdlab/problem.hpp"
#include "rdlab/solver.hpp"
#include "rdlab/trajectory.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rdlab
{

/// Everything a checker needs to generate pullback runs.
struct EstimateSetup
{
    const Problem& problem;
    SolverControls controls;
    TemperedFamily family;
    std::uint64_t seed = 0;
    std::size_t members = 2; ///< family members per horizon
    unsigned jobs = 0;
};

/// One pullback trajectory from tau - horizon to tau.
struct PullbackRun
{
    double horizon = 0.0;
    std::size_t member = 0;
    double initial_radius = 0.0;
    Trajectory traj;
};

struct RunSet
{
    double tau = 0.0;
    std::vector<double> horizons;
    std::size_t members = 0;
    std::vector<PullbackRun> runs; ///< horizon-major order

    const PullbackRun& at(std::size_t horizon_index, std::size_t member) const;
};

/// Runs every (horizon, member) pair concurrently; output order is fixed.
RunSet run_pullbacks(const EstimateSetup& setup, double tau, const std::vector<double>& horizons);

/**
 * Explicit constants of the a priori bounds for one pullback run
 * (anchor tau, horizon t, initial radius r = r(tau - t)).
 */
struct BoundConstants
{
    double lambda = 0.0;
    double tau = 0.0;
    double horizon = 0.0;
    double initial_energy = 0.0;  ///< E0 = e^{lambda(tau - t)} r^2
    double forcing_weighted = 0.0; ///< W = int_{-inf}^{tau} e^{lambda xi} ||g||^2
    double dissipation_source = 0.0; ///< C = 2 ||phi1||_1
    double phi34 = 0.0;            ///< ||phi3||_1 + ||phi4||_1
    double B1 = 0.0; ///< bound on e^{lambda tau}||u(tau)||^2 plus the weighted dissipation integrals
    double B2 = 0.0; ///< bound on e^{lambda s}||u(s)||^2 for s in [tau - 2, tau]
    double B3 = 0.0; ///< bound on the weighted dissipation over (tau - 2, tau)
    double window_l2 = 0.0;   ///< bound on int_{tau-2}^{tau} ||u||^2
    double window_grad = 0.0; ///< bound on int_{tau-2}^{tau} ||grad u||^2
    double window_lp = 0.0;   ///< bound on int_{tau-2}^{tau} ||u||_p^p
    double h1 = 0.0;          ///< bound on ||grad u||^2 + lambda||u||^2 + 2 alpha5 ||u||_p^p at tau
    double ut_window = 0.0;   ///< bound on int_{tau-1}^{tau} ||u_t||^2
    double forcing_derivative = 0.0; ///< int_{tau-1}^{tau} ||g_t||^2
    double ut = 0.0;          ///< bound on ||u_t(tau)||^2

    double absorbing_l2() const;
};

BoundConstants bound_constants(const Problem& problem, double tau, double horizon, double initial_radius);

/// sup |theta'| times the sqrt(2) k / k^2 factor of the cutoff gradient, doubled by Young's inequality.
double cutoff_constant();

/// Bound on int theta(|x|^2/k^2)|u(tau)|^2 for one pullback run.
double tail_bound(const Problem& problem, const BoundConstants& c, double k);

struct EstimateEntry
{
    std::string quantity;
    double horizon = 0.0;
    std::size_t member = 0;
    double radius = 0.0; ///< tail radius; 0 when not applicable
    double bound = 0.0;
    double observed = 0.0;
    double margin = 0.0; ///< bound - observed
    double slack = 0.0;
    bool passed = false;
};

struct EstimateReport
{
    std::string name;
    std::string statement;
    double tau = 0.0;
    std::vector<EstimateEntry> entries;
    std::vector<std::pair<std::string, double>> constants;
    std::vector<std::pair<std::string, double>> summary;
    std::vector<std::string> notes;
    /// Smallest tested horizon from which every entry passes.
    std::optional<double> first_passing_horizon;
    bool passed = false;

    double worst_margin() const;
    std::optional<double> summary_value(const std::string& key) const;
};

EstimateReport check_absorbing_l2(const EstimateSetup& setup, const RunSet& runs);
EstimateReport check_time_integrals(const EstimateSetup& setup, const RunSet& runs);
EstimateReport check_h1_bound(const EstimateSetup& setup, const RunSet& runs);
/// Also reruns the longest horizon at dt/2 and compares the difference quotients (at most 10% apart).
EstimateReport check_ut_bound(const EstimateSetup& setup, const RunSet& runs);
/// radii must lie in [0, L/sqrt(2)]; radius 0 is noted and skipped.
EstimateReport check_tail(const EstimateSetup& setup, const RunSet& runs, double eta, const std::vector<double>& radii);
EstimateReport check_h1_cauchy(const EstimateSetup& setup, const RunSet& runs,
                               const std::vector<std::pair<double, double>>& horizon_pairs);

EstimateReport check_absorbing_l2(const EstimateSetup& setup, double tau, const std::vector<double>& horizons);
EstimateReport check_time_integrals(const EstimateSetup& setup, double tau, double horizon);
EstimateReport check_h1_bound(const EstimateSetup& setup, double tau, const std::vector<double>& horizons);
EstimateReport check_ut_bound(const EstimateSetup& setup, double tau, const std::vector<double>& horizons);
EstimateReport check_tail(const EstimateSetup& setup, double tau, double eta, const std::vector<double>& horizons,
                          const std::vector<double>& radii);
EstimateReport check_h1_cauchy(const EstimateSetup& setup, double tau,
                               const std::vector<std::pair<double, double>>& horizon_pairs);

/// Backward difference quotient (u(tau) - u(tau - dt)) / dt of a run.
Field time_derivative(const Trajectory& traj);

} // namespace rdlab

#endif // RDLAB_ESTIMATES_HPP
