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

#include "rdlab/estimates.hpp"

#include "rdlab/energy.hpp"
#include "rdlab/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <stdexcept>

namespace rdlab
{

namespace
{

EstimateEntry make_entry(const EstimateSetup& setup, std::string quantity, const PullbackRun& run, double bound,
                         double observed, double radius = 0.0)
{
    EstimateEntry e;
    e.quantity = std::move(quantity);
    e.horizon = run.horizon;
    e.member = run.member;
    e.radius = radius;
    e.bound = bound;
    e.observed = observed;
    e.margin = bound - observed;
    e.slack = energy_slack(setup.controls.slack_constant, setup.controls.dt, setup.problem.grid.spacing(),
                           std::max(std::abs(bound), std::abs(observed)));
    e.passed = std::isfinite(e.margin) && e.margin >= -e.slack;
    return e;
}

void finalize(EstimateReport& report)
{
    report.passed = !report.entries.empty() &&
                    std::all_of(report.entries.begin(), report.entries.end(), [](const auto& e) { return e.passed; });
    std::set<double> horizons;
    for (const auto& e : report.entries) {
        horizons.insert(e.horizon);
    }
    for (double h : horizons) {
        const bool ok = std::all_of(report.entries.begin(), report.entries.end(),
                                    [h](const auto& e) { return e.horizon < h || e.passed; });
        if (ok) {
            report.first_passing_horizon = h;
            break;
        }
    }
}

void add_common_constants(EstimateReport& report, const Problem& problem, double tau)
{
    report.constants.emplace_back("lambda", problem.model.lambda);
    report.constants.emplace_back("forcing_weighted_integral", problem.weighted_forcing(tau));
    report.constants.emplace_back("dissipation_source_C", 2.0 * problem.phi1_l1);
}

void require_long_horizons(const RunSet& runs, double minimum, const char* what)
{
    for (double h : runs.horizons) {
        if (h < minimum) {
            throw std::invalid_argument(std::string(what) + " needs horizons of at least " +
                                        std::to_string(minimum));
        }
    }
}

double norm(const Field& u)
{
    return std::sqrt(l2_norm_sq(u));
}

} // namespace

const PullbackRun& RunSet::at(std::size_t horizon_index, std::size_t member) const
{
    return runs.at(horizon_index * members + member);
}

RunSet run_pullbacks(const EstimateSetup& setup, double tau, const std::vector<double>& horizons)
{
    if (horizons.empty()) {
        throw std::invalid_argument("no pullback horizons given");
    }
    for (std::size_t i = 0; i < horizons.size(); ++i) {
        if (!(horizons[i] > 0.0) || (i > 0 && !(horizons[i] > horizons[i - 1]))) {
            throw std::invalid_argument("pullback horizons must be positive and increasing");
        }
    }
    if (setup.members == 0) {
        throw std::invalid_argument("at least one family member is needed");
    }
    const auto family_errors = setup.family.validate(setup.problem.model.lambda);
    if (!family_errors.empty()) {
        throw std::invalid_argument(family_errors.front());
    }
    SolverControls controls = setup.controls;
    controls.snapshot_every = 0;
    const Stepper stepper(setup.problem, controls);

    RunSet out;
    out.tau = tau;
    out.horizons = horizons;
    out.members = setup.members;
    const std::size_t count = horizons.size() * setup.members;
    std::vector<std::optional<PullbackRun>> slots(count);
    parallel_for(count, setup.jobs, [&](std::size_t k) {
        const double h = horizons[k / setup.members];
        const std::size_t member = k % setup.members;
        const double start = tau - h;
        const Field u0 = family_member(setup.family, setup.problem.grid, start, member, setup.seed);
        slots[k].emplace(PullbackRun{h, member, setup.family.radius(start), stepper.evolve(u0, start, tau)});
    });
    out.runs.reserve(count);
    for (auto& s : slots) {
        out.runs.push_back(std::move(*s));
    }
    return out;
}

double BoundConstants::absorbing_l2() const
{
    const double decay = std::exp(-lambda * tau);
    return decay * initial_energy + 2.0 / lambda * decay * forcing_weighted + dissipation_source / lambda;
}

BoundConstants bound_constants(const Problem& problem, double tau, double horizon, double initial_radius)
{
    const ModelSpec& m = problem.model;
    const StructuralConstants& a = m.constants;
    BoundConstants c;
    const double lambda = m.lambda;
    c.lambda = lambda;
    c.tau = tau;
    c.horizon = horizon;
    c.initial_energy = std::exp(lambda * (tau - horizon)) * initial_radius * initial_radius;
    c.forcing_weighted = problem.weighted_forcing(tau);
    c.dissipation_source = 2.0 * problem.phi1_l1;
    c.phi34 = problem.phi3_l1 + problem.phi4_l1;

    const double W = c.forcing_weighted;
    const double C = c.dissipation_source;
    const double grow = std::exp(lambda * tau);
    const double decay = std::exp(-lambda * tau);
    c.B1 = c.initial_energy + 2.0 / lambda * W + C / lambda * grow;
    c.B2 = c.initial_energy + C / lambda * grow + 2.0 / lambda * W;
    c.B3 = c.B2 + 2.0 / lambda * W + C / lambda * grow;

    const double window = std::exp(2.0 * lambda) * decay;
    c.window_l2 = window * 2.0 * c.B2;
    c.window_grad = window * c.B3 / 2.0;
    c.window_lp = window * c.B3 / (2.0 * a.alpha1);

    const double dissipation = c.window_grad + lambda * c.window_l2 + 2.0 * a.alpha4 * c.window_lp;
    c.h1 = dissipation + std::exp(lambda) * decay * W + 2.0 * c.phi34;

    const double ratio = std::max(1.0, a.alpha4 / a.alpha5);
    const double at_tau_minus_one = dissipation + window * W + 2.0 * c.phi34;
    c.ut_window = std::exp(lambda) * decay * W + 2.0 * c.phi34 + ratio * at_tau_minus_one;
    c.forcing_derivative = derivative_sq_integral(problem.forcing, tau - 1.0, tau) * problem.rho_sq;
    c.ut = (1.0 + 2.0 * a.alpha3) * c.ut_window + c.forcing_derivative / lambda;
    return c;
}

double cutoff_constant()
{
    return 2.0 * std::numbers::sqrt2 * cutoff_slope_bound;
}

double tail_bound(const Problem& problem, const BoundConstants& c, double k)
{
    if (!(k > 0.0)) {
        throw std::invalid_argument("tail bound needs a positive radius");
    }
    const double lambda = c.lambda;
    const double decay = std::exp(-lambda * c.tau);
    const int n = problem.grid.dimension();
    const double phi1_tail = problem.model.phi1.l1_tail(n, k);
    const double forcing_tail = forcing_tail_integral(problem.forcing, n, lambda, c.tau, k);
    const double h1_weighted = c.B1 / std::min(2.0, lambda / 2.0);
    return decay * c.initial_energy + 2.0 * phi1_tail / lambda + decay * forcing_tail / lambda +
           cutoff_constant() / k * decay * h1_weighted;
}

double EstimateReport::worst_margin() const
{
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& e : entries) {
        worst = std::min(worst, e.margin);
    }
    return worst;
}

std::optional<double> EstimateReport::summary_value(const std::string& key) const
{
    for (const auto& [k, v] : summary) {
        if (k == key) {
            return v;
        }
    }
    return std::nullopt;
}

Field time_derivative(const Trajectory& traj)
{
    Field d = traj.final_state - traj.previous_state;
    d *= 1.0 / traj.last_step;
    return d;
}

EstimateReport check_absorbing_l2(const EstimateSetup& setup, const RunSet& runs)
{
    const Problem& problem = setup.problem;
    const double lambda = problem.model.lambda;
    EstimateReport report;
    report.name = "absorbing_l2";
    report.statement = "||u(tau)||^2 <= e^{-lambda t} r(tau-t)^2 + (2/lambda) e^{-lambda tau} W + 2||phi1||_1/lambda";
    report.tau = runs.tau;
    add_common_constants(report, problem, runs.tau);
    const double W = problem.weighted_forcing(runs.tau);
    std::optional<double> absorbed;
    for (const auto& run : runs.runs) {
        const BoundConstants c = bound_constants(problem, runs.tau, run.horizon, run.initial_radius);
        report.entries.push_back(
            make_entry(setup, "l2_sq", run, c.absorbing_l2(), run.traj.records.back().l2_sq));
        const double data_term = std::exp(-lambda * runs.tau) * c.initial_energy;
        if (!absorbed && data_term <= std::exp(-lambda * runs.tau) * W / lambda) {
            absorbed = run.horizon;
        }
    }
    report.summary.emplace_back("horizon_initial_data_absorbed",
                                absorbed.value_or(std::numeric_limits<double>::quiet_NaN()));
    finalize(report);
    return report;
}

EstimateReport check_time_integrals(const EstimateSetup& setup, const RunSet& runs)
{
    require_long_horizons(runs, 2.0, "time integral check");
    const Problem& problem = setup.problem;
    const ModelSpec& m = problem.model;
    const double lambda = m.lambda;
    const double tau = runs.tau;
    EstimateReport report;
    report.name = "time_integrals";
    report.statement = "weighted dissipation integrals over (tau-t, tau) and unweighted integrals over (tau-2, tau)";
    report.tau = tau;
    add_common_constants(report, problem, tau);
    report.constants.emplace_back("window_factor_e^{2 lambda}", std::exp(2.0 * lambda));

    for (const auto& run : runs.runs) {
        const BoundConstants c = bound_constants(problem, tau, run.horizon, run.initial_radius);
        const Trajectory& tr = run.traj;
        const double w_grad = weighted_time_integral(tr, lambda, Quantity::grad);
        const double w_l2 = weighted_time_integral(tr, lambda, Quantity::l2);
        const double w_lp = weighted_time_integral(tr, lambda, Quantity::lp);
        const double endpoint = std::exp(lambda * tau) * tr.records.back().l2_sq;
        const double sum = endpoint + 2.0 * w_grad + lambda / 2.0 * w_l2 + 2.0 * m.constants.alpha1 * w_lp;
        report.entries.push_back(make_entry(setup, "weighted_energy_sum", run, c.B1, sum));
        report.entries.push_back(make_entry(setup, "weighted_lp", run, c.B1 / (2.0 * m.constants.alpha1), w_lp));
        report.entries.push_back(
            make_entry(setup, "weighted_h1", run, c.B1 / std::min(2.0, lambda / 2.0), w_l2 + w_grad));
        report.entries.push_back(make_entry(setup, "window_l2", run, c.window_l2,
                                            weighted_time_integral(tr, 0.0, Quantity::l2, tau - 2.0, tau)));
        report.entries.push_back(make_entry(setup, "window_grad", run, c.window_grad,
                                            weighted_time_integral(tr, 0.0, Quantity::grad, tau - 2.0, tau)));
        report.entries.push_back(make_entry(setup, "window_lp", run, c.window_lp,
                                            weighted_time_integral(tr, 0.0, Quantity::lp, tau - 2.0, tau)));
    }
    finalize(report);
    return report;
}

EstimateReport check_h1_bound(const EstimateSetup& setup, const RunSet& runs)
{
    require_long_horizons(runs, 2.0, "H1 bound check");
    const Problem& problem = setup.problem;
    const ModelSpec& m = problem.model;
    const double lambda = m.lambda;
    EstimateReport report;
    report.name = "h1_bound";
    report.statement = "||grad u(tau)||^2 + lambda||u(tau)||^2 + 2 alpha5 ||u(tau)||_p^p <= window integrals + "
                       "e^{lambda} e^{-lambda tau} W + 2||phi3 + phi4||_1";
    report.tau = runs.tau;
    add_common_constants(report, problem, runs.tau);
    report.constants.emplace_back("alpha4", m.constants.alpha4);
    report.constants.emplace_back("alpha5", m.constants.alpha5);
    report.constants.emplace_back("phi3_plus_phi4_l1", problem.phi3_l1 + problem.phi4_l1);
    for (const auto& run : runs.runs) {
        const BoundConstants c = bound_constants(problem, runs.tau, run.horizon, run.initial_radius);
        const StepRecord& r = run.traj.records.back();
        const double observed = r.grad_sq + lambda * r.l2_sq + 2.0 * m.constants.alpha5 * r.lp_p;
        report.entries.push_back(make_entry(setup, "h1_energy", run, c.h1, observed));
    }
    finalize(report);
    return report;
}

EstimateReport check_ut_bound(const EstimateSetup& setup, const RunSet& runs)
{
    require_long_horizons(runs, 2.0, "time derivative check");
    const Problem& problem = setup.problem;
    const ModelSpec& m = problem.model;
    EstimateReport report;
    report.name = "ut_bound";
    report.statement = "||u_t(tau)||^2 <= (1 + 2 alpha3) int_{tau-1}^{tau} ||u_t||^2 + (1/lambda) int_{tau-1}^{tau} "
                       "||g_t||^2";
    report.tau = runs.tau;
    add_common_constants(report, problem, runs.tau);
    report.constants.emplace_back("alpha3", m.constants.alpha3);
    report.constants.emplace_back("alpha4_over_alpha5", m.constants.alpha4 / m.constants.alpha5);
    report.constants.emplace_back("forcing_derivative_integral",
                                  derivative_sq_integral(problem.forcing, runs.tau - 1.0, runs.tau) * problem.rho_sq);
    for (const auto& run : runs.runs) {
        const BoundConstants c = bound_constants(problem, runs.tau, run.horizon, run.initial_radius);
        report.entries.push_back(make_entry(setup, "ut_sq", run, c.ut, l2_norm_sq(time_derivative(run.traj))));
    }

    // Richardson-style check of the difference quotient on the longest horizon.
    const std::size_t last = runs.horizons.size() - 1;
    const PullbackRun& base = runs.at(last, 0);
    SolverControls half = setup.controls;
    half.dt = setup.controls.dt / 2.0;
    half.snapshot_every = 0;
    const double start = runs.tau - base.horizon;
    const Field u0 = family_member(setup.family, problem.grid, start, base.member, setup.seed);
    const Trajectory fine = Stepper(problem, half).evolve(u0, start, runs.tau);
    const Field d_coarse = time_derivative(base.traj);
    const Field d_fine = time_derivative(fine);
    const double fine_norm = norm(d_fine);
    const double gap = norm(d_coarse - d_fine);
    const double relative = gap == 0.0 ? 0.0 : gap / std::max(fine_norm, std::numeric_limits<double>::min());
    EstimateEntry refine = make_entry(setup, "ut_refinement_relative_difference", base, 0.1, relative);
    refine.slack = 0.0;
    refine.passed = relative <= 0.1;
    report.entries.push_back(refine);
    report.summary.emplace_back("ut_norm_dt", norm(d_coarse));
    report.summary.emplace_back("ut_norm_half_dt", fine_norm);
    report.summary.emplace_back("ut_refinement_relative_difference", relative);
    finalize(report);
    return report;
}

EstimateReport check_tail(const EstimateSetup& setup, const RunSet& runs, double eta, const std::vector<double>& radii)
{
    const Problem& problem = setup.problem;
    const Grid& grid = problem.grid;
    if (!(eta > 0.0)) {
        throw std::invalid_argument("tail threshold eta must be positive");
    }
    const double k_max = grid.radius() / std::numbers::sqrt2;
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (radii[i] < 0.0 || radii[i] > k_max * (1.0 + 1e-12)) {
            throw std::invalid_argument("tail radius " + std::to_string(radii[i]) + " outside [0, L/sqrt(2)]");
        }
        if (i > 0 && !(radii[i] > radii[i - 1])) {
            throw std::invalid_argument("tail radii must be increasing");
        }
    }
    EstimateReport report;
    report.name = "tail";
    report.statement = "int theta(|x|^2/k^2)|u(tau)|^2 <= e^{-lambda t} r^2 + 2||phi1||_{L1(|x|>=k)}/lambda + "
                       "(1/lambda) e^{-lambda tau} G_k + (C_theta/k) e^{-lambda tau} int e^{lambda xi}||u||_{H1}^2";
    report.tau = runs.tau;
    add_common_constants(report, problem, runs.tau);
    report.constants.emplace_back("C_theta", cutoff_constant());
    report.constants.emplace_back("eta", eta);

    std::vector<double> positive;
    for (double k : radii) {
        if (k == 0.0) {
            report.notes.emplace_back("radius 0 skipped: radius too small for the cutoff bound");
        }
        else {
            positive.push_back(k);
        }
    }

    bool monotone = true;
    // plain tail mass at radius k, indexed [run][radius]
    std::vector<std::vector<double>> tails(runs.runs.size());
    for (std::size_t r = 0; r < runs.runs.size(); ++r) {
        const PullbackRun& run = runs.runs[r];
        const BoundConstants c = bound_constants(problem, runs.tau, run.horizon, run.initial_radius);
        const Field& u = run.traj.final_state;
        double previous = std::numeric_limits<double>::infinity();
        for (double k : positive) {
            const double bound = tail_bound(problem, c, k);
            report.entries.push_back(make_entry(setup, "weighted_tail", run, bound, weighted_tail_mass(u, k), k));
            const double outer = tail_mass(u, std::min(std::numbers::sqrt2 * k, grid.radius()));
            report.entries.push_back(make_entry(setup, "tail_at_sqrt2_k", run, bound, outer, k));
            const double plain = tail_mass(u, k);
            if (plain > previous) {
                monotone = false;
            }
            previous = plain;
            tails[r].push_back(plain);
        }
    }

    std::optional<double> K;
    std::optional<double> T;
    for (std::size_t hi = 0; hi < runs.horizons.size() && !K; ++hi) {
        for (std::size_t ki = 0; ki < positive.size(); ++ki) {
            bool ok = true;
            for (std::size_t r = 0; r < runs.runs.size() && ok; ++r) {
                if (runs.runs[r].horizon < runs.horizons[hi]) {
                    continue;
                }
                for (std::size_t kj = ki; kj < positive.size(); ++kj) {
                    ok = ok && tails[r][kj] <= eta;
                }
            }
            if (ok) {
                K = positive[ki];
                T = runs.horizons[hi];
                break;
            }
        }
    }
    const double nan = std::numeric_limits<double>::quiet_NaN();
    report.summary.emplace_back("empirical_K", K.value_or(nan));
    report.summary.emplace_back("empirical_T", T.value_or(nan));
    report.summary.emplace_back("tail_nonincreasing_in_k", monotone ? 1.0 : 0.0);
    if (!K) {
        report.notes.emplace_back("no tested (k, t) brings the tail below eta");
    }
    finalize(report);
    report.passed = report.passed && K.has_value() && monotone;
    return report;
}

EstimateReport check_h1_cauchy(const EstimateSetup& setup, const RunSet& runs,
                               const std::vector<std::pair<double, double>>& horizon_pairs)
{
    require_long_horizons(runs, 2.0, "H1 Cauchy check");
    const Problem& problem = setup.problem;
    const ModelSpec& m = problem.model;
    const double lambda = m.lambda;
    EstimateReport report;
    report.name = "h1_cauchy";
    report.statement = "||grad w||^2 + lambda||w||^2 <= 2 C_t ||w|| + alpha3 ||w||^2 for w the gap of two endpoints";
    report.tau = runs.tau;
    add_common_constants(report, problem, runs.tau);
    report.constants.emplace_back("alpha3", m.constants.alpha3);

    auto index_of = [&](double h) {
        for (std::size_t i = 0; i < runs.horizons.size(); ++i) {
            if (runs.horizons[i] == h) {
                return i;
            }
        }
        throw std::invalid_argument("horizon " + std::to_string(h) + " was not run");
    };
    if (horizon_pairs.empty()) {
        throw std::invalid_argument("H1 Cauchy check needs at least one horizon pair");
    }
    for (const auto& [tn, tm] : horizon_pairs) {
        if (!(tn < tm)) {
            throw std::invalid_argument("H1 Cauchy pairs need t_n < t_m");
        }
        const std::size_t in = index_of(tn);
        const std::size_t im = index_of(tm);
        for (std::size_t member = 0; member < runs.members; ++member) {
            const PullbackRun& a = runs.at(in, member);
            const PullbackRun& b = runs.at(im, member);
            const double ct_a = bound_constants(problem, runs.tau, a.horizon, a.initial_radius).ut;
            const double ct_b = bound_constants(problem, runs.tau, b.horizon, b.initial_radius).ut;
            const double Ct = std::sqrt(std::max(ct_a, ct_b));
            const Field w = a.traj.final_state - b.traj.final_state;
            const double w_norm = norm(w);
            const double observed = h1_seminorm_sq(w) + lambda * w_norm * w_norm;
            const double bound = 2.0 * Ct * w_norm + m.constants.alpha3 * w_norm * w_norm;
            EstimateEntry e = make_entry(setup, "h1_gap", b, bound, observed);
            e.horizon = tm;
            report.entries.push_back(e);
            report.summary.emplace_back("l2_gap_" + std::to_string(static_cast<int>(tn)) + "_" +
                                            std::to_string(static_cast<int>(tm)) + "_member_" +
                                            std::to_string(member),
                                        w_norm);
        }
    }
    finalize(report);
    return report;
}

EstimateReport check_absorbing_l2(const EstimateSetup& setup, double tau, const std::vector<double>& horizons)
{
    return check_absorbing_l2(setup, run_pullbacks(setup, tau, horizons));
}

EstimateReport check_time_integrals(const EstimateSetup& setup, double tau, double horizon)
{
    return check_time_integrals(setup, run_pullbacks(setup, tau, {horizon}));
}

EstimateReport check_h1_bound(const EstimateSetup& setup, double tau, const std::vector<double>& horizons)
{
    return check_h1_bound(setup, run_pullbacks(setup, tau, horizons));
}

EstimateReport check_ut_bound(const EstimateSetup& setup, double tau, const std::vector<double>& horizons)
{
    return check_ut_bound(setup, run_pullbacks(setup, tau, horizons));
}

EstimateReport check_tail(const EstimateSetup& setup, double tau, double eta, const std::vector<double>& horizons,
                          const std::vector<double>& radii)
{
    return check_tail(setup, run_pullbacks(setup, tau, horizons), eta, radii);
}

EstimateReport check_h1_cauchy(const EstimateSetup& setup, double tau,
                               const std::vector<std::pair<double, double>>& horizon_pairs)
{
    std::set<double> hs;
    for (const auto& [a, b] : horizon_pairs) {
        hs.insert(a);
        hs.insert(b);
    }
    return check_h1_cauchy(setup, run_pullbacks(setup, tau, {hs.begin(), hs.end()}), horizon_pairs);
}

} // namespace rdlab
