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

#include "rdlab/experiment.hpp"

#include "rdlab/attractor.hpp"
#include "rdlab/energy.hpp"
#include "rdlab/estimates.hpp"
#include "rdlab/io.hpp"
#include "rdlab/problem.hpp"
#include "rdlab/structure.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <functional>

namespace rdlab
{

namespace
{

constexpr std::uint64_t second_seed_stream = 0x5eed;
constexpr std::uint64_t attraction_seed_stream = 0xa77;

struct Context
{
    const ExperimentConfig& cfg;
    const Problem& problem;
    std::filesystem::path out;
    std::ostream* log;

    void say(const std::string& line) const
    {
        if (log != nullptr) {
            *log << line << '\n';
        }
    }
};

bool task_structure(const Context& ctx)
{
    const auto& t = ctx.cfg.structure;
    const StructureReport r = verify_structure(ctx.problem.model, ctx.problem.grid, t.s_min, t.s_max, t.samples);
    write_text(ctx.out / "structure.json", dump(to_json(r)));
    for (const auto& c : r.conditions) {
        ctx.say(fmt::format("  {:<22} {}  worst margin {:.6g}", c.name, c.passed ? "ok  " : "FAIL", c.worst_margin));
    }
    return r.passed();
}

bool task_simulate(const Context& ctx)
{
    const ExperimentConfig& cfg = ctx.cfg;
    SolverControls controls = cfg.solver;
    controls.snapshot_every = cfg.simulate.snapshot_every;
    const Field u0 = family_member(cfg.family, ctx.problem.grid, cfg.simulate.t0, cfg.simulate.member, cfg.seed);
    const Trajectory traj = Stepper(ctx.problem, controls).evolve(u0, cfg.simulate.t0, cfg.simulate.t1);

    Json j;
    j["t0"] = traj.t0;
    j["t1"] = traj.t1;
    j["dt"] = traj.dt;
    j["steps"] = traj.steps();
    j["initial_radius"] = cfg.family.radius(cfg.simulate.t0);
    j["final_l2_sq"] = traj.records.back().l2_sq;
    j["final_grad_sq"] = traj.records.back().grad_sq;
    bool passed = true;
    if (controls.monitor_energy) {
        const EnergyCheck e = energy_residual(ctx.problem, traj, controls.slack_constant);
        passed = e.violations == 0;
        j["energy"] = {{"slack_constant", controls.slack_constant},
                       {"positive_residuals", e.positive},
                       {"violations", e.violations},
                       {"worst_excess", json_number(e.worst_excess)},
                       {"passed", passed}};
        write_text(ctx.out / "trajectory.csv", trajectory_csv(traj, &e));
        ctx.say(fmt::format("  {} steps, energy residual violations {}", traj.steps(), e.violations));
    }
    else {
        write_text(ctx.out / "trajectory.csv", trajectory_csv(traj, nullptr));
    }
    j["passed"] = passed;
    std::string dat = "# t l2_sq grad_sq lp_p potential\n";
    for (const auto& r : traj.records) {
        dat += fmt::format("{:.17g} {:.17g} {:.17g} {:.17g} {:.17g}\n", r.t, r.l2_sq, r.grad_sq, r.lp_p, r.potential);
    }
    write_text(ctx.out / "trajectory.dat", dat);
    write_text(ctx.out / "snapshots.csv", snapshots_csv(traj));
    write_text(ctx.out / "simulate.json", dump(j));
    return passed;
}

bool task_estimates(const Context& ctx)
{
    const ExperimentConfig& cfg = ctx.cfg;
    const EstimatesTask& t = cfg.estimates;
    EstimateSetup setup{ctx.problem, cfg.solver, cfg.family, cfg.seed, t.members, cfg.jobs};
    const RunSet runs = run_pullbacks(setup, t.tau, t.horizons);
    std::vector<EstimateReport> reports;
    reports.push_back(check_absorbing_l2(setup, runs));
    reports.push_back(check_time_integrals(setup, runs));
    reports.push_back(check_h1_bound(setup, runs));
    reports.push_back(check_ut_bound(setup, runs));
    reports.push_back(check_tail(setup, runs, t.eta, cfg.tail_radii()));
    reports.push_back(check_h1_cauchy(setup, runs, t.cauchy_pairs));

    Json j;
    j["tau"] = t.tau;
    j["horizons"] = t.horizons;
    j["members"] = t.members;
    bool passed = true;
    Json list = Json::array();
    std::string dat = "# check quantity horizon member radius bound observed margin passed\n";
    for (const auto& r : reports) {
        passed = passed && r.passed;
        list.push_back(to_json(r));
        ctx.say(fmt::format("  {:<15} {}  worst margin {:.6g}", r.name, r.passed ? "ok  " : "FAIL", r.worst_margin()));
        for (const auto& e : r.entries) {
            dat += fmt::format("{} {} {:.17g} {} {:.17g} {:.17g} {:.17g} {:.17g} {}\n", r.name, e.quantity, e.horizon,
                               e.member, e.radius, e.bound, e.observed, e.margin, e.passed ? 1 : 0);
        }
    }
    j["passed"] = passed;
    j["reports"] = list;
    write_text(ctx.out / "estimates.json", dump(j));
    write_text(ctx.out / "estimates.dat", dat);
    return passed;
}

bool task_attractor(const Context& ctx)
{
    const ExperimentConfig& cfg = ctx.cfg;
    const AttractorTask& t = cfg.attractor;
    AttractorSetup setup{ctx.problem, cfg.solver, cfg.family, cfg.seed, t.ensemble, cfg.jobs};
    const AttractorApprox A = approximate_attractor(setup, t.tau, t.ladder, t.tol, t.stop_early);
    save_attractor(A, ctx.out / "attractor");
    ctx.say(fmt::format("  approximation {} at horizon {}, diameter {:.6g}", A.converged ? "converged" : "UNCONVERGED",
                        A.horizon, A.diameter));

    Json j;
    j["approximation"] = to_json(A);
    bool passed = A.converged;
    std::string dat = "# from_horizon to_horizon forward backward gap\n";
    for (const auto& s : A.history) {
        dat += fmt::format("{:.17g} {:.17g} {:.17g} {:.17g} {:.17g}\n", s.from_horizon, s.to_horizon, s.forward,
                           s.backward, s.gap);
    }
    write_text(ctx.out / "attractor_history.dat", dat);

    if (t.seed_check) {
        AttractorSetup other = setup;
        other.seed = mix_seed(cfg.seed, second_seed_stream);
        const AttractorApprox B = approximate_attractor(other, t.tau, t.ladder, t.tol, t.stop_early);
        const double forward = hausdorff_semidistance(A.members, B.members, NormKind::l2);
        const double backward = hausdorff_semidistance(B.members, A.members, NormKind::l2);
        const bool ok = B.converged && std::max(forward, backward) <= 2.0 * t.tol;
        j["seed_check"] = {{"seed", other.seed},
                           {"converged", B.converged},
                           {"forward", forward},
                           {"backward", backward},
                           {"threshold", 2.0 * t.tol},
                           {"passed", ok}};
        passed = passed && ok;
        ctx.say(fmt::format("  second seed: mutual semi-distance {:.6g}", std::max(forward, backward)));
    }

    const InvarianceReport inv =
        check_invariance(setup, A, t.invariance_shift, t.invariance_tol, t.invariance_fraction);
    j["invariance"] = to_json(inv);
    passed = passed && inv.passed;
    ctx.say(fmt::format("  invariance: {:.6g} / {:.6g} (threshold {:.6g})", inv.forward, inv.backward, inv.threshold));

    Json attraction = Json::array();
    const std::uint64_t seed = mix_seed(cfg.seed, attraction_seed_stream);
    for (NormKind norm : {NormKind::l2, NormKind::h1}) {
        const AttractionReport r = check_attraction(setup, A, t.attraction_family, t.attraction_horizons, norm,
                                                    t.attraction_members, seed, t.attraction_tol);
        attraction.push_back(to_json(r));
        passed = passed && r.passed;
        ctx.say(fmt::format("  attraction in {}: final distance {:.6g}", to_string(norm), r.distances.back()));
    }
    j["attraction"] = attraction;
    j["passed"] = passed;
    write_text(ctx.out / "attractor.json", dump(j));
    return passed;
}

} // namespace

std::string to_string(TaskStatus s)
{
    switch (s) {
    case TaskStatus::passed:
        return "pass";
    case TaskStatus::failed:
        return "fail";
    case TaskStatus::error:
        return "error";
    }
    return "error";
}

int ExperimentResult::exit_code() const
{
    bool failed = false;
    for (const auto& t : tasks) {
        if (t.status == TaskStatus::error) {
            return 3;
        }
        failed = failed || t.status == TaskStatus::failed;
    }
    return failed ? 1 : 0;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg, const std::filesystem::path& out,
                                const std::vector<std::string>& tasks, std::ostream* log)
{
    std::filesystem::create_directories(out);
    write_text(out / "config.resolved.yaml", emit_config(cfg));

    const Problem problem(cfg.grid(), cfg.model, cfg.forcing);
    const Context ctx{cfg, problem, out, log};
    const std::vector<std::pair<std::string, std::function<bool(const Context&)>>> table{
        {"verify-structure", task_structure},
        {"simulate", task_simulate},
        {"verify-estimates", task_estimates},
        {"attractor", task_attractor},
    };

    ExperimentResult result;
    for (const auto& [name, fn] : table) {
        if (std::find(tasks.begin(), tasks.end(), name) == tasks.end()) {
            continue;
        }
        ctx.say(name);
        TaskOutcome outcome;
        outcome.name = name;
        try {
            outcome.status = fn(ctx) ? TaskStatus::passed : TaskStatus::failed;
        }
        catch (const std::exception& e) {
            outcome.status = TaskStatus::error;
            outcome.message = e.what();
            ctx.say(std::string("  error: ") + e.what());
        }
        result.tasks.push_back(outcome);
    }

    Json j;
    Json list = Json::array();
    for (const auto& t : result.tasks) {
        list.push_back({{"name", t.name}, {"status", to_string(t.status)}, {"message", t.message}});
    }
    j["tasks"] = list;
    j["exit_code"] = result.exit_code();
    write_text(out / "results.json", dump(j));
    return result;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg, const std::filesystem::path& out, std::ostream* log)
{
    return run_experiment(cfg, out, cfg.tasks, log);
}

} // namespace rdlab
