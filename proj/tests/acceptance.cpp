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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "oracles.hpp"

#include "rdlab/attractor.hpp"
#include "rdlab/config.hpp"
#include "rdlab/energy.hpp"
#include "rdlab/estimates.hpp"
#include "rdlab/experiment.hpp"
#include "rdlab/family.hpp"
#include "rdlab/io.hpp"
#include "rdlab/report.hpp"
#include "rdlab/structure.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <filesystem>
#include <functional>
#include <iostream>
#include <limits>
#include <memory>
#include <string>
#include <vector>

using namespace rdlab;
namespace fs = std::filesystem;

namespace
{

const fs::path config_dir = RDLAB_CONFIG_DIR;

struct Verdict
{
    bool passed = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (!detail.empty()) {
            detail += "; ";
        }
        detail += what + (ok ? "" : " [failed]");
        passed = passed && ok;
    }
};

std::string g(double v)
{
    return fmt::format("{:.4g}", v);
}

ExperimentConfig showcase()
{
    return load_config(config_dir / "showcase_1d.yaml");
}

bool entries_hold(const EstimateReport& r, double min_horizon, const std::string& quantity, double& worst)
{
    std::size_t matched = 0;
    worst = std::numeric_limits<double>::infinity();
    for (const auto& e : r.entries) {
        if (e.horizon >= min_horizon && e.quantity == quantity) {
            ++matched;
            worst = std::min(worst, e.margin);
        }
    }
    return matched > 0 && worst >= 0.0;
}

Verdict linear_decay()
{
    Verdict v;
    const ExperimentConfig cfg = showcase();
    ModelSpec m;
    m.lambda = cfg.model.lambda;
    m.p = 2.0;
    m.beta = 0.0;
    const Grid grid = cfg.grid();
    const Problem problem(grid, m, ForcingSpec::zero());
    SolverControls c;
    c.dt = 1e-3;
    const Field phi = first_eigenfunction(grid);
    const Trajectory tr = Stepper(problem, c).evolve(phi, 0.0, 5.0);
    const double rate = m.lambda + first_eigenvalue(grid);
    const double ratio = std::sqrt(l2_norm_sq(tr.final_state) / l2_norm_sq(phi));
    const double discrete = std::pow(1.0 + c.dt * rate, -static_cast<double>(tr.steps()));
    const double rel = std::abs(ratio / discrete - 1.0);
    v.require(rel <= 1e-10, "discrete factor rel err " + g(rel));
    const double rate_err = std::abs(-std::log(ratio) / 5.0 / rate - 1.0);
    v.require(rate_err <= 1e-3, "continuum rate rel err " + g(rate_err));
    return v;
}

Verdict energy_identity()
{
    Verdict v;
    const ExperimentConfig cfg = showcase();
    const Problem problem(cfg.grid(), cfg.model, cfg.forcing);
    const Field u0 = family_member(cfg.family, problem.grid, -20.0, 0, cfg.seed);
    const Trajectory tr = Stepper(problem, cfg.solver).evolve(u0, -20.0, 0.0);
    const EnergyCheck e = energy_residual(problem, tr, 10.0);
    bool within = true;
    for (std::size_t j = 0; j < e.residual.size(); ++j) {
        within = within && e.residual[j] <= e.slack[j];
    }
    v.require(within && e.violations == 0,
              fmt::format("{} steps, {} violations, worst excess {}", tr.steps(), e.violations, g(e.worst_excess)));
    return v;
}

struct EstimateRuns
{
    ExperimentConfig cfg = showcase();
    Problem problem{cfg.grid(), cfg.model, cfg.forcing};
    EstimateSetup setup{problem, cfg.solver, cfg.family, cfg.seed, cfg.estimates.members, cfg.jobs};
    RunSet runs = run_pullbacks(setup, cfg.estimates.tau, cfg.estimates.horizons);
};

Verdict absorbing(const EstimateRuns& er)
{
    Verdict v;
    const EstimateReport r = check_absorbing_l2(er.setup, er.runs);
    double worst = 0.0;
    const bool ok = entries_hold(r, 10.0, "l2_sq", worst);
    v.require(ok, "min margin at horizons >= 10: " + g(worst));
    return v;
}

Verdict h1_and_ut(const EstimateRuns& er)
{
    Verdict v;
    double worst = 0.0;
    const EstimateReport h1 = check_h1_bound(er.setup, er.runs);
    const bool h1_ok = entries_hold(h1, 10.0, "h1_energy", worst);
    v.require(h1_ok, "H1 min margin " + g(worst));
    const EstimateReport ut = check_ut_bound(er.setup, er.runs);
    const bool ut_ok = entries_hold(ut, 10.0, "ut_sq", worst);
    v.require(ut_ok, "u_t min margin " + g(worst));
    double rel = std::numeric_limits<double>::infinity();
    for (const auto& e : ut.entries) {
        if (e.quantity == "ut_refinement_relative_difference") {
            rel = e.observed;
        }
    }
    v.require(rel <= 0.1, "u_t dt vs dt/2 rel diff " + g(rel));
    return v;
}

Verdict tails(const EstimateRuns& er)
{
    Verdict v;
    const double L = er.cfg.radius;
    const EstimateReport r = check_tail(er.setup, er.runs, er.cfg.estimates.eta, er.cfg.tail_radii());
    const auto K = r.summary_value("empirical_K");
    const auto T = r.summary_value("empirical_T");
    v.require(K.has_value() && T.has_value() && *K <= L / std::sqrt(2.0),
              "K = " + (K ? g(*K) : std::string("none")) + ", T = " + (T ? g(*T) : std::string("none")));
    const auto mono = r.summary_value("tail_nonincreasing_in_k");
    v.require(mono.has_value() && *mono == 1.0, "tail nonincreasing in k");
    v.require(r.passed, "tail bound entries hold");

    double worst = 0.0;
    const ForcingSpec& f = er.cfg.forcing;
    const double lambda = er.cfg.model.lambda;
    for (double k : {0.0, 0.5, 1.0, 2.0, 3.0}) {
        const double temporal = oracle::simpson(
            [&](double xi) { return std::exp(lambda * xi) * f.a(xi) * f.a(xi); }, -120.0, 0.0, 200000);
        const double spatial = 2.0 * oracle::simpson([&](double x) { return std::exp(-2.0 * x * x); }, k, 12.0, 200000);
        const double ref = temporal * spatial;
        const double got = forcing_tail_integral(f, 1, lambda, 0.0, k);
        worst = std::max(worst, std::abs(got - ref) / std::max(1.0, std::abs(ref)));
    }
    v.require(worst <= 1e-6, "Gaussian tail vs quadrature err " + g(worst));
    return v;
}

struct AttractorRuns
{
    ExperimentConfig cfg = showcase();
    Problem problem{cfg.grid(), cfg.model, cfg.forcing};
    AttractorSetup setup{problem, cfg.solver, cfg.family, cfg.seed, cfg.attractor.ensemble, cfg.jobs};
    AttractorApprox A = approximate_attractor(setup, cfg.attractor.tau, cfg.attractor.ladder, cfg.attractor.tol);
};

Verdict attractor_convergence(const AttractorRuns& ar)
{
    Verdict v;
    const ExperimentConfig lin = load_config(config_dir / "linear_stationary.yaml");
    const Problem problem(lin.grid(), lin.model, lin.forcing);
    auto a = oracle::implicit_matrix(problem.grid, 1.0, lin.model.lambda);
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i][i] -= 1.0;
    }
    const Field steady(problem.grid, oracle::dense_solve(a, problem.rho));
    const AttractorSetup setup{problem, lin.solver, lin.family, lin.seed, lin.attractor.ensemble, lin.jobs};
    const AttractorApprox S = approximate_attractor(setup, lin.attractor.tau, lin.attractor.ladder, lin.attractor.tol);
    const double dl2 = std::max(hausdorff_semidistance(S.members, {steady}, NormKind::l2),
                                hausdorff_semidistance({steady}, S.members, NormKind::l2));
    const double dh1 = std::max(hausdorff_semidistance(S.members, {steady}, NormKind::h1),
                                hausdorff_semidistance({steady}, S.members, NormKind::h1));
    v.require(dl2 <= 1e-6 && dh1 <= 1e-6, "linear steady state L2 " + g(dl2) + ", H1 " + g(dh1));

    const AttractorApprox full =
        approximate_attractor(ar.setup, ar.cfg.attractor.tau, ar.cfg.attractor.ladder, ar.cfg.attractor.tol, false);
    bool decreasing = full.history.size() >= 2;
    bool below_by_40 = false;
    std::string gaps;
    for (std::size_t j = 0; j < full.history.size(); ++j) {
        const LadderStep& s = full.history[j];
        gaps += (j == 0 ? "" : ", ") + g(s.gap);
        if (j > 0) {
            decreasing = decreasing && s.gap < full.history[j - 1].gap;
        }
        below_by_40 = below_by_40 || (s.to_horizon <= 40.0 && s.gap <= 1e-4);
    }
    v.require(decreasing && below_by_40, "ladder gaps [" + gaps + "]");

    AttractorSetup other = ar.setup;
    other.seed = mix_seed(ar.cfg.seed, 1);
    const AttractorApprox B = approximate_attractor(other, ar.cfg.attractor.tau, ar.cfg.attractor.ladder,
                                                    ar.cfg.attractor.tol);
    const double mutual = std::max(hausdorff_semidistance(ar.A.members, B.members, NormKind::l2),
                                   hausdorff_semidistance(B.members, ar.A.members, NormKind::l2));
    v.require(ar.A.converged && B.converged && mutual <= 2e-4, "two seeds mutual distance " + g(mutual));
    return v;
}

Verdict invariance(const AttractorRuns& ar)
{
    Verdict v;
    const InvarianceReport r = check_invariance(ar.setup, ar.A, ar.cfg.attractor.invariance_shift, 1e-3, 0.05);
    const double threshold = std::max(1e-3, 0.05 * ar.A.diameter);
    v.require(r.forward <= threshold && r.backward <= threshold,
              fmt::format("semi-distances {} / {} vs {}", g(r.forward), g(r.backward), g(threshold)));
    return v;
}

Verdict attraction(const AttractorRuns& ar, const EstimateRuns& er)
{
    Verdict v;
    const AttractionReport r =
        check_attraction(ar.setup, ar.A, ar.cfg.attractor.attraction_family, {5.0, 10.0, 20.0, 40.0}, NormKind::h1,
                         ar.cfg.attractor.attraction_members, mix_seed(ar.cfg.seed, 2), 1e-3);
    v.require(r.horizons.back() == 40.0 && r.distances.back() <= 1e-3,
              "H1 distance at t = 40: " + g(r.distances.back()));
    const EstimateReport c = check_h1_cauchy(er.setup, er.runs, {{20.0, 40.0}});
    double worst = 0.0;
    const bool cauchy_ok = entries_hold(c, 40.0, "h1_gap", worst);
    v.require(cauchy_ok, "(20, 40) Cauchy margin " + g(worst));
    return v;
}

Verdict structure()
{
    Verdict v;
    const ExperimentConfig cfg = showcase();
    const Grid grid = cfg.grid();
    const StructureReport ok = verify_structure(cfg.model, grid, -10.0, 10.0, 10000);
    v.require(ok.passed() && ok.violation_count() == 0 && ok.samples >= 10000,
              fmt::format("default model: {} violations over {} samples", ok.violation_count(), ok.samples));

    ModelSpec plus = cfg.model;
    plus.beta = -1.0;
    const StructureReport bad1 = verify_structure(plus, grid, -10.0, 10.0, 10000);
    const auto& d = bad1.condition("dissipativity");
    v.require(!bad1.passed() && !d.passed && d.violations > 0,
              "f = +s^3 rejected, witness s = " + g(d.witness_s));

    ModelSpec lin = cfg.model;
    lin.beta = 0.0;
    lin.kappa = 1.0;
    lin.constants.alpha3 = 0.5;
    const StructureReport bad2 = verify_structure(lin, grid, -10.0, 10.0, 10000);
    const auto& l = bad2.condition("one_sided_lipschitz");
    v.require(!bad2.passed() && !l.passed && l.violations > 0, "f = s rejected, witness s = " + g(l.witness_s));
    return v;
}

std::vector<std::string> files_under(const fs::path& dir)
{
    std::vector<std::string> out;
    for (const auto& e : fs::recursive_directory_iterator(dir)) {
        if (e.is_regular_file()) {
            out.push_back(fs::relative(e.path(), dir).generic_string());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Verdict determinism()
{
    Verdict v;
    const ExperimentConfig cfg = showcase();
    const fs::path root = fs::temp_directory_path() / "rdlab_acceptance";
    fs::remove_all(root);
    const ExperimentResult first = run_experiment(cfg, root / "a");
    const ExperimentResult second = run_experiment(cfg, root / "b");
    export_report(root / "a");
    export_report(root / "b");
    const auto fa = files_under(root / "a");
    const auto fb = files_under(root / "b");
    bool same = fa == fb && !fa.empty();
    std::size_t differing = 0;
    if (same) {
        for (const auto& f : fa) {
            if (read_text(root / "a" / f) != read_text(root / "b" / f)) {
                ++differing;
            }
        }
    }
    v.require(same && differing == 0, fmt::format("{} files, {} differ", fa.size(), differing));
    v.require(first.exit_code() == 0 && second.exit_code() == 0,
              fmt::format("run exit codes {} / {}", first.exit_code(), second.exit_code()));
    fs::remove_all(root);
    return v;
}

} // namespace

int main()
{
    struct Criterion
    {
        const char* name;
        std::function<Verdict()> check;
    };
    std::unique_ptr<EstimateRuns> er;
    std::unique_ptr<AttractorRuns> ar;
    auto estimates = [&]() -> const EstimateRuns& {
        if (!er) {
            er = std::make_unique<EstimateRuns>();
        }
        return *er;
    };
    auto attractor = [&]() -> const AttractorRuns& {
        if (!ar) {
            ar = std::make_unique<AttractorRuns>();
        }
        return *ar;
    };
    const std::vector<Criterion> criteria{
        {"linear eigenmode decay", linear_decay},
        {"energy residual within slack", energy_identity},
        {"absorbing L2 bound", [&] { return absorbing(estimates()); }},
        {"H1 and u_t bounds", [&] { return h1_and_ut(estimates()); }},
        {"tail estimate", [&] { return tails(estimates()); }},
        {"attractor convergence", [&] { return attractor_convergence(attractor()); }},
        {"invariance", [&] { return invariance(attractor()); }},
        {"H1 attraction and Cauchy bound", [&] { return attraction(attractor(), estimates()); }},
        {"structure validator", structure},
        {"byte-identical reruns", determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        try {
            v = criteria[i].check();
        }
        catch (const std::exception& e) {
            v.passed = false;
            v.detail = std::string("exception: ") + e.what();
        }
        failures += v.passed ? 0 : 1;
        std::cout << (v.passed ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].name << ": " << v.detail
                  << std::endl;
    }
    std::cout << criteria.size() - failures << "/" << criteria.size() << " criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
