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

#include "rdlab/config.hpp"
#include "rdlab/experiment.hpp"
#include "rdlab/report.hpp"
#include "rdlab/solver.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

namespace
{

constexpr int exit_config_error = 2;
constexpr int exit_runtime_error = 3;

struct Options
{
    std::string config;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> jobs;
    bool quiet = false;
};

void add_run_options(CLI::App* cmd, Options& opt)
{
    cmd->add_option("-c,--config", opt.config, "experiment YAML file")->required()->check(CLI::ExistingFile);
    cmd->add_option("-o,--out", opt.out, "artifact directory (default: run.output from the config)");
    cmd->add_option("--seed", opt.seed, "override run.seed");
    cmd->add_option("--jobs", opt.jobs, "worker threads, 0 = hardware concurrency");
    cmd->add_flag("-q,--quiet", opt.quiet, "suppress progress output");
}

int run_tasks(const Options& opt, const std::vector<std::string>& tasks, bool with_report)
{
    rdlab::ExperimentConfig cfg = rdlab::load_config(opt.config);
    if (opt.seed) {
        cfg.seed = *opt.seed;
    }
    if (opt.jobs) {
        cfg.jobs = *opt.jobs;
    }
    const std::string out = opt.out.empty() ? cfg.output : opt.out;
    std::ostream* log = opt.quiet ? nullptr : &std::cerr;
    const rdlab::ExperimentResult result =
        tasks.empty() ? rdlab::run_experiment(cfg, out, log) : rdlab::run_experiment(cfg, out, tasks, log);
    if (with_report) {
        const std::string summary = rdlab::export_report(out);
        if (!opt.quiet) {
            std::cout << summary;
        }
    }
    for (const auto& t : result.tasks) {
        std::cout << t.name << ": " << rdlab::to_string(t.status) << "\n";
    }
    return result.exit_code();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Pullback-attractor lab for non-autonomous reaction-diffusion equations"};
    app.require_subcommand(1);

    Options opt;
    std::string report_dir;
    struct Command
    {
        const char* name;
        const char* help;
    };
    const Command task_commands[] = {
        {"verify-structure", "sample the nonlinearity against its declared structural constants"},
        {"simulate", "integrate one family member forward and monitor the energy identity"},
        {"verify-estimates", "compare pullback runs with the absorbing, H1, u_t, tail and Cauchy bounds"},
        {"attractor", "approximate A(tau), then check invariance and attraction"},
    };
    for (const auto& c : task_commands) {
        add_run_options(app.add_subcommand(c.name, c.help), opt);
    }
    add_run_options(app.add_subcommand("run", "run every task listed in the config, then export the summary"), opt);
    auto* report = app.add_subcommand("report", "rebuild summary.txt from an artifact directory");
    report->add_option("dir", report_dir, "artifact directory")->required();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_config_error;
    }

    try {
        if (report->parsed()) {
            std::cout << rdlab::export_report(report_dir);
            return 0;
        }
        if (app.got_subcommand("run")) {
            return run_tasks(opt, {}, true);
        }
        for (const auto& c : task_commands) {
            if (app.got_subcommand(c.name)) {
                return run_tasks(opt, {c.name}, false);
            }
        }
    }
    catch (const rdlab::ConfigError& e) {
        std::cerr << e.what() << "\n";
        return exit_config_error;
    }
    catch (const rdlab::ReportError& e) {
        std::cerr << e.what() << "\n";
        return exit_runtime_error;
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_runtime_error;
    }
    return exit_runtime_error;
}
