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
#include "rdlab/io.hpp"
#include "rdlab/report.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <limits>

using namespace rdlab;
namespace fs = std::filesystem;

namespace
{

fs::path fresh_dir(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / ("rdlab_test_" + name);
    fs::remove_all(dir);
    return dir;
}

ExperimentConfig small_config()
{
    return parse_config(R"(
grid: {dimension: 1, radius: 6.0, points: 63}
model: {lambda: 1.0}
forcing: {temporal: exponential, spatial: gaussian, amplitude: 1.0, rate: 0.0}
run: {jobs: 1}
tasks:
  list: [verify-structure, simulate]
  structure: {samples: 1000}
  simulate: {t0: -1, t1: 0, snapshot_every: 64}
)");
}

} // namespace

TEST_CASE("numbers are written with round-trip precision and non-finite values as null")
{
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
    CHECK(json_number(std::numeric_limits<double>::infinity()).is_null());
    CHECK(json_number(std::nan("")).is_null());
    CHECK(json_number(2.5).get<double>() == 2.5);
}

TEST_CASE("report on a directory without results names the expected files")
{
    const fs::path dir = fresh_dir("empty");
    fs::create_directories(dir);
    try {
        export_report(dir);
        FAIL("expected a report error");
    }
    catch (const ReportError& e) {
        const std::string what = e.what();
        CHECK(what.find("results.json") != std::string::npos);
        CHECK(what.find("structure.json") != std::string::npos);
        CHECK(what.find("attractor.json") != std::string::npos);
    }
}

TEST_CASE("runs are reproducible and the summary is idempotent")
{
    const ExperimentConfig cfg = small_config();
    const fs::path a = fresh_dir("run_a");
    const fs::path b = fresh_dir("run_b");
    const ExperimentResult ra = run_experiment(cfg, a);
    const ExperimentResult rb = run_experiment(cfg, b);
    CHECK(ra.exit_code() == 0);
    CHECK(rb.exit_code() == 0);
    for (const char* f : {"results.json", "structure.json", "simulate.json", "trajectory.csv", "snapshots.csv",
                          "config.resolved.yaml"}) {
        INFO(f);
        REQUIRE(fs::exists(a / f));
        CHECK(read_text(a / f) == read_text(b / f));
    }
    const std::string first = export_report(a);
    const std::string second = export_report(a);
    CHECK(first == second);
    CHECK(read_text(a / "summary.txt") == first);
    CHECK(first.find("dissipativity") != std::string::npos);
    CHECK(first.find("Problems") == std::string::npos);
}

TEST_CASE("missing and corrupt artifacts are listed in the summary")
{
    const fs::path dir = fresh_dir("damaged");
    run_experiment(small_config(), dir);
    fs::remove(dir / "structure.json");
    write_text(dir / "simulate.json", "{ not json");
    const std::string s = export_report(dir);
    CHECK(s.find("structure.json: missing") != std::string::npos);
    CHECK(s.find("simulate.json: corrupt") != std::string::npos);
}

TEST_CASE("exit code aggregation")
{
    ExperimentResult r;
    CHECK(r.exit_code() == 0);
    r.tasks.push_back({"simulate", TaskStatus::passed, ""});
    CHECK(r.exit_code() == 0);
    r.tasks.push_back({"attractor", TaskStatus::failed, ""});
    CHECK(r.exit_code() == 1);
    r.tasks.push_back({"verify-estimates", TaskStatus::error, "boom"});
    CHECK(r.exit_code() == 3);
}
