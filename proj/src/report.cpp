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

#include "rdlab/report.hpp"

#include "rdlab/io.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace rdlab
{

namespace
{

const std::vector<std::string>& expected_files()
{
    static const std::vector<std::string> files{"results.json",   "config.resolved.yaml", "structure.json",
                                                "simulate.json",  "estimates.json",       "attractor.json"};
    return files;
}

std::string num(const Json& v)
{
    if (v.is_number()) {
        return fmt::format("{:.6g}", v.get<double>());
    }
    return "-";
}

std::string flag(const Json& v)
{
    return v.is_boolean() && v.get<bool>() ? "pass" : "FAIL";
}

bool load(const std::filesystem::path& path, Json& out, std::vector<std::string>& problems)
{
    if (!std::filesystem::exists(path)) {
        problems.push_back(path.filename().string() + ": missing");
        return false;
    }
    try {
        out = Json::parse(read_text(path));
        return true;
    }
    catch (const std::exception& e) {
        problems.push_back(path.filename().string() + ": corrupt (" + e.what() + ")");
        return false;
    }
}

} // namespace

ReportError::ReportError(std::vector<std::string> problems)
    : std::runtime_error([&] {
        std::string s = "cannot export report:";
        for (const auto& p : problems) {
            s += "\n  - " + p;
        }
        return s;
    }())
    , m_problems(std::move(problems))
{
}

std::string export_report(const std::filesystem::path& dir)
{
    if (!std::filesystem::exists(dir / "results.json")) {
        std::vector<std::string> problems{"no results.json in " + dir.string() + "; expected files:"};
        for (const auto& f : expected_files()) {
            problems.push_back(f);
        }
        throw ReportError(problems);
    }
    std::vector<std::string> problems;
    Json results;
    load(dir / "results.json", results, problems);

    std::string s = "rdlab experiment summary\n========================\n\n";
    s += "Tasks\n";
    std::vector<std::string> ran;
    if (results.contains("tasks")) {
        for (const auto& t : results["tasks"]) {
            const auto name = t.value("name", std::string{"?"});
            ran.push_back(name);
            s += fmt::format("  {:<18} {}", name, t.value("status", std::string{"?"}));
            const auto message = t.value("message", std::string{});
            if (!message.empty()) {
                s += "  (" + message + ")";
            }
            s += "\n";
        }
        s += fmt::format("  exit code {}\n", results.value("exit_code", -1));
    }
    auto ran_task = [&](const std::string& n) { return std::find(ran.begin(), ran.end(), n) != ran.end(); };

    Json j;
    if (ran_task("verify-structure") && load(dir / "structure.json", j, problems)) {
        s += fmt::format("\nStructural conditions ({} samples, s in [{}, {}])\n", j.value("samples", 0),
                         num(j["s_min"]), num(j["s_max"]));
        s += fmt::format("  {:<22} {:>6} {:>10} {:>14} {:>12}\n", "condition", "result", "violations", "worst margin",
                         "witness s");
        for (const auto& c : j["conditions"]) {
            s += fmt::format("  {:<22} {:>6} {:>10} {:>14} {:>12}\n", c.value("name", std::string{}),
                             flag(c["passed"]), c.value("violations", 0), num(c["worst_margin"]),
                             num(c["witness"]["s"]));
        }
    }

    if (ran_task("simulate") && load(dir / "simulate.json", j, problems)) {
        s += fmt::format("\nSimulation from t = {} to {} ({} steps)\n", num(j["t0"]), num(j["t1"]), j.value("steps", 0));
        if (j.contains("energy")) {
            const Json& e = j["energy"];
            s += fmt::format("  energy residual: {} positive, {} beyond slack (c = {}), worst excess {}  {}\n",
                             e.value("positive_residuals", 0), e.value("violations", 0), num(e["slack_constant"]),
                             num(e["worst_excess"]), flag(e["passed"]));
        }
    }

    if (ran_task("verify-estimates") && load(dir / "estimates.json", j, problems)) {
        s += fmt::format("\nEstimates at tau = {} (worst entry per checker)\n", num(j["tau"]));
        s += fmt::format("  {:<15} {:<34} {:>8} {:>12} {:>12} {:>12} {:>6}\n", "checker", "quantity", "horizon",
                         "bound", "observed", "margin", "result");
        for (const auto& r : j["reports"]) {
            const Json* worst = nullptr;
            for (const auto& e : r["entries"]) {
                if (worst == nullptr || (e["margin"].is_number() && (!(*worst)["margin"].is_number() ||
                                                                     e["margin"].get<double>() <
                                                                         (*worst)["margin"].get<double>()))) {
                    worst = &e;
                }
            }
            if (worst == nullptr) {
                s += fmt::format("  {:<15} (no entries)\n", r.value("name", std::string{}));
                continue;
            }
            s += fmt::format("  {:<15} {:<34} {:>8} {:>12} {:>12} {:>12} {:>6}\n", r.value("name", std::string{}),
                             (*worst).value("quantity", std::string{}), num((*worst)["horizon"]),
                             num((*worst)["bound"]), num((*worst)["observed"]), num((*worst)["margin"]),
                             flag(r["passed"]));
        }
        for (const auto& r : j["reports"]) {
            if (r.value("name", std::string{}) == "tail") {
                s += fmt::format("  tail: empirical K = {}, T = {}\n", num(r["summary"]["empirical_K"]),
                                 num(r["summary"]["empirical_T"]));
            }
        }
    }

    if (ran_task("attractor") && load(dir / "attractor.json", j, problems)) {
        const Json& a = j["approximation"];
        s += fmt::format("\nAttractor at tau = {}: {} at horizon {}, {} members, diameter {}\n", num(a["tau"]),
                         a.value("converged", false) ? "converged" : "unconverged", num(a["horizon"]),
                         a.value("members", 0), num(a["diameter"]));
        s += fmt::format("  {:>8} {:>8} {:>12} {:>12} {:>12}\n", "from", "to", "d(Ej,Ej+1)", "d(Ej+1,Ej)", "gap");
        for (const auto& h : a["history"]) {
            s += fmt::format("  {:>8} {:>8} {:>12} {:>12} {:>12}\n", num(h["from_horizon"]), num(h["to_horizon"]),
                             num(h["forward"]), num(h["backward"]), num(h["gap"]));
        }
        if (j.contains("seed_check")) {
            const Json& c = j["seed_check"];
            s += fmt::format("  second seed: {} / {} (threshold {})  {}\n", num(c["forward"]), num(c["backward"]),
                             num(c["threshold"]), flag(c["passed"]));
        }
        const Json& inv = j["invariance"];
        s += fmt::format("  invariance over s = {}: {} / {} (threshold {})  {}\n", num(inv["shift"]),
                         num(inv["forward"]), num(inv["backward"]), num(inv["threshold"]), flag(inv["passed"]));
        for (const auto& r : j["attraction"]) {
            std::string seq;
            for (const auto& d : r["distances"]) {
                seq += (seq.empty() ? "" : ", ") + num(d);
            }
            s += fmt::format("  attraction in {}: [{}] (tol {})  {}\n", r.value("norm", std::string{}), seq,
                             num(r["tol"]), flag(r["passed"]));
        }
    }

    if (!problems.empty()) {
        s += "\nProblems\n";
        for (const auto& p : problems) {
            s += "  " + p + "\n";
        }
    }

    std::vector<std::string> files;
    for (const auto& entry : std::filesystem::recursive_directory_iterator(dir)) {
        if (entry.is_regular_file()) {
            const auto rel = std::filesystem::relative(entry.path(), dir).generic_string();
            if (rel != "summary.txt") {
                files.push_back(rel);
            }
        }
    }
    std::sort(files.begin(), files.end());
    s += "\nFiles\n";
    for (const auto& f : files) {
        s += "  " + f + "\n";
    }
    write_text(dir / "summary.txt", s);
    return s;
}

} // namespace rdlab
