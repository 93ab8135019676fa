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

#include "rdlab/io.hpp"

#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rdlab
{

std::string format_double(double v)
{
    return fmt::format("{:.17g}", v);
}

void write_text(const std::filesystem::path& path, const std::string& text)
{
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) {
        throw std::runtime_error("failed writing " + path.string());
    }
}

std::string read_text(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Json json_number(double v)
{
    if (!std::isfinite(v)) {
        return nullptr;
    }
    return v;
}

std::string field_csv(const Field& u)
{
    const Grid& grid = u.grid();
    std::string out = grid.dimension() == 1 ? "x,value\n" : "x,y,value\n";
    for (std::size_t i = 0; i < u.size(); ++i) {
        const Point x = grid.node(i);
        if (grid.dimension() == 1) {
            out += fmt::format("{:.17g},{:.17g}\n", x[0], u[i]);
        }
        else {
            out += fmt::format("{:.17g},{:.17g},{:.17g}\n", x[0], x[1], u[i]);
        }
    }
    return out;
}

std::string trajectory_csv(const Trajectory& traj, const EnergyCheck* energy)
{
    std::string out = "t,l2_sq,grad_sq,lp_p,potential,newton_iterations";
    out += energy != nullptr ? ",energy_residual,slack\n" : "\n";
    for (std::size_t j = 0; j < traj.records.size(); ++j) {
        const StepRecord& r = traj.records[j];
        out += fmt::format("{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{}", r.t, r.l2_sq, r.grad_sq, r.lp_p,
                           r.potential, r.newton_iterations);
        if (energy != nullptr) {
            if (j == 0) {
                out += ",,";
            }
            else {
                out += fmt::format(",{:.17g},{:.17g}", energy->residual[j - 1], energy->slack[j - 1]);
            }
        }
        out += "\n";
    }
    return out;
}

std::string snapshots_csv(const Trajectory& traj)
{
    if (traj.snapshots.empty()) {
        return "t\n";
    }
    std::string out = "t";
    for (std::size_t i = 0; i < traj.snapshots.front().u.size(); ++i) {
        out += fmt::format(",u{}", i);
    }
    out += "\n";
    for (const Snapshot& s : traj.snapshots) {
        out += format_double(s.t);
        for (double v : s.u.values()) {
            out += ",";
            out += format_double(v);
        }
        out += "\n";
    }
    return out;
}

Json to_json(const StructureReport& r)
{
    Json j;
    j["passed"] = r.passed();
    j["samples"] = r.samples;
    j["s_min"] = r.s_min;
    j["s_max"] = r.s_max;
    j["violations"] = r.violation_count();
    Json conditions = Json::array();
    for (const auto& c : r.conditions) {
        Json cj;
        cj["name"] = c.name;
        cj["statement"] = c.statement;
        cj["passed"] = c.passed;
        cj["violations"] = c.violations;
        cj["worst_margin"] = json_number(c.worst_margin);
        cj["witness"] = {{"x", {c.witness_x[0], c.witness_x[1]}}, {"s", c.witness_s}};
        conditions.push_back(cj);
    }
    j["conditions"] = conditions;
    return j;
}

Json to_json(const EstimateReport& r)
{
    Json j;
    j["name"] = r.name;
    j["statement"] = r.statement;
    j["tau"] = r.tau;
    j["passed"] = r.passed;
    j["worst_margin"] = json_number(r.worst_margin());
    j["first_passing_horizon"] = r.first_passing_horizon ? Json(*r.first_passing_horizon) : Json(nullptr);
    Json constants = Json::object();
    for (const auto& [k, v] : r.constants) {
        constants[k] = json_number(v);
    }
    j["constants"] = constants;
    Json summary = Json::object();
    for (const auto& [k, v] : r.summary) {
        summary[k] = json_number(v);
    }
    j["summary"] = summary;
    j["notes"] = r.notes;
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        entries.push_back({{"quantity", e.quantity},
                           {"horizon", e.horizon},
                           {"member", e.member},
                           {"radius", e.radius},
                           {"bound", json_number(e.bound)},
                           {"observed", json_number(e.observed)},
                           {"margin", json_number(e.margin)},
                           {"slack", json_number(e.slack)},
                           {"passed", e.passed}});
    }
    j["entries"] = entries;
    return j;
}

Json to_json(const AttractorApprox& A)
{
    Json j;
    j["tau"] = A.tau;
    j["horizon"] = A.horizon;
    j["converged"] = A.converged;
    j["tol"] = A.tol;
    j["seed"] = A.seed;
    j["ensemble"] = A.ensemble;
    j["members"] = A.members.size();
    j["diameter"] = A.diameter;
    j["ladder"] = A.ladder;
    j["family"] = {{"R0", A.family.R0},
                   {"sigma", A.family.sigma},
                   {"gamma", A.family.gamma},
                   {"anchor", A.family.anchor},
                   {"modes", A.family.modes}};
    Json history = Json::array();
    for (const auto& s : A.history) {
        history.push_back({{"from_horizon", s.from_horizon},
                           {"to_horizon", s.to_horizon},
                           {"forward", s.forward},
                           {"backward", s.backward},
                           {"gap", s.gap}});
    }
    j["history"] = history;
    return j;
}

Json to_json(const InvarianceReport& r)
{
    return {{"tau", r.tau},
            {"shift", r.shift},
            {"forward", r.forward},
            {"backward", r.backward},
            {"diameter", r.diameter},
            {"threshold", r.threshold},
            {"shifted_converged", r.shifted_converged},
            {"passed", r.passed}};
}

Json to_json(const AttractionReport& r)
{
    return {{"norm", to_string(r.norm)},
            {"horizons", r.horizons},
            {"distances", r.distances},
            {"monotone", r.monotone},
            {"first_below_tol", r.first_below_tol ? Json(*r.first_below_tol) : Json(nullptr)},
            {"tol", r.tol},
            {"passed", r.passed}};
}

void save_attractor(const AttractorApprox& A, const std::filesystem::path& dir)
{
    std::filesystem::create_directories(dir);
    Json manifest = to_json(A);
    Json files = Json::array();
    for (std::size_t i = 0; i < A.members.size(); ++i) {
        const std::string name = fmt::format("member_{:03}.csv", i);
        write_text(dir / name, field_csv(A.members[i]));
        files.push_back(name);
    }
    manifest["files"] = files;
    write_text(dir / "manifest.json", dump(manifest));
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

} // namespace rdlab
