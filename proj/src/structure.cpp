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

#include "rdlab/structure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rdlab
{

namespace
{

constexpr double rounding_tolerance = 1e-12;
constexpr double slope_tolerance = 1e-6;

void record(ConditionResult& c, double margin, double scale, double tolerance, const Point& x, double s)
{
    if (margin < c.worst_margin) {
        c.worst_margin = margin;
        c.witness_x = x;
        c.witness_s = s;
    }
    if (margin < -tolerance * std::max(1.0, scale)) {
        ++c.violations;
        c.passed = false;
    }
}

} // namespace

bool StructureReport::passed() const
{
    return std::all_of(conditions.begin(), conditions.end(), [](const auto& c) { return c.passed; });
}

std::size_t StructureReport::violation_count() const
{
    std::size_t n = 0;
    for (const auto& c : conditions) {
        n += c.violations;
    }
    return n;
}

const ConditionResult& StructureReport::condition(const std::string& name) const
{
    for (const auto& c : conditions) {
        if (c.name == name) {
            return c;
        }
    }
    throw std::out_of_range("no structural condition named " + name);
}

StructureReport verify_structure(const ModelSpec& model, const Grid& grid, double s_min, double s_max,
                                 std::size_t samples)
{
    if (samples < 100) {
        throw std::invalid_argument("structural verification needs at least 100 samples");
    }
    if (!(s_max > s_min)) {
        throw std::invalid_argument("empty s range");
    }

    const std::size_t node_count = std::min<std::size_t>(grid.size(), 16);
    const std::size_t s_count = (samples + node_count - 1) / node_count;

    StructureReport report;
    report.s_min = s_min;
    report.s_max = s_max;
    report.samples = node_count * std::max<std::size_t>(s_count, 2);

    const double inf = std::numeric_limits<double>::infinity();
    auto make = [inf](std::string name, std::string statement) {
        ConditionResult c;
        c.name = std::move(name);
        c.statement = std::move(statement);
        c.worst_margin = inf;
        return c;
    };
    ConditionResult dissipative = make("dissipativity", "f(x,s) s <= -alpha1 |s|^p + phi1(x)");
    ConditionResult growth = make("growth", "|f(x,s)| <= alpha2 |s|^(p-1) + phi2(x)");
    ConditionResult lipschitz = make("one_sided_lipschitz", "df/ds(x,s) <= alpha3");
    ConditionResult lower = make("potential_lower", "-phi4(x) - alpha4 |s|^p <= F(x,s)");
    ConditionResult upper = make("potential_upper", "F(x,s) <= -alpha5 |s|^p + phi3(x)");

    const StructuralConstants& a = model.constants;
    const std::size_t n_s = std::max<std::size_t>(s_count, 2);
    for (std::size_t xi = 0; xi < node_count; ++xi) {
        const std::size_t index = node_count == 1 ? 0 : xi * (grid.size() - 1) / (node_count - 1);
        const Point x = grid.node(index);
        const double phi1 = model.phi1(x);
        const double phi2 = model.phi2(x);
        const double phi3 = model.phi3(x);
        const double phi4 = model.phi4(x);
        for (std::size_t si = 0; si < n_s; ++si) {
            const double s = s_min + (s_max - s_min) * static_cast<double>(si) / static_cast<double>(n_s - 1);
            const double f = model.f(x, s);
            const double F = model.F(x, s);
            const double sp = abs_pow(s, model.p);
            const double sp1 = abs_pow(s, model.p - 1.0);

            const double d_rhs = -a.alpha1 * sp + phi1;
            record(dissipative, d_rhs - f * s, std::max(std::abs(f * s), std::abs(d_rhs)), rounding_tolerance,
                   x, s);

            const double g_rhs = a.alpha2 * sp1 + phi2;
            record(growth, g_rhs - std::abs(f), std::max(std::abs(f), g_rhs), rounding_tolerance, x, s);

            const double ds = 1e-4 * std::max(1.0, std::abs(s));
            const double slope = (model.f(x, s + ds) - model.f(x, s - ds)) / (2.0 * ds);
            record(lipschitz, a.alpha3 - slope, std::abs(slope), slope_tolerance, x, s);

            const double lo = -phi4 - a.alpha4 * sp;
            record(lower, F - lo, std::max(std::abs(F), std::abs(lo)), rounding_tolerance, x, s);

            const double hi = -a.alpha5 * sp + phi3;
            record(upper, hi - F, std::max(std::abs(F), std::abs(hi)), rounding_tolerance, x, s);
        }
    }
    report.conditions = {dissipative, growth, lipschitz, lower, upper};
    return report;
}

} // namespace rdlab
