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

#ifndef RDLAB_STRUCTURE_HPP
#define RDLAB_STRUCTURE_HPP

#include "rdlab/grid.hpp"
#include "rdlab/model.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace rdlab
{

/// Outcome of one sampled structural inequality: margin = right side - left side.
struct ConditionResult
{
    std::string name;
    std::string statement;
    bool passed = true;
    std::size_t violations = 0;
    double worst_margin = 0.0;
    Point witness_x{};
    double witness_s = 0.0;
};

struct StructureReport
{
    std::size_t samples = 0;
    double s_min = 0.0;
    double s_max = 0.0;
    std::vector<ConditionResult> conditions;

    bool passed() const;
    std::size_t violation_count() const;
    const ConditionResult& condition(const std::string& name) const;
};

/**
 * Samples (x, s) pairs on grid nodes x and a uniform s lattice over
 * [s_min, s_max], at least `samples` of them, and checks the model's declared
 * dissipativity, growth, one-sided Lipschitz and potential bounds pointwise.
 * The slope of f in s is measured by central differences.
 */
StructureReport verify_structure(const ModelSpec& model, const Grid& grid, double s_min, double s_max,
                                 std::size_t samples);

} // namespace rdlab

#endif // RDLAB_STRUCTURE_HPP
