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

#ifndef RDLAB_EXPERIMENT_HPP
#define RDLAB_EXPERIMENT_HPP

#include "rdlab/config.hpp"

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace rdlab
{

enum class TaskStatus
{
    passed,
    failed, ///< a check did not hold
    error,  ///< runtime or solver failure
};

std::string to_string(TaskStatus s);

struct TaskOutcome
{
    std::string name;
    TaskStatus status = TaskStatus::passed;
    std::string message;
};

struct ExperimentResult
{
    std::vector<TaskOutcome> tasks;

    /// 0 all passed, 3 if any task hit a runtime error, otherwise 1 if any check failed.
    int exit_code() const;
};

/**
 * Runs the requested tasks (default: the config's task list, in canonical
 * order) and writes their artifacts under `out`. A failing task does not stop
 * later ones. Progress lines go to `log` when given.
 */
ExperimentResult run_experiment(const ExperimentConfig& cfg, const std::filesystem::path& out,
                                const std::vector<std::string>& tasks, std::ostream* log = nullptr);
ExperimentResult run_experiment(const ExperimentConfig& cfg, const std::filesystem::path& out,
                                std::ostream* log = nullptr);

} // namespace rdlab

#endif // RDLAB_EXPERIMENT_HPP
