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

#ifndef RDLAB_TRAJECTORY_HPP
#define RDLAB_TRAJECTORY_HPP

#include "rdlab/grid.hpp"

#include <cstddef>
#include <vector>

namespace rdlab
{

/// Diagnostics of the state at one time level.
struct StepRecord
{
    double t = 0.0;
    double l2_sq = 0.0;     ///< ||u||^2
    double grad_sq = 0.0;   ///< ||grad u||^2
    double lp_p = 0.0;      ///< ||u||_p^p
    double potential = 0.0; ///< int F(x, u) dx
    int newton_iterations = 0;
};

struct Snapshot
{
    double t = 0.0;
    Field u;
};

/**
 * Result of one evolution from t0 to t1. records[0] describes the initial
 * state; one further record per step. The final state and the state one step
 * earlier are always kept; intermediate fields only as sparse snapshots.
 */
struct Trajectory
{
    explicit Trajectory(const Grid& grid)
        : final_state(grid)
        , previous_state(grid)
    {
    }

    double t0 = 0.0;
    double t1 = 0.0;
    double dt = 0.0;
    std::vector<StepRecord> records;
    std::vector<Snapshot> snapshots;
    Field final_state;
    Field previous_state;
    double last_step = 0.0; ///< length of the final step

    std::size_t steps() const { return records.empty() ? 0 : records.size() - 1; }
};

} // namespace rdlab

#endif // RDLAB_TRAJECTORY_HPP
