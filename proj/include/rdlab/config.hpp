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

#ifndef RDLAB_CONFIG_HPP
#define RDLAB_CONFIG_HPP

#include "rdlab/family.hpp"
#include "rdlab/forcing.hpp"
#include "rdlab/grid.hpp"
#include "rdlab/model.hpp"
#include "rdlab/solver.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rdlab
{

struct StructureTask
{
    double s_min = -10.0;
    double s_max = 10.0;
    std::size_t samples = 10000;
};

struct SimulateTask
{
    double t0 = -20.0;
    double t1 = 0.0;
    std::size_t member = 0; ///< family member used as initial data at t0
    std::size_t snapshot_every = 128;
};

struct EstimatesTask
{
    double tau = 0.0;
    std::vector<double> horizons{5.0, 10.0, 20.0, 40.0};
    std::size_t members = 2;
    double eta = 1e-3;
    std::vector<double> radii; ///< empty: 0.5, 1.0, ... up to L/sqrt(2)
    std::vector<std::pair<double, double>> cauchy_pairs{{20.0, 40.0}};
};

struct AttractorTask
{
    double tau = 0.0;
    std::vector<double> ladder{5.0, 10.0, 20.0, 40.0};
    std::size_t ensemble = 6;
    double tol = 1e-4;
    bool stop_early = true;
    bool seed_check = true; ///< repeat with a second seed and compare
    double invariance_shift = 1.0;
    double invariance_tol = 1e-3;
    double invariance_fraction = 0.05;
    std::vector<double> attraction_horizons{5.0, 10.0, 20.0, 40.0};
    std::size_t attraction_members = 4;
    double attraction_tol = 1e-3;
    TemperedFamily attraction_family{5.0, 0.0, 0.3, 0.0, 8};
};

inline const std::vector<std::string>& task_names()
{
    static const std::vector<std::string> names{"verify-structure", "simulate", "verify-estimates", "attractor"};
    return names;
}

struct ExperimentConfig
{
    int dimension = 1;
    double radius = 8.0;
    int points = 511;

    ModelSpec model;
    bool derive_constants = false;
    ForcingSpec forcing;
    SolverControls solver;
    TemperedFamily family;

    std::uint64_t seed = 42;
    unsigned jobs = 0;
    std::string output = "out";
    std::vector<std::string> tasks = task_names();

    StructureTask structure;
    SimulateTask simulate;
    EstimatesTask estimates;
    AttractorTask attractor;

    Grid grid() const { return build_grid(dimension, radius, points); }
    /// Configured radii, or the default ladder 0.5, 1.0, ... up to L/sqrt(2).
    std::vector<double> tail_radii() const;
    bool has_task(const std::string& name) const;

    /// Every violated requirement; empty when the configuration is usable.
    std::vector<std::string> validate() const;
};

/// Configuration rejected at parse or validation time; carries every message.
class ConfigError : public std::runtime_error
{
public:
    explicit ConfigError(std::vector<std::string> messages);
    const std::vector<std::string>& messages() const { return m_messages; }

private:
    std::vector<std::string> m_messages;
};

/// Parses YAML text; unknown keys, type errors and validation failures raise ConfigError.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// The fully resolved configuration as YAML (every key, defaults filled).
std::string emit_config(const ExperimentConfig& cfg);

} // namespace rdlab

#endif // RDLAB_CONFIG_HPP
