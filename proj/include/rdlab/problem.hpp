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

#ifndef RDLAB_PROBLEM_HPP
#define RDLAB_PROBLEM_HPP

#include "rdlab/forcing.hpp"
#include "rdlab/grid.hpp"
#include "rdlab/model.hpp"

#include <vector>

namespace rdlab
{

/// Grid, model and forcing bundled with the grid quantities every run needs.
struct Problem
{
    Problem(const Grid& grid, const ModelSpec& model, const ForcingSpec& forcing);

    Grid grid;
    ModelSpec model;
    ForcingSpec forcing;

    std::vector<double> rho; ///< spatial forcing profile at the nodes
    std::vector<double> psi; ///< inhomogeneous part of f at the nodes
    double rho_sq = 0.0;     ///< ||rho||^2 on the grid
    double phi1_l1 = 0.0;
    double phi3_l1 = 0.0;
    double phi4_l1 = 0.0;

    /// ||g(t)||^2 on the grid.
    double forcing_norm_sq(double t) const;
    /// int_{-inf}^{tau} e^{lambda xi} ||g(xi)||^2 d xi with the grid ||rho||^2.
    double weighted_forcing(double tau) const;
};

} // namespace rdlab

#endif // RDLAB_PROBLEM_HPP
