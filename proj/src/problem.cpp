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

#include "rdlab/problem.hpp"

#include <stdexcept>

namespace rdlab
{

Problem::Problem(const Grid& grid_, const ModelSpec& model_, const ForcingSpec& forcing_)
    : grid(grid_)
    , model(model_)
    , forcing(forcing_)
    , rho(grid_.size())
    , psi(grid_.size())
{
    const auto model_errors = model.validate();
    if (!model_errors.empty()) {
        throw std::invalid_argument(model_errors.front());
    }
    const auto forcing_errors = forcing.validate(model.lambda);
    if (!forcing_errors.empty()) {
        throw std::invalid_argument(forcing_errors.front());
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const Point x = grid.node(i);
        rho[i] = forcing.rho(x);
        psi[i] = model.psi(x);
    }
    rho_sq = rho_norm_sq(forcing, grid);
    phi1_l1 = model.phi1.l1_on_grid(grid);
    phi3_l1 = model.phi3.l1_on_grid(grid);
    phi4_l1 = model.phi4.l1_on_grid(grid);
}

double Problem::forcing_norm_sq(double t) const
{
    const double a = forcing.a(t);
    return a * a * rho_sq;
}

double Problem::weighted_forcing(double tau) const
{
    return weighted_forcing_integral(forcing, rho_sq, model.lambda, tau);
}

} // namespace rdlab
