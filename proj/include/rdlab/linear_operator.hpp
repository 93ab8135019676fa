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

#ifndef RDLAB_LINEAR_OPERATOR_HPP
#define RDLAB_LINEAR_OPERATOR_HPP

#include "rdlab/grid.hpp"

#include <memory>
#include <span>
#include <vector>

namespace rdlab
{

/**
 * The implicit backward-Euler operator M = (1 + dt*lambda) I - dt*Delta_h.
 *
 * Factored once per (grid, dt, lambda): a tridiagonal LU in 1D, a
 * sine-transform diagonalization in 2D. Instances are immutable and may be
 * shared across threads.
 */
class ShiftedLaplacian
{
public:
    ShiftedLaplacian(const Grid& grid, double dt, double lambda);
    ~ShiftedLaplacian();
    ShiftedLaplacian(const ShiftedLaplacian&) = delete;
    ShiftedLaplacian& operator=(const ShiftedLaplacian&) = delete;

    const Grid& grid() const { return m_grid; }
    double dt() const { return m_dt; }
    double lambda() const { return m_lambda; }

    /// out = M x
    void apply(std::span<const double> x, std::span<double> out) const;
    /// Solve M x = rhs.
    void solve(std::span<const double> rhs, std::span<double> out) const;
    /// Solve (M + diag(extra)) x = rhs; requires M + diag(extra) symmetric positive definite.
    /// Returns the number of inner iterations (0 for direct solves).
    int solve_with_diagonal(std::span<const double> extra, std::span<const double> rhs,
                            std::span<double> out) const;

private:
    struct SineTransform;

    void solve_shifted_2d(double shift, std::span<const double> rhs, std::span<double> out) const;

    Grid m_grid;
    double m_dt;
    double m_lambda;
    double m_diag;     // 1 + dt*lambda + 2*n*dt/h^2
    double m_offdiag;  // -dt/h^2
    // 1D Thomas factors
    std::vector<double> m_upper;
    std::vector<double> m_inv_pivot;
    // 2D
    std::unique_ptr<SineTransform> m_sine;
    std::vector<double> m_axis_eigen;
};

} // namespace rdlab

#endif // RDLAB_LINEAR_OPERATOR_HPP
