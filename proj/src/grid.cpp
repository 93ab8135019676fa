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

#include "rdlab/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rdlab
{

Grid::Grid(int dimension, double radius, int points_per_axis)
    : m_dimension(dimension)
    , m_radius(radius)
    , m_points(points_per_axis)
    , m_spacing(0.0)
{
    if (dimension != 1 && dimension != 2) {
        throw std::invalid_argument("grid dimension must be 1 or 2, got " + std::to_string(dimension));
    }
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw std::invalid_argument("grid radius must be positive and finite");
    }
    if (points_per_axis < 3) {
        throw std::invalid_argument("grid needs at least 3 interior points per axis");
    }
    m_spacing = 2.0 * radius / (points_per_axis + 1);
}

std::size_t Grid::size() const
{
    const auto n = static_cast<std::size_t>(m_points);
    return m_dimension == 1 ? n : n * n;
}

double Grid::cell_volume() const
{
    return m_dimension == 1 ? m_spacing : m_spacing * m_spacing;
}

Point Grid::node(std::size_t index) const
{
    if (m_dimension == 1) {
        return {coordinate(static_cast<int>(index)), 0.0};
    }
    const auto n = static_cast<std::size_t>(m_points);
    return {coordinate(static_cast<int>(index % n)), coordinate(static_cast<int>(index / n))};
}

double Grid::node_radius_sq(std::size_t index) const
{
    const Point x = node(index);
    return x[0] * x[0] + x[1] * x[1];
}

Grid build_grid(int dimension, double radius, int points_per_axis)
{
    return Grid(dimension, radius, points_per_axis);
}

Field::Field(const Grid& grid)
    : m_grid(grid)
    , m_values(grid.size(), 0.0)
{
}

Field::Field(const Grid& grid, std::vector<double> values)
    : m_grid(grid)
    , m_values(std::move(values))
{
    if (m_values.size() != grid.size()) {
        throw std::invalid_argument("field sample count " + std::to_string(m_values.size()) +
                                    " does not match grid node count " + std::to_string(grid.size()));
    }
}

bool Field::is_finite() const
{
    for (double v : m_values) {
        if (!std::isfinite(v)) {
            return false;
        }
    }
    return true;
}

Field& Field::operator+=(const Field& other)
{
    require_same_grid(m_grid, other.m_grid);
    for (std::size_t i = 0; i < m_values.size(); ++i) {
        m_values[i] += other.m_values[i];
    }
    return *this;
}

Field& Field::operator-=(const Field& other)
{
    require_same_grid(m_grid, other.m_grid);
    for (std::size_t i = 0; i < m_values.size(); ++i) {
        m_values[i] -= other.m_values[i];
    }
    return *this;
}

Field& Field::operator*=(double scale)
{
    for (double& v : m_values) {
        v *= scale;
    }
    return *this;
}

Field operator+(Field a, const Field& b)
{
    a += b;
    return a;
}

Field operator-(Field a, const Field& b)
{
    a -= b;
    return a;
}

Field operator*(double scale, Field a)
{
    a *= scale;
    return a;
}

void require_same_grid(const Grid& a, const Grid& b)
{
    if (!(a == b)) {
        throw std::invalid_argument("fields live on different grids");
    }
}

Field laplacian_apply(const Grid& grid, const Field& u)
{
    require_same_grid(grid, u.grid());
    const int n = grid.points_per_axis();
    const double inv_h2 = 1.0 / (grid.spacing() * grid.spacing());
    Field out(grid);
    auto at = [&](int i, int j) -> double {
        if (i < 0 || i >= n || j < 0 || j >= n) {
            return 0.0;
        }
        return u[static_cast<std::size_t>(i) + static_cast<std::size_t>(n) * j];
    };
    if (grid.dimension() == 1) {
        for (int i = 0; i < n; ++i) {
            out[i] = (at(i - 1, 0) - 2.0 * at(i, 0) + at(i + 1, 0)) * inv_h2;
        }
        return out;
    }
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const double c = at(i, j);
            out[static_cast<std::size_t>(i) + static_cast<std::size_t>(n) * j] =
                (at(i - 1, j) + at(i + 1, j) + at(i, j - 1) + at(i, j + 1) - 4.0 * c) * inv_h2;
        }
    }
    return out;
}

double axis_eigenvalue(const Grid& grid, int mode)
{
    const double h = grid.spacing();
    const double angle = mode * std::numbers::pi / (grid.points_per_axis() + 1);
    return 2.0 / (h * h) * (1.0 - std::cos(angle));
}

Field first_eigenfunction(const Grid& grid)
{
    const double L = grid.radius();
    return sample_on_grid(grid, [&](const Point& x) {
        double v = std::sin(std::numbers::pi * (x[0] + L) / (2.0 * L));
        if (grid.dimension() == 2) {
            v *= std::sin(std::numbers::pi * (x[1] + L) / (2.0 * L));
        }
        return v;
    });
}

double first_eigenvalue(const Grid& grid)
{
    return grid.dimension() * axis_eigenvalue(grid, 1);
}

double cutoff_theta(double s)
{
    if (s < 0.0) {
        throw std::invalid_argument("cutoff argument must be nonnegative");
    }
    if (s <= 1.0) {
        return 0.0;
    }
    if (s >= 2.0) {
        return 1.0;
    }
    const double r = s - 1.0;
    return r * r * (3.0 - 2.0 * r);
}

double cutoff_theta_derivative(double s)
{
    if (s < 0.0) {
        throw std::invalid_argument("cutoff argument must be nonnegative");
    }
    if (s <= 1.0 || s >= 2.0) {
        return 0.0;
    }
    const double r = s - 1.0;
    return 6.0 * r * (1.0 - r);
}

} // namespace rdlab
