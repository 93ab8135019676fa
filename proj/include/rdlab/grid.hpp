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

#ifndef RDLAB_GRID_HPP
#define RDLAB_GRID_HPP

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace rdlab
{

/// A point of the truncated domain; the second coordinate is 0 in one dimension.
using Point = std::array<double, 2>;

/**
 * Uniform tensor grid on [-L, L]^n with homogeneous Dirichlet boundary.
 *
 * Only interior nodes are stored; boundary values are implicitly zero.
 * Node i along an axis sits at -L + (i+1)h with h = 2L/(N+1). In two
 * dimensions the flat index is i + N*j with i along x and j along y.
 */
class Grid
{
public:
    Grid(int dimension, double radius, int points_per_axis);

    int dimension() const { return m_dimension; }
    double radius() const { return m_radius; }
    int points_per_axis() const { return m_points; }
    double spacing() const { return m_spacing; }

    /// Interior node count N^n.
    std::size_t size() const;
    /// Quadrature weight h^n of one node.
    double cell_volume() const;

    double coordinate(int i) const { return -m_radius + (i + 1) * m_spacing; }
    Point node(std::size_t index) const;
    double node_radius_sq(std::size_t index) const;

    bool operator==(const Grid& other) const = default;

private:
    int m_dimension;
    double m_radius;
    int m_points;
    double m_spacing;
};

Grid build_grid(int dimension, double radius, int points_per_axis);

/// Real-valued grid function: one sample per interior node.
class Field
{
public:
    explicit Field(const Grid& grid);
    Field(const Grid& grid, std::vector<double> values);

    const Grid& grid() const { return m_grid; }
    std::size_t size() const { return m_values.size(); }
    std::span<const double> values() const { return m_values; }
    std::span<double> values() { return m_values; }
    double operator[](std::size_t i) const { return m_values[i]; }
    double& operator[](std::size_t i) { return m_values[i]; }

    bool is_finite() const;

    Field& operator+=(const Field& other);
    Field& operator-=(const Field& other);
    Field& operator*=(double scale);

    bool operator==(const Field& other) const = default;

private:
    Grid m_grid;
    std::vector<double> m_values;
};

Field operator+(Field a, const Field& b);
Field operator-(Field a, const Field& b);
Field operator*(double scale, Field a);

/// Throws std::invalid_argument unless both fields live on the same grid.
void require_same_grid(const Grid& a, const Grid& b);

template <class Fn>
Field sample_on_grid(const Grid& grid, Fn&& fn)
{
    Field out(grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        out[i] = fn(grid.node(i));
    }
    return out;
}

/// Second-order central difference Laplacian with zero ghost values.
Field laplacian_apply(const Grid& grid, const Field& u);

/// Eigenvalue mu of -Delta_h for the sine mode of index m (m >= 1) along one axis.
double axis_eigenvalue(const Grid& grid, int mode);

/// First discrete Dirichlet eigenfunction (product of half-period sines), unnormalized.
Field first_eigenfunction(const Grid& grid);
/// Smallest eigenvalue of -Delta_h on the grid (sum over axes).
double first_eigenvalue(const Grid& grid);

/**
 * C^1 smoothstep cutoff: 0 on [0,1], 1 on [2,inf), 3s^2 - 2s^3 in between
 * (shifted by one). Throws on negative arguments.
 */
double cutoff_theta(double s);
double cutoff_theta_derivative(double s);
/// sup |theta'|.
inline constexpr double cutoff_slope_bound = 1.5;

} // namespace rdlab

#endif // RDLAB_GRID_HPP
