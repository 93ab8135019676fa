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

#ifndef RDLAB_TESTS_ORACLES_HPP
#define RDLAB_TESTS_ORACLES_HPP

// Independent reference computations used as test oracles.

#include "rdlab/grid.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace oracle
{

using Matrix = std::vector<std::vector<double>>;

/// Gaussian elimination with partial pivoting.
inline std::vector<double> dense_solve(Matrix a, std::vector<double> b)
{
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) {
                piv = r;
            }
        }
        std::swap(a[col], a[piv]);
        std::swap(b[col], b[piv]);
        if (a[col][col] == 0.0) {
            throw std::runtime_error("singular matrix");
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double m = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) {
                a[r][c] -= m * a[col][c];
            }
            b[r] -= m * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t c = i + 1; c < n; ++c) {
            s -= a[i][c] * x[c];
        }
        x[i] = s / a[i][i];
    }
    return x;
}

/// Dense I + dt(lambda - Delta_h) + diag(extra) with zero Dirichlet ghosts, built from neighbour lookups.
inline Matrix implicit_matrix(const rdlab::Grid& g, double dt, double lambda, const std::vector<double>& extra = {})
{
    const int n = g.points_per_axis();
    const std::size_t size = g.size();
    const double r = dt / (g.spacing() * g.spacing());
    Matrix a(size, std::vector<double>(size, 0.0));
    for (std::size_t k = 0; k < size; ++k) {
        const int i = static_cast<int>(k % n);
        const int j = static_cast<int>(k / n);
        a[k][k] = 1.0 + dt * lambda + 2.0 * g.dimension() * r + (extra.empty() ? 0.0 : extra[k]);
        auto link = [&](int ii, int jj) {
            if (ii >= 0 && ii < n && jj >= 0 && jj < n) {
                a[k][static_cast<std::size_t>(ii + n * jj)] = -r;
            }
        };
        link(i - 1, j);
        link(i + 1, j);
        if (g.dimension() == 2) {
            link(i, j - 1);
            link(i, j + 1);
        }
    }
    return a;
}

/// Composite Simpson rule with `panels` (even) subintervals.
template <class Fn>
double simpson(Fn&& fn, double a, double b, int panels = 20000)
{
    if (panels % 2 != 0) {
        ++panels;
    }
    const double h = (b - a) / panels;
    double s = fn(a) + fn(b);
    for (int i = 1; i < panels; ++i) {
        s += (i % 2 == 1 ? 4.0 : 2.0) * fn(a + i * h);
    }
    return s * h / 3.0;
}

/// Deterministic generator for property tests.
class Gen
{
public:
    explicit Gen(std::uint64_t seed)
        : m_rng(seed)
    {
    }
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(m_rng); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(m_rng); }
    rdlab::Field field(const rdlab::Grid& g, double amplitude = 1.0)
    {
        rdlab::Field u(g);
        for (std::size_t i = 0; i < u.size(); ++i) {
            u[i] = uniform(-amplitude, amplitude);
        }
        return u;
    }
    std::vector<double> vector(std::size_t n, double lo, double hi)
    {
        std::vector<double> v(n);
        for (auto& x : v) {
            x = uniform(lo, hi);
        }
        return v;
    }

private:
    std::mt19937_64 m_rng;
};

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b)
{
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

} // namespace oracle

#endif // RDLAB_TESTS_ORACLES_HPP
