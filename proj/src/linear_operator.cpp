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

#include "rdlab/linear_operator.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace rdlab
{

namespace
{

// The FFTW planner is not thread-safe; execution of an existing plan is.
std::mutex& fftw_planner_mutex()
{
    static std::mutex m;
    return m;
}

double dot(std::span<const double> a, std::span<const double> b)
{
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

} // namespace

struct ShiftedLaplacian::SineTransform
{
    fftw_plan plan = nullptr;
    int n = 0;

    explicit SineTransform(int points)
        : n(points)
    {
        std::vector<double> in(static_cast<std::size_t>(n) * n, 0.0);
        std::vector<double> out(in.size(), 0.0);
        std::lock_guard lock(fftw_planner_mutex());
        plan = fftw_plan_r2r_2d(n, n, in.data(), out.data(), FFTW_RODFT00, FFTW_RODFT00,
                                FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (plan == nullptr) {
            throw std::runtime_error("failed to create sine transform plan");
        }
    }

    ~SineTransform()
    {
        std::lock_guard lock(fftw_planner_mutex());
        fftw_destroy_plan(plan);
    }

    SineTransform(const SineTransform&) = delete;
    SineTransform& operator=(const SineTransform&) = delete;

    // Unnormalized DST-I along both axes; applying it twice scales by 4(N+1)^2.
    void execute(std::vector<double>& in, std::vector<double>& out) const
    {
        fftw_execute_r2r(plan, in.data(), out.data());
    }
};

ShiftedLaplacian::ShiftedLaplacian(const Grid& grid, double dt, double lambda)
    : m_grid(grid)
    , m_dt(dt)
    , m_lambda(lambda)
{
    if (!(dt > 0.0)) {
        throw std::invalid_argument("time step must be positive");
    }
    const double h = grid.spacing();
    const double r = dt / (h * h);
    m_offdiag = -r;
    m_diag = 1.0 + dt * lambda + 2.0 * grid.dimension() * r;
    const int n = grid.points_per_axis();
    if (grid.dimension() == 1) {
        m_upper.resize(n);
        m_inv_pivot.resize(n);
        double pivot = m_diag;
        for (int i = 0; i < n; ++i) {
            if (i > 0) {
                pivot = m_diag - m_offdiag * m_upper[i - 1];
            }
            if (!(pivot > 0.0)) {
                throw std::runtime_error("implicit operator is not positive definite");
            }
            m_inv_pivot[i] = 1.0 / pivot;
            m_upper[i] = m_offdiag / pivot;
        }
    }
    else {
        m_sine = std::make_unique<SineTransform>(n);
        m_axis_eigen.resize(n);
        for (int k = 0; k < n; ++k) {
            m_axis_eigen[k] = axis_eigenvalue(grid, k + 1);
        }
    }
}

ShiftedLaplacian::~ShiftedLaplacian() = default;

void ShiftedLaplacian::apply(std::span<const double> x, std::span<double> out) const
{
    const int n = m_grid.points_per_axis();
    if (m_grid.dimension() == 1) {
        for (int i = 0; i < n; ++i) {
            double v = m_diag * x[i];
            if (i > 0) {
                v += m_offdiag * x[i - 1];
            }
            if (i + 1 < n) {
                v += m_offdiag * x[i + 1];
            }
            out[i] = v;
        }
        return;
    }
    const auto N = static_cast<std::size_t>(n);
    for (std::size_t j = 0; j < N; ++j) {
        for (std::size_t i = 0; i < N; ++i) {
            const std::size_t k = i + N * j;
            double v = m_diag * x[k];
            if (i > 0) {
                v += m_offdiag * x[k - 1];
            }
            if (i + 1 < N) {
                v += m_offdiag * x[k + 1];
            }
            if (j > 0) {
                v += m_offdiag * x[k - N];
            }
            if (j + 1 < N) {
                v += m_offdiag * x[k + N];
            }
            out[k] = v;
        }
    }
}

void ShiftedLaplacian::solve(std::span<const double> rhs, std::span<double> out) const
{
    if (m_grid.dimension() == 2) {
        solve_shifted_2d(0.0, rhs, out);
        return;
    }
    const int n = m_grid.points_per_axis();
    out[0] = rhs[0] * m_inv_pivot[0];
    for (int i = 1; i < n; ++i) {
        out[i] = (rhs[i] - m_offdiag * out[i - 1]) * m_inv_pivot[i];
    }
    for (int i = n - 2; i >= 0; --i) {
        out[i] -= m_upper[i] * out[i + 1];
    }
}

void ShiftedLaplacian::solve_shifted_2d(double shift, std::span<const double> rhs,
                                        std::span<double> out) const
{
    const auto n = static_cast<std::size_t>(m_grid.points_per_axis());
    std::vector<double> a(rhs.begin(), rhs.end());
    std::vector<double> b(a.size());
    m_sine->execute(a, b);
    const double base = 1.0 + m_dt * m_lambda + shift;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            b[i + n * j] /= base + m_dt * (m_axis_eigen[i] + m_axis_eigen[j]);
        }
    }
    m_sine->execute(b, a);
    const double scale = 1.0 / (4.0 * static_cast<double>((n + 1) * (n + 1)));
    for (std::size_t k = 0; k < a.size(); ++k) {
        out[k] = a[k] * scale;
    }
}

int ShiftedLaplacian::solve_with_diagonal(std::span<const double> extra, std::span<const double> rhs,
                                          std::span<double> out) const
{
    const int n = m_grid.points_per_axis();
    if (m_grid.dimension() == 1) {
        std::vector<double> upper(n);
        double pivot = m_diag + extra[0];
        for (int i = 0; i < n; ++i) {
            if (i > 0) {
                pivot = m_diag + extra[i] - m_offdiag * upper[i - 1];
            }
            if (!(pivot > 0.0)) {
                throw std::runtime_error("Jacobian is not positive definite");
            }
            upper[i] = m_offdiag / pivot;
            out[i] = (rhs[i] - (i > 0 ? m_offdiag * out[i - 1] : 0.0)) / pivot;
        }
        for (int i = n - 2; i >= 0; --i) {
            out[i] -= upper[i] * out[i + 1];
        }
        return 0;
    }

    // Preconditioned CG. With J = M + s I + E', s = min(extra) and E' >= 0, the
    // preconditioner is D^{1/2} (M + s I) D^{1/2}, D = diag(J) / diag(M + s I),
    // applied through the fast-diagonalization solve; exact when E' = 0.
    const std::size_t size = rhs.size();
    double shift = *std::min_element(extra.begin(), extra.end());
    shift = std::max(shift, -0.5 * (1.0 + m_dt * m_lambda));
    const double base_diag = m_diag + shift;
    std::vector<double> inv_sqrt_d(size);
    for (std::size_t k = 0; k < size; ++k) {
        inv_sqrt_d[k] = std::sqrt(base_diag / (m_diag + extra[k]));
    }
    std::vector<double> scaled(size);
    auto precondition = [&](std::span<const double> v, std::span<double> res) {
        for (std::size_t k = 0; k < size; ++k) {
            scaled[k] = v[k] * inv_sqrt_d[k];
        }
        solve_shifted_2d(shift, scaled, res);
        for (std::size_t k = 0; k < size; ++k) {
            res[k] *= inv_sqrt_d[k];
        }
    };

    std::vector<double> x(size), r(size), z(size), p(size), q(size);
    auto apply_jacobian = [&](std::span<const double> v, std::span<double> res) {
        apply(v, res);
        for (std::size_t k = 0; k < size; ++k) {
            res[k] += extra[k] * v[k];
        }
    };
    const double rhs_norm = std::sqrt(dot(rhs, rhs));
    if (rhs_norm == 0.0) {
        std::fill(out.begin(), out.end(), 0.0);
        return 0;
    }
    precondition(rhs, x);
    apply_jacobian(x, q);
    for (std::size_t k = 0; k < size; ++k) {
        r[k] = rhs[k] - q[k];
    }
    precondition(r, z);
    p = z;
    double rz = dot(r, z);
    constexpr int max_iterations = 2000;
    constexpr double tolerance = 1e-12;
    int it = 0;
    for (; it < max_iterations; ++it) {
        if (std::sqrt(dot(r, r)) <= tolerance * rhs_norm) {
            break;
        }
        apply_jacobian(p, q);
        const double pq = dot(p, q);
        if (!(pq > 0.0)) {
            throw std::runtime_error("Jacobian is not positive definite");
        }
        const double alpha = rz / pq;
        for (std::size_t k = 0; k < size; ++k) {
            x[k] += alpha * p[k];
            r[k] -= alpha * q[k];
        }
        precondition(r, z);
        const double rz_next = dot(r, z);
        const double beta = rz_next / rz;
        rz = rz_next;
        for (std::size_t k = 0; k < size; ++k) {
            p[k] = z[k] + beta * p[k];
        }
    }
    if (it == max_iterations) {
        throw std::runtime_error("conjugate gradient did not converge");
    }
    std::copy(x.begin(), x.end(), out.begin());
    return it;
}

} // namespace rdlab
