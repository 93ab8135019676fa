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

#ifndef RDLAB_MODEL_HPP
#define RDLAB_MODEL_HPP

#include "rdlab/grid.hpp"

#include <string>
#include <vector>

namespace rdlab
{

/// Radial profile coef * exp(-rate |x|^2); coef = 0 is the zero profile.
struct GaussianProfile
{
    double coef = 0.0;
    double rate = 1.0;

    double operator()(const Point& x) const;
    bool is_zero() const { return coef == 0.0; }
    /// Midpoint quadrature of |profile| on the grid.
    double l1_on_grid(const Grid& grid) const;
    /// Exact integral of |profile| over {|x| >= k} in R^n.
    double l1_tail(int dimension, double k) const;

    bool operator==(const GaussianProfile&) const = default;
};

/// Integral of exp(-rate |x|^2) over {|x| >= k} in R^n, n in {1, 2}.
double gaussian_tail_integral(int dimension, double rate, double k);

/// Positive constants of the dissipativity, growth, one-sided Lipschitz and potential bounds.
struct StructuralConstants
{
    double alpha1 = 1.0; ///< f(x,s)s <= -alpha1 |s|^p + phi1(x)
    double alpha2 = 1.0; ///< |f(x,s)| <= alpha2 |s|^{p-1} + phi2(x)
    double alpha3 = 1.0; ///< df/ds <= alpha3
    double alpha4 = 0.25; ///< -phi4 - alpha4 |s|^p <= F(x,s)
    double alpha5 = 0.25; ///< F(x,s) <= -alpha5 |s|^p + phi3

    bool operator==(const StructuralConstants&) const = default;
};

/**
 * Reaction-diffusion data: du/dt - Delta u + lambda u = f(x,u) + g(x,t) with
 * f(x,s) = -beta |s|^{p-2} s + kappa s + psi(x).
 *
 * The declared constants and profiles phi1..phi4 are claims about f; they are
 * checked (not trusted) by verify_structure. The default is f(s) = -s^3.
 */
struct ModelSpec
{
    double lambda = 1.0;
    double p = 4.0;
    double beta = 1.0;
    double kappa = 0.0;
    GaussianProfile psi{};

    StructuralConstants constants{};
    GaussianProfile phi1{};
    GaussianProfile phi2{};
    GaussianProfile phi3{};
    GaussianProfile phi4{};

    /// Conjugate exponent, 1/p + 1/q = 1.
    double q() const { return p / (p - 1.0); }

    double f(const Point& x, double s) const;
    double dfds(const Point& x, double s) const;
    /// Antiderivative of f in s with F(x, 0) = 0.
    double F(const Point& x, double s) const;

    std::vector<std::string> validate() const;

    /// f(s) = -s^3, lambda given, all phi zero, constants (1, 1, 1, 1/4, 1/4).
    static ModelSpec cubic(double lambda = 1.0);

    /// Fills constants and phi profiles for kappa = 0, beta > 0 (Young-inequality splits of psi).
    static ModelSpec with_derived_constants(double lambda, double p, double beta, double psi_amplitude,
                                           double psi_rate = 1.0);

    bool operator==(const ModelSpec&) const = default;
};

/// |s|^p with exact repeated multiplication for small integer p.
double abs_pow(double s, double p);

} // namespace rdlab

#endif // RDLAB_MODEL_HPP
