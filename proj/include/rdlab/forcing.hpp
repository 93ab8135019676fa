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

#ifndef RDLAB_FORCING_HPP
#define RDLAB_FORCING_HPP

#include "rdlab/grid.hpp"

#include <string>
#include <vector>

namespace rdlab
{

enum class TemporalKind
{
    exponential, ///< a(t) = A e^{rate t}
    polynomial,  ///< a(t) = A (1 + |t|)^degree
};

enum class SpatialKind
{
    gaussian, ///< rho(x) = e^{-|x|^2}
    bump,     ///< rho(x) = exp(1 - 1/(1 - |x|^2/R^2)) on |x| < R
};

std::string to_string(TemporalKind kind);
std::string to_string(SpatialKind kind);

/// Separable external force g(x,t) = a(t) rho(x).
struct ForcingSpec
{
    TemporalKind temporal = TemporalKind::exponential;
    SpatialKind spatial = SpatialKind::gaussian;
    double amplitude = 1.0;
    double rate = 0.0;
    double degree = 0.0;
    double bump_radius = 1.0;

    double a(double t) const;
    /// a'(t); for the polynomial kind the kink at t = 0 takes the mean of the one-sided slopes (0).
    double da(double t) const;
    double rho(const Point& x) const;
    double g(const Point& x, double t) const { return a(t) * rho(x); }
    double dgdt(const Point& x, double t) const { return da(t) * rho(x); }

    /// Violations of the temperedness and shape requirements for decay rate lambda.
    std::vector<std::string> validate(double lambda) const;

    static ForcingSpec zero();

    bool operator==(const ForcingSpec&) const = default;
};

/// Midpoint quadrature of rho^2 on the grid.
double rho_norm_sq(const ForcingSpec& forcing, const Grid& grid);

/// int_{|x| >= k} rho^2 dx over R^n (closed form for the Gaussian, radial quadrature for the bump).
double rho_tail_sq(const ForcingSpec& forcing, int dimension, double k);

/// int_{-inf}^{tau} e^{lambda xi} a(xi)^2 d xi.
double temporal_weighted_integral(const ForcingSpec& forcing, double lambda, double tau,
                                  double rel_tol = 1e-12);

/// int_{-inf}^{tau} e^{lambda xi} ||g(xi)||^2 d xi with ||rho||^2 supplied (usually the grid value).
double weighted_forcing_integral(const ForcingSpec& forcing, double rho_sq, double lambda, double tau,
                                 double rel_tol = 1e-12);

/// int_{-inf}^{tau} int_{|x| >= k} e^{lambda xi} |g(x, xi)|^2 dx d xi.
double forcing_tail_integral(const ForcingSpec& forcing, int dimension, double lambda, double tau, double k);

/// int_{t0}^{t1} a'(xi)^2 d xi.
double derivative_sq_integral(const ForcingSpec& forcing, double t0, double t1);

} // namespace rdlab

#endif // RDLAB_FORCING_HPP
