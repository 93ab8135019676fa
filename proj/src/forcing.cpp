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

#include "rdlab/forcing.hpp"
#include "rdlab/model.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace rdlab
{

namespace
{

template <class Fn>
double integrate(Fn&& fn, double a, double b)
{
    if (b <= a) {
        return 0.0;
    }
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(fn, a, b, 20, 1e-14);
}

double bump_sq(double r, double radius)
{
    const double z = r / radius;
    if (z >= 1.0) {
        return 0.0;
    }
    return std::exp(2.0 - 2.0 / (1.0 - z * z));
}

} // namespace

std::string to_string(TemporalKind kind)
{
    return kind == TemporalKind::exponential ? "exponential" : "polynomial";
}

std::string to_string(SpatialKind kind)
{
    return kind == SpatialKind::gaussian ? "gaussian" : "bump";
}

double ForcingSpec::a(double t) const
{
    if (temporal == TemporalKind::exponential) {
        return amplitude * std::exp(rate * t);
    }
    return amplitude * std::pow(1.0 + std::abs(t), degree);
}

double ForcingSpec::da(double t) const
{
    if (temporal == TemporalKind::exponential) {
        return amplitude * rate * std::exp(rate * t);
    }
    if (t == 0.0 || degree == 0.0) {
        return 0.0;
    }
    const double slope = amplitude * degree * std::pow(1.0 + std::abs(t), degree - 1.0);
    return t > 0.0 ? slope : -slope;
}

double ForcingSpec::rho(const Point& x) const
{
    const double r2 = x[0] * x[0] + x[1] * x[1];
    if (spatial == SpatialKind::gaussian) {
        return std::exp(-r2);
    }
    const double z2 = r2 / (bump_radius * bump_radius);
    if (z2 >= 1.0) {
        return 0.0;
    }
    return std::exp(1.0 - 1.0 / (1.0 - z2));
}

std::vector<std::string> ForcingSpec::validate(double lambda) const
{
    std::vector<std::string> out;
    if (!std::isfinite(amplitude)) {
        out.emplace_back("forcing.amplitude must be finite");
    }
    if (temporal == TemporalKind::exponential) {
        if (!(lambda + 2.0 * rate > 0.0)) {
            std::ostringstream msg;
            msg << "forcing.rate: lambda + 2*rate = " << lambda + 2.0 * rate
                << " <= 0, so int e^{lambda t} ||g(t)||^2 diverges (forcing not tempered)";
            out.push_back(msg.str());
        }
    }
    else if (!(degree >= 0.0)) {
        out.emplace_back("forcing.degree must be nonnegative");
    }
    if (spatial == SpatialKind::bump && !(bump_radius > 0.0)) {
        out.emplace_back("forcing.bump_radius must be positive");
    }
    return out;
}

ForcingSpec ForcingSpec::zero()
{
    ForcingSpec g;
    g.amplitude = 0.0;
    return g;
}

double rho_norm_sq(const ForcingSpec& forcing, const Grid& grid)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double r = forcing.rho(grid.node(i));
        sum += r * r;
    }
    return sum * grid.cell_volume();
}

double rho_tail_sq(const ForcingSpec& forcing, int dimension, double k)
{
    if (k < 0.0) {
        throw std::invalid_argument("tail radius must be nonnegative");
    }
    if (forcing.spatial == SpatialKind::gaussian) {
        return gaussian_tail_integral(dimension, 2.0, k);
    }
    const double R = forcing.bump_radius;
    if (k >= R) {
        return 0.0;
    }
    if (dimension == 1) {
        return 2.0 * integrate([R](double r) { return bump_sq(r, R); }, k, R);
    }
    return 2.0 * std::numbers::pi * integrate([R](double r) { return r * bump_sq(r, R); }, k, R);
}

double temporal_weighted_integral(const ForcingSpec& forcing, double lambda, double tau, double rel_tol)
{
    if (!(lambda > 0.0)) {
        throw std::invalid_argument("decay rate must be positive");
    }
    const double A2 = forcing.amplitude * forcing.amplitude;
    if (A2 == 0.0) {
        return 0.0;
    }
    if (forcing.temporal == TemporalKind::exponential) {
        const double growth = lambda + 2.0 * forcing.rate;
        if (!(growth > 0.0)) {
            throw std::invalid_argument("forcing is not tempered: lambda + 2*rate <= 0");
        }
        return A2 * std::exp(growth * tau) / growth;
    }

    const double m2 = 2.0 * forcing.degree;
    double total = 0.0;
    if (tau > 0.0) {
        total += integrate([&](double xi) { return std::exp(lambda * xi) * std::pow(1.0 + xi, m2); }, 0.0, tau);
    }
    // (-inf, min(tau, 0)] in the reflected variable s = -xi.
    auto reflected = [&](double s) { return std::exp(-lambda * s) * std::pow(1.0 + s, m2); };
    const double s0 = std::max(-tau, 0.0);
    const double panel = 20.0 / lambda;
    double lo = s0;
    double hi = std::max(s0, 2.0 * m2 / lambda) + panel;
    total += integrate(reflected, lo, hi);
    // For 1 + s >= 2*m2/lambda, (1+s)^{m2} e^{-lambda s/2} is decreasing, so the
    // dropped tail is at most (2/lambda)(1+s)^{m2} e^{-lambda s}.
    while (2.0 / lambda * reflected(hi) > rel_tol * total) {
        lo = hi;
        hi += panel;
        total += integrate(reflected, lo, hi);
    }
    return A2 * total;
}

double weighted_forcing_integral(const ForcingSpec& forcing, double rho_sq, double lambda, double tau,
                                 double rel_tol)
{
    return temporal_weighted_integral(forcing, lambda, tau, rel_tol) * rho_sq;
}

double forcing_tail_integral(const ForcingSpec& forcing, int dimension, double lambda, double tau, double k)
{
    const auto violations = forcing.validate(lambda);
    if (!violations.empty()) {
        throw std::invalid_argument(violations.front());
    }
    if (k < 0.0) {
        throw std::invalid_argument("tail radius must be nonnegative");
    }
    return temporal_weighted_integral(forcing, lambda, tau) * rho_tail_sq(forcing, dimension, k);
}

double derivative_sq_integral(const ForcingSpec& forcing, double t0, double t1)
{
    if (t1 <= t0) {
        return 0.0;
    }
    const double A2 = forcing.amplitude * forcing.amplitude;
    if (forcing.temporal == TemporalKind::exponential) {
        const double d = forcing.rate;
        if (d == 0.0 || A2 == 0.0) {
            return 0.0;
        }
        return A2 * d * (std::exp(2.0 * d * t1) - std::exp(2.0 * d * t0)) / 2.0;
    }
    if (forcing.degree == 0.0 || A2 == 0.0) {
        return 0.0;
    }
    auto integrand = [&](double xi) {
        const double s = forcing.da(xi);
        return s * s;
    };
    if (t0 < 0.0 && t1 > 0.0) {
        return integrate(integrand, t0, 0.0) + integrate(integrand, 0.0, t1);
    }
    return integrate(integrand, t0, t1);
}

} // namespace rdlab
