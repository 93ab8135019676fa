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

#include "rdlab/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rdlab
{

double GaussianProfile::operator()(const Point& x) const
{
    if (coef == 0.0) {
        return 0.0;
    }
    return coef * std::exp(-rate * (x[0] * x[0] + x[1] * x[1]));
}

double GaussianProfile::l1_on_grid(const Grid& grid) const
{
    if (is_zero()) {
        return 0.0;
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        sum += std::abs((*this)(grid.node(i)));
    }
    return sum * grid.cell_volume();
}

double GaussianProfile::l1_tail(int dimension, double k) const
{
    if (is_zero()) {
        return 0.0;
    }
    return std::abs(coef) * gaussian_tail_integral(dimension, rate, k);
}

double gaussian_tail_integral(int dimension, double rate, double k)
{
    if (!(rate > 0.0)) {
        throw std::invalid_argument("gaussian rate must be positive");
    }
    k = std::max(k, 0.0);
    if (dimension == 1) {
        return std::sqrt(std::numbers::pi / rate) * std::erfc(std::sqrt(rate) * k);
    }
    if (dimension == 2) {
        return std::numbers::pi / rate * std::exp(-rate * k * k);
    }
    throw std::invalid_argument("dimension must be 1 or 2");
}

double abs_pow(double s, double p)
{
    const double a = std::abs(s);
    if (p == 2.0) {
        return a * a;
    }
    if (p == 3.0) {
        return a * a * a;
    }
    if (p == 4.0) {
        const double a2 = a * a;
        return a2 * a2;
    }
    return std::pow(a, p);
}

double ModelSpec::f(const Point& x, double s) const
{
    // |s|^{p-2} s
    const double power = p == 4.0 ? s * s * s : abs_pow(s, p - 2.0) * s;
    return -beta * power + kappa * s + psi(x);
}

double ModelSpec::dfds(const Point&, double s) const
{
    const double power = p == 4.0 ? s * s : abs_pow(s, p - 2.0);
    return -beta * (p - 1.0) * power + kappa;
}

double ModelSpec::F(const Point& x, double s) const
{
    return -beta * abs_pow(s, p) / p + 0.5 * kappa * s * s + psi(x) * s;
}

std::vector<std::string> ModelSpec::validate() const
{
    std::vector<std::string> out;
    if (!(lambda > 0.0)) {
        out.emplace_back("model.lambda must be positive");
    }
    if (!(p >= 2.0)) {
        out.emplace_back("model.p must be at least 2");
    }
    const StructuralConstants& c = constants;
    const double alphas[] = {c.alpha1, c.alpha2, c.alpha3, c.alpha4, c.alpha5};
    for (int i = 0; i < 5; ++i) {
        if (!(alphas[i] > 0.0)) {
            out.emplace_back("model.constants.alpha" + std::to_string(i + 1) + " must be positive");
        }
    }
    const GaussianProfile* profiles[] = {&phi1, &phi2, &phi3, &phi4, &psi};
    const char* names[] = {"phi1", "phi2", "phi3", "phi4", "psi"};
    for (int i = 0; i < 5; ++i) {
        if (!profiles[i]->is_zero() && !(profiles[i]->rate > 0.0)) {
            out.emplace_back(std::string("model profile ") + names[i] + " needs a positive rate");
        }
    }
    return out;
}

ModelSpec ModelSpec::cubic(double lambda)
{
    ModelSpec m;
    m.lambda = lambda;
    return m;
}

ModelSpec ModelSpec::with_derived_constants(double lambda, double p, double beta, double psi_amplitude,
                                            double psi_rate)
{
    if (!(beta > 0.0) || !(p >= 2.0)) {
        throw std::invalid_argument("derived constants need beta > 0 and p >= 2");
    }
    ModelSpec m;
    m.lambda = lambda;
    m.p = p;
    m.beta = beta;
    m.kappa = 0.0;
    m.constants.alpha3 = 1.0;
    if (psi_amplitude == 0.0) {
        m.constants.alpha1 = beta;
        m.constants.alpha2 = beta;
        m.constants.alpha4 = beta / p;
        m.constants.alpha5 = beta / p;
        return m;
    }
    const double q = m.q();
    const double b_q = std::pow(std::abs(psi_amplitude), q);
    m.psi = {psi_amplitude, psi_rate};

    // |psi s| <= eps^p |s|^p / p + |psi|^q / (q eps^q)
    const double eps1_p = p * beta / 2.0;
    const double eps1_q = std::pow(eps1_p, q / p);
    m.constants.alpha1 = beta / 2.0;
    m.phi1 = {b_q / (q * eps1_q), q * psi_rate};

    m.constants.alpha2 = beta;
    m.phi2 = {std::abs(psi_amplitude), psi_rate};

    const double eps3_p = beta / 2.0;
    const double eps3_q = std::pow(eps3_p, q / p);
    m.constants.alpha5 = beta / (2.0 * p);
    m.constants.alpha4 = 3.0 * beta / (2.0 * p);
    m.phi3 = {b_q / (q * eps3_q), q * psi_rate};
    m.phi4 = m.phi3;
    return m;
}

} // namespace rdlab
