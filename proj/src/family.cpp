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

#include "rdlab/family.hpp"

#include "rdlab/energy.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace rdlab
{

namespace
{

class Gaussian
{
public:
    explicit Gaussian(std::uint64_t seed)
        : m_engine(seed)
    {
    }

    // Box-Muller on 53-bit uniforms; fixed across standard libraries.
    double operator()()
    {
        if (m_has_spare) {
            m_has_spare = false;
            return m_spare;
        }
        double u1 = 0.0;
        do {
            u1 = uniform();
        } while (u1 == 0.0);
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        m_spare = radius * std::sin(angle);
        m_has_spare = true;
        return radius * std::cos(angle);
    }

private:
    double uniform() { return static_cast<double>(m_engine() >> 11) * 0x1.0p-53; }

    std::mt19937_64 m_engine;
    double m_spare = 0.0;
    bool m_has_spare = false;
};

Field unit_direction(const TemperedFamily& family, const Grid& grid, std::size_t index, std::uint64_t seed)
{
    Field dir(grid);
    if (index < 2) {
        dir = first_eigenfunction(grid);
        if (index == 1) {
            dir *= -1.0;
        }
    }
    else {
        Gaussian normal(mix_seed(seed, index));
        const int n = grid.points_per_axis();
        const int M = std::min(family.modes, n);
        const double w = std::numbers::pi / (n + 1);
        if (grid.dimension() == 1) {
            for (int m = 1; m <= M; ++m) {
                const double c = normal() / m;
                for (int i = 0; i < n; ++i) {
                    dir[i] += c * std::sin(m * w * (i + 1));
                }
            }
        }
        else {
            for (int my = 1; my <= M; ++my) {
                for (int mx = 1; mx <= M; ++mx) {
                    const double c = normal() / (mx * my);
                    for (int j = 0; j < n; ++j) {
                        const double sy = std::sin(my * w * (j + 1));
                        for (int i = 0; i < n; ++i) {
                            dir[static_cast<std::size_t>(i) + static_cast<std::size_t>(n) * j] +=
                                c * std::sin(mx * w * (i + 1)) * sy;
                        }
                    }
                }
            }
        }
    }
    const double norm = std::sqrt(l2_norm_sq(dir));
    if (!(norm > 0.0)) {
        throw std::runtime_error("degenerate family direction");
    }
    dir *= 1.0 / norm;
    return dir;
}

} // namespace

double TemperedFamily::radius(double t) const
{
    const double s = std::abs(anchor - t);
    return R0 * std::pow(1.0 + s, sigma) * std::exp(gamma * s);
}

double TemperedFamily::tempered_weight(double lambda, double t) const
{
    const double r = radius(t);
    return std::exp(lambda * t) * r * r;
}

std::vector<std::string> TemperedFamily::validate(double lambda) const
{
    std::vector<std::string> out;
    if (!(R0 > 0.0)) {
        out.emplace_back("family.R0 must be positive");
    }
    if (!(sigma >= 0.0)) {
        out.emplace_back("family.sigma must be nonnegative");
    }
    if (!(gamma >= 0.0)) {
        out.emplace_back("family.gamma must be nonnegative");
    }
    if (!(2.0 * gamma < lambda)) {
        std::ostringstream msg;
        msg << "family.gamma: 2*gamma = " << 2.0 * gamma << " >= lambda = " << lambda
            << ", so e^{lambda t} r(t)^2 does not vanish as t -> -inf (family not tempered)";
        out.push_back(msg.str());
    }
    if (modes < 1) {
        out.emplace_back("family.modes must be at least 1");
    }
    return out;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream)
{
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Field family_member(const TemperedFamily& family, const Grid& grid, double t, std::size_t index,
                    std::uint64_t seed)
{
    Field u = unit_direction(family, grid, index, seed);
    u *= family.radius(t);
    return u;
}

std::vector<Field> sample_family(const TemperedFamily& family, const Grid& grid, double lambda, double t,
                                 std::size_t count, std::uint64_t seed, std::size_t first_index)
{
    const auto errors = family.validate(lambda);
    if (!errors.empty()) {
        throw std::invalid_argument(errors.front());
    }
    std::vector<Field> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(family_member(family, grid, t, first_index + i, seed));
    }
    return out;
}

} // namespace rdlab
