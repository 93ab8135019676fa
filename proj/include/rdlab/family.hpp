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

#ifndef RDLAB_FAMILY_HPP
#define RDLAB_FAMILY_HPP

#include "rdlab/grid.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace rdlab
{

/**
 * Family of L^2 spheres D(t) = {||u|| = r(t)} with
 * r(t) = R0 (1 + |anchor - t|)^sigma e^{gamma |anchor - t|}.
 * It belongs to the tempered universe for decay rate lambda iff 2 gamma < lambda.
 */
struct TemperedFamily
{
    double R0 = 2.0;
    double sigma = 1.0;
    double gamma = 0.25;
    double anchor = 0.0;
    int modes = 8; ///< sine modes per axis used by random members

    double radius(double t) const;
    /// e^{lambda t} r(t)^2.
    double tempered_weight(double lambda, double t) const;
    std::vector<std::string> validate(double lambda) const;

    bool operator==(const TemperedFamily&) const = default;
};

/// splitmix64 finalizer; mixes a seed and a stream index into an RNG seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/**
 * Fields with L^2 norm exactly r(t). Member index 0 is +r e1/||e1||, index 1 is
 * -r e1/||e1|| (e1 the first discrete eigenfunction); higher indices are random
 * band-limited sine series with coefficients N(0,1)/(mode product), rescaled.
 * Member i depends only on (seed, i), so sets for different t differ only in scale.
 */
std::vector<Field> sample_family(const TemperedFamily& family, const Grid& grid, double lambda, double t,
                                 std::size_t count, std::uint64_t seed, std::size_t first_index = 0);

/// The single member with the given index.
Field family_member(const TemperedFamily& family, const Grid& grid, double t, std::size_t index,
                    std::uint64_t seed);

} // namespace rdlab

#endif // RDLAB_FAMILY_HPP
