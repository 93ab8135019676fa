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

#include "rdlab/energy.hpp"
#include "rdlab/family.hpp"

#include <doctest.h>

#include <cmath>
#include <set>

using namespace rdlab;

TEST_CASE("tempered radius")
{
    const TemperedFamily f{2.0, 1.0, 0.25, 0.0, 8};
    CHECK(f.radius(0.0) == doctest::Approx(2.0));
    CHECK(f.radius(-4.0) == doctest::Approx(2.0 * 5.0 * std::exp(1.0)));
    CHECK(f.radius(4.0) == doctest::Approx(f.radius(-4.0)));
    CHECK(f.validate(1.0).empty());
    CHECK_FALSE(f.validate(0.5).empty());
    CHECK_FALSE(TemperedFamily{-1.0, 0.0, 0.0, 0.0, 8}.validate(1.0).empty());
    // e^{lambda t} r(t)^2 -> 0 as t -> -inf when 2 gamma < lambda
    CHECK(f.tempered_weight(1.0, -200.0) < 1e-30);
}

TEST_CASE("members lie on the sphere of radius r(t)")
{
    const TemperedFamily f{3.0, 0.5, 0.2, 0.0, 8};
    for (int dim : {1, 2}) {
        const Grid g(dim, 5.0, dim == 1 ? 101 : 21);
        const auto members = sample_family(f, g, 1.0, -3.0, 6, 99);
        REQUIRE(members.size() == 6);
        for (const auto& u : members) {
            CHECK(std::sqrt(l2_norm_sq(u)) == doctest::Approx(f.radius(-3.0)).epsilon(1e-12));
        }
        for (std::size_t i = 0; i < members[0].size(); ++i) {
            CHECK(members[1][i] == doctest::Approx(-members[0][i]));
        }
    }
}

TEST_CASE("members are reproducible per seed and index")
{
    const TemperedFamily f;
    const Grid g(1, 5.0, 101);
    const auto a = sample_family(f, g, 1.0, -1.0, 5, 7);
    const auto b = sample_family(f, g, 1.0, -1.0, 5, 7);
    const auto c = sample_family(f, g, 1.0, -1.0, 5, 8);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i] == b[i]);
        CHECK(a[i] == family_member(f, g, -1.0, i, 7));
    }
    CHECK_FALSE(a[3] == c[3]);
    const auto tail = sample_family(f, g, 1.0, -1.0, 2, 7, 3);
    CHECK(tail[0] == a[3]);
    CHECK(tail[1] == a[4]);

    std::set<std::uint64_t> mixed;
    for (std::uint64_t s = 0; s < 100; ++s) {
        mixed.insert(mix_seed(42, s));
    }
    CHECK(mixed.size() == 100);
    CHECK(mix_seed(1, 2) == mix_seed(1, 2));
}

TEST_CASE("non-tempered families are refused when sampling")
{
    const TemperedFamily f{1.0, 0.0, 0.6, 0.0, 8};
    const Grid g(1, 5.0, 11);
    CHECK_THROWS(sample_family(f, g, 1.0, 0.0, 2, 1));
}
