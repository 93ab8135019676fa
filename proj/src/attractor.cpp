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

#include "rdlab/attractor.hpp"

#include "rdlab/energy.hpp"
#include "rdlab/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

namespace rdlab
{

std::string to_string(NormKind n)
{
    return n == NormKind::l2 ? "L2" : "H1";
}

double field_distance(const Field& a, const Field& b, NormKind norm)
{
    require_same_grid(a.grid(), b.grid());
    const Field w = a - b;
    const double sq = norm == NormKind::l2 ? l2_norm_sq(w) : l2_norm_sq(w) + h1_seminorm_sq(w);
    return std::sqrt(sq);
}

double hausdorff_semidistance(const std::vector<Field>& Y, const std::vector<Field>& Z, NormKind norm)
{
    if (Y.empty() || Z.empty()) {
        throw std::invalid_argument("Hausdorff semi-distance of an empty set");
    }
    double sup = 0.0;
    for (const Field& y : Y) {
        double inf = std::numeric_limits<double>::infinity();
        for (const Field& z : Z) {
            inf = std::min(inf, field_distance(y, z, norm));
        }
        sup = std::max(sup, inf);
    }
    return sup;
}

std::vector<Field> pullback_endpoints(const AttractorSetup& setup, const TemperedFamily& family, double tau,
                                      double horizon, std::size_t count, std::uint64_t seed)
{
    const auto errors = family.validate(setup.problem.model.lambda);
    if (!errors.empty()) {
        throw std::invalid_argument(errors.front());
    }
    SolverControls controls = setup.controls;
    controls.snapshot_every = 0;
    const Stepper stepper(setup.problem, controls);
    std::vector<std::optional<Field>> slots(count);
    parallel_for(count, setup.jobs, [&](std::size_t i) {
        const Field u0 = family_member(family, setup.problem.grid, tau - horizon, i, seed);
        slots[i].emplace(stepper.pullback(tau, horizon, u0));
    });
    std::vector<Field> out;
    out.reserve(count);
    for (auto& s : slots) {
        out.push_back(std::move(*s));
    }
    return out;
}

AttractorApprox approximate_attractor(const AttractorSetup& setup, double tau, const std::vector<double>& ladder,
                                      double tol, bool stop_early)
{
    if (ladder.size() < 2) {
        throw std::invalid_argument("the horizon ladder needs at least two rungs");
    }
    for (std::size_t i = 0; i < ladder.size(); ++i) {
        if (!(ladder[i] > 0.0) || (i > 0 && !(ladder[i] > ladder[i - 1]))) {
            throw std::invalid_argument("the horizon ladder must be positive and increasing");
        }
    }
    if (setup.ensemble < 2) {
        throw std::invalid_argument("attractor ensemble needs at least two members");
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("attractor tolerance must be positive");
    }

    AttractorApprox A;
    A.tau = tau;
    A.seed = setup.seed;
    A.ensemble = setup.ensemble;
    A.family = setup.family;
    A.ladder = ladder;
    A.tol = tol;

    std::vector<Field> previous =
        pullback_endpoints(setup, setup.family, tau, ladder[0], setup.ensemble, setup.seed);
    std::optional<std::size_t> chosen;
    std::vector<Field> chosen_set;
    for (std::size_t j = 1; j < ladder.size(); ++j) {
        std::vector<Field> current =
            pullback_endpoints(setup, setup.family, tau, ladder[j], setup.ensemble, setup.seed);
        LadderStep step;
        step.from_horizon = ladder[j - 1];
        step.to_horizon = ladder[j];
        step.forward = hausdorff_semidistance(previous, current, NormKind::l2);
        step.backward = hausdorff_semidistance(current, previous, NormKind::l2);
        step.gap = std::max(step.forward, step.backward);
        A.history.push_back(step);
        if (!chosen && step.gap <= tol) {
            chosen = j;
            chosen_set = current;
        }
        previous = std::move(current);
        if (chosen && stop_early) {
            break;
        }
    }
    A.converged = chosen.has_value();
    if (chosen) {
        A.horizon = ladder[*chosen];
        A.members = std::move(chosen_set);
    }
    else {
        A.horizon = A.history.back().to_horizon;
        A.members = std::move(previous);
    }

    const std::size_t n = A.members.size();
    A.pairwise.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = i + 1; k < n; ++k) {
            const double d = field_distance(A.members[i], A.members[k], NormKind::l2);
            A.pairwise[i * n + k] = d;
            A.pairwise[k * n + i] = d;
            A.diameter = std::max(A.diameter, d);
        }
    }
    return A;
}

InvarianceReport check_invariance(const AttractorSetup& setup, const AttractorApprox& A, double shift,
                                  double tol_abs, double fraction)
{
    if (!(shift > 0.0)) {
        throw std::invalid_argument("invariance shift must be positive");
    }
    if (A.members.empty()) {
        throw std::invalid_argument("empty attractor approximation");
    }
    SolverControls controls = setup.controls;
    controls.snapshot_every = 0;
    const Stepper stepper(setup.problem, controls);
    std::vector<std::optional<Field>> slots(A.members.size());
    parallel_for(A.members.size(), setup.jobs,
                 [&](std::size_t i) { slots[i].emplace(stepper.pullback(A.tau + shift, shift, A.members[i])); });
    std::vector<Field> image;
    for (auto& s : slots) {
        image.push_back(std::move(*s));
    }

    AttractorSetup shifted = setup;
    shifted.seed = A.seed;
    shifted.ensemble = A.ensemble;
    shifted.family = A.family;
    const AttractorApprox B = approximate_attractor(shifted, A.tau + shift, A.ladder, A.tol);

    InvarianceReport r;
    r.tau = A.tau;
    r.shift = shift;
    r.forward = hausdorff_semidistance(image, B.members, NormKind::l2);
    r.backward = hausdorff_semidistance(B.members, image, NormKind::l2);
    r.diameter = A.diameter;
    r.threshold = std::max(tol_abs, fraction * A.diameter);
    r.shifted_converged = B.converged;
    r.passed = r.forward <= r.threshold && r.backward <= r.threshold;
    return r;
}

AttractionReport check_attraction(const AttractorSetup& setup, const AttractorApprox& A, const TemperedFamily& B,
                                  const std::vector<double>& horizons, NormKind norm, std::size_t count,
                                  std::uint64_t seed, double tol)
{
    if (horizons.empty() || count == 0) {
        throw std::invalid_argument("attraction check needs horizons and members");
    }
    AttractionReport r;
    r.norm = norm;
    r.horizons = horizons;
    r.tol = tol;
    for (double t : horizons) {
        const std::vector<Field> endpoints = pullback_endpoints(setup, B, A.tau, t, count, seed);
        r.distances.push_back(hausdorff_semidistance(endpoints, A.members, norm));
        if (!r.first_below_tol && r.distances.back() <= tol) {
            r.first_below_tol = t;
        }
    }
    r.monotone = std::is_sorted(r.distances.rbegin(), r.distances.rend());
    r.passed = r.distances.back() <= tol;
    return r;
}

} // namespace rdlab
