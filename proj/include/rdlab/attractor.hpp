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

#ifndef RDLAB_ATTRACTOR_HPP
#define RDLAB_ATTRACTOR_HPP

#include "rdlab/family.hpp"
#include "rdlab/grid.hpp"
#include "rdlab/problem.hpp"
#include "rdlab/solver.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rdlab
{

enum class NormKind
{
    l2,
    h1, ///< sqrt(||w||^2 + ||grad w||^2)
};

std::string to_string(NormKind n);

double field_distance(const Field& a, const Field& b, NormKind norm);

/// sup over y in Y of min over z in Z of ||y - z||; throws on empty sets or mixed grids.
double hausdorff_semidistance(const std::vector<Field>& Y, const std::vector<Field>& Z, NormKind norm);

struct AttractorSetup
{
    const Problem& problem;
    SolverControls controls;
    TemperedFamily family;
    std::uint64_t seed = 0;
    std::size_t ensemble = 6;
    unsigned jobs = 0;
};

/// phi(t, tau - t, u0) for `count` members of `family` sampled at tau - t.
std::vector<Field> pullback_endpoints(const AttractorSetup& setup, const TemperedFamily& family, double tau,
                                      double horizon, std::size_t count, std::uint64_t seed);

/// Semi-distances between consecutive endpoint sets of the horizon ladder.
struct LadderStep
{
    double from_horizon = 0.0;
    double to_horizon = 0.0;
    double forward = 0.0;  ///< d(E_j, E_{j+1})
    double backward = 0.0; ///< d(E_{j+1}, E_j)
    double gap = 0.0;      ///< max of both
};

struct AttractorApprox
{
    double tau = 0.0;
    std::vector<Field> members;
    double horizon = 0.0; ///< pullback horizon of the returned set
    std::uint64_t seed = 0;
    std::size_t ensemble = 0;
    TemperedFamily family;
    std::vector<double> ladder;
    double tol = 0.0;
    std::vector<LadderStep> history;
    bool converged = false;
    std::vector<double> pairwise; ///< L2 distances, row-major members x members
    double diameter = 0.0;
};

/**
 * Runs the ensemble over the horizon ladder. With stop_early the ladder ends at
 * the first gap <= tol; otherwise every rung is computed and the returned set is
 * the one following the first converged gap (or the last set, flagged unconverged).
 */
AttractorApprox approximate_attractor(const AttractorSetup& setup, double tau, const std::vector<double>& ladder,
                                      double tol, bool stop_early = true);

struct InvarianceReport
{
    double tau = 0.0;
    double shift = 0.0;
    double forward = 0.0;  ///< d(phi(s, tau, A(tau)), A(tau + s))
    double backward = 0.0; ///< d(A(tau + s), phi(s, tau, A(tau)))
    double diameter = 0.0;
    double threshold = 0.0;
    bool shifted_converged = false;
    bool passed = false;
};

/// Compares the forward image of A(tau) over time s with an independent approximation of A(tau + s).
InvarianceReport check_invariance(const AttractorSetup& setup, const AttractorApprox& A, double shift,
                                  double tol_abs = 1e-3, double fraction = 0.05);

struct AttractionReport
{
    NormKind norm = NormKind::l2;
    std::vector<double> horizons;
    std::vector<double> distances; ///< d(phi(t, tau - t, B(tau - t)), A(tau)) per horizon
    bool monotone = false;         ///< distances nonincreasing in t
    std::optional<double> first_below_tol;
    double tol = 0.0;
    bool passed = false; ///< last distance <= tol
};

AttractionReport check_attraction(const AttractorSetup& setup, const AttractorApprox& A, const TemperedFamily& B,
                                  const std::vector<double>& horizons, NormKind norm, std::size_t count,
                                  std::uint64_t seed, double tol);

} // namespace rdlab

#endif // RDLAB_ATTRACTOR_HPP
