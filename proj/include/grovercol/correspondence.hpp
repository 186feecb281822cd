// Copyright 2026 The grovercol Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Map between the search amplitudes and the ball velocities.
 *
 *   basis state |i>        <->  particle p_i
 *   amplitude of |i>       <->  velocity of p_i      (velocity = v sqrt(N) amplitude)
 *   probability of |i>     <->  kinetic-energy share of p_i
 *   marked / collective    <->  ball 2 / ball 1
 *   mean amplitude A       <->  center-of-mass velocity v_c
 *
 * The factor v sqrt(N) sends the uniform amplitude 1/sqrt(N) to the common
 * initial speed v. Energy is normalized by the conserved total N m0 v^2 / 2.
 */
#pragma once

#include "grovercol/analytic_model.hpp"
#include "grovercol/search_params.hpp"

#include <cstddef>
#include <cstdint>
#include <utility>

namespace grovercol {

/// Largest N for which verify_analogy runs the full state vector.
inline constexpr std::uint64_t kDefaultStatevectorCap = std::uint64_t{1} << 20;

struct AnalogyReport {
    /// max_n |u_n - v sqrt(N) a_n| and |v_n - v sqrt(N) b_n| over all legs.
    double max_velocity_residual{0.0};
    /// max_n |N2 b_n^2 - KE2_n / KE_total|.
    double max_probability_energy_residual{0.0};
    /// max over collisions of |v_c - v sqrt(N) A|.
    double max_center_residual{0.0};
    /// max_n |statevector amplitude - recursion amplitude| (all entries).
    double max_statevector_residual{0.0};
    std::uint64_t steps_checked{0};
    bool statevector_checked{false};
    bool statevector_skipped{false};
};

[[nodiscard]] std::pair<double, double>
amplitudes_to_velocities(const TwoLevelState &state, const SearchParams &params,
                         double v_init);

/// Inverse of amplitudes_to_velocities; throws ConfigError unless v_init > 0.
[[nodiscard]] TwoLevelState velocities_to_amplitudes(double u, double v_ball2,
                                                     const SearchParams &params,
                                                     double v_init);

/// Kinetic energy of ball 2 over the conserved total, N2 m0 w^2 / (N m0 v^2).
[[nodiscard]] double energy_fraction_ball2(double v_ball2, const SearchParams &params,
                                           double v_init);

/**
 * @brief Run the recursion, the collision iteration and (when N <= cap)
 * the state vector side by side for `steps` iterations.
 *
 * The state-vector leg runs on its own thread; the other two are O(1) per
 * step. Throws ConfigError if steps == 0 or v_init <= 0.
 */
[[nodiscard]] AnalogyReport verify_analogy(const SearchParams &params, double v_init,
                                           std::uint64_t steps,
                                           std::uint64_t statevector_cap = kDefaultStatevectorCap,
                                           std::uint64_t seed = 0);

} // namespace grovercol
