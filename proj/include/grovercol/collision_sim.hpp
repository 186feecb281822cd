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
 * Two rigid balls on a frictionless line with an obstacle at the right end.
 *
 * One iteration bounces ball 2 off the obstacle (velocity sign flip) and
 * then lets the two balls collide elastically. Positions are not tracked:
 * only velocities enter the recursion, so the state machine is a pure
 * velocity update. Velocities are signed, rightward positive, and the
 * stored ball-2 velocity is the one right after the two-ball collision.
 */
#pragma once

#include "grovercol/search_params.hpp"

#include <cstdint>
#include <string_view>
#include <utility>

namespace grovercol {

struct Ball {
    double mass{1.0};
    double velocity{0.0};

    [[nodiscard]] double kinetic_energy() const noexcept {
        return 0.5 * mass * velocity * velocity;
    }
    [[nodiscard]] double momentum() const noexcept { return mass * velocity; }
};

class CollisionSystem {
  public:
    /// Throws ConfigError unless both masses, v_init and m_unit are positive.
    CollisionSystem(Ball ball1, Ball ball2, double v_init = 1.0, double m_unit = 1.0);

    /// Masses N1 m0 and N2 m0, both balls moving right at v_init.
    static CollisionSystem from_params(const SearchParams &params, double v_init = 1.0,
                                       double m_unit = 1.0);

    [[nodiscard]] const Ball &ball1() const noexcept { return ball1_; }
    [[nodiscard]] const Ball &ball2() const noexcept { return ball2_; }
    [[nodiscard]] Ball &ball1() noexcept { return ball1_; }
    [[nodiscard]] Ball &ball2() noexcept { return ball2_; }
    [[nodiscard]] double v_init() const noexcept { return v_init_; }
    [[nodiscard]] double m_unit() const noexcept { return m_unit_; }

    [[nodiscard]] double kinetic_energy() const noexcept {
        return ball1_.kinetic_energy() + ball2_.kinetic_energy();
    }
    [[nodiscard]] double momentum() const noexcept {
        return ball1_.momentum() + ball2_.momentum();
    }

  private:
    Ball ball1_;
    Ball ball2_;
    double v_init_;
    double m_unit_;
};

/**
 * Direction pattern right after a two-ball collision.
 *
 * Ball 2 sits to the right of ball 1, so a real collision leaves one of the
 * first three patterns. `approaching` (ball 1 rightward, ball 2 leftward)
 * shows up in the abstract recursion once positions have been exchanged
 * and is reported rather than hidden.
 */
enum class CaseLabel { both_rightward, opposite, both_leftward, approaching };

[[nodiscard]] constexpr std::string_view to_string(CaseLabel c) noexcept {
    switch (c) {
    case CaseLabel::both_rightward:
        return "both-rightward";
    case CaseLabel::opposite:
        return "opposite";
    case CaseLabel::both_leftward:
        return "both-leftward";
    case CaseLabel::approaching:
        return "approaching";
    }
    return "unknown";
}

struct IterationRecord {
    std::uint64_t n{0};
    double u{0.0};
    double v{0.0};
    CaseLabel case_label{CaseLabel::both_rightward};
};

/// (m1 u + m2 w) / (m1 + m2) for the current velocities.
[[nodiscard]] double center_of_mass_velocity(const CollisionSystem &system);

/// Post-collision velocities (2 v_c - u, 2 v_c - w).
[[nodiscard]] std::pair<double, double> elastic_collide(double m1, double m2, double u,
                                                        double w);

[[nodiscard]] Ball obstacle_bounce(Ball ball);

/// Non-negative velocities count as rightward.
[[nodiscard]] CaseLabel classify_case(double u, double v);

/// Bounce ball 2, then collide. `record.n` is the previous index plus one.
[[nodiscard]] std::pair<CollisionSystem, IterationRecord>
iterate(const CollisionSystem &system, std::uint64_t previous_n = 0);

/// v sqrt(N/N1) cos((2n+1) theta) and v sqrt(N/N2) sin((2n+1) theta), exact theta.
[[nodiscard]] std::pair<double, double>
closed_form_velocities(const SearchParams &params, double v_init, std::uint64_t n);

/// ((1 - 4 N2/N) v, (3 - 4 N2/N) v).
[[nodiscard]] std::pair<double, double> first_iteration_general(const SearchParams &params,
                                                                double v_init);

[[nodiscard]] Regime detect_regime(const SearchParams &params);

} // namespace grovercol
