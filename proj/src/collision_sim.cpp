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
#include "grovercol/collision_sim.hpp"

#include "grovercol/analytic_model.hpp"

#include <cmath>

namespace grovercol {

CollisionSystem::CollisionSystem(Ball ball1, Ball ball2, double v_init, double m_unit)
    : ball1_{ball1}, ball2_{ball2}, v_init_{v_init}, m_unit_{m_unit} {
    if (!(ball1.mass > 0.0) || !(ball2.mass > 0.0)) {
        throw ConfigError("CollisionSystem: masses must be positive");
    }
    if (!(v_init > 0.0) || !(m_unit > 0.0)) {
        throw ConfigError("CollisionSystem: v_init and m_unit must be positive");
    }
}

CollisionSystem CollisionSystem::from_params(const SearchParams &params, double v_init,
                                             double m_unit) {
    return CollisionSystem{Ball{static_cast<double>(params.n1()) * m_unit, v_init},
                           Ball{static_cast<double>(params.n2()) * m_unit, v_init}, v_init,
                           m_unit};
}

double center_of_mass_velocity(const CollisionSystem &system) {
    const Ball &b1 = system.ball1();
    const Ball &b2 = system.ball2();
    return (b1.mass * b1.velocity + b2.mass * b2.velocity) / (b1.mass + b2.mass);
}

std::pair<double, double> elastic_collide(double m1, double m2, double u, double w) {
    const double vc = (m1 * u + m2 * w) / (m1 + m2);
    return {2.0 * vc - u, 2.0 * vc - w};
}

Ball obstacle_bounce(Ball ball) {
    ball.velocity = -ball.velocity;
    return ball;
}

CaseLabel classify_case(double u, double v) {
    const bool right1 = u >= 0.0;
    const bool right2 = v >= 0.0;
    if (right1 && right2) {
        return CaseLabel::both_rightward;
    }
    if (!right1 && right2) {
        return CaseLabel::opposite;
    }
    if (!right1) {
        return CaseLabel::both_leftward;
    }
    return CaseLabel::approaching;
}

std::pair<CollisionSystem, IterationRecord> iterate(const CollisionSystem &system,
                                                    std::uint64_t previous_n) {
    CollisionSystem next = system;
    next.ball2() = obstacle_bounce(next.ball2());
    const auto [u, v] = elastic_collide(next.ball1().mass, next.ball2().mass,
                                        next.ball1().velocity, next.ball2().velocity);
    next.ball1().velocity = u;
    next.ball2().velocity = v;
    return {next, IterationRecord{previous_n + 1, u, v, classify_case(u, v)}};
}

std::pair<double, double> closed_form_velocities(const SearchParams &params, double v_init,
                                                 std::uint64_t n) {
    // u_n = v sqrt(N) a_n and v_n = v sqrt(N) b_n.
    const TwoLevelState s = closed_form(params, n);
    const double scale = v_init * std::sqrt(static_cast<double>(params.n_total()));
    return {scale * s.a, scale * s.b};
}

std::pair<double, double> first_iteration_general(const SearchParams &params,
                                                  double v_init) {
    const double q = 4.0 * static_cast<double>(params.n2()) /
                     static_cast<double>(params.n_total());
    return {(1.0 - q) * v_init, (3.0 - q) * v_init};
}

Regime detect_regime(const SearchParams &params) {
    const std::uint64_t n = params.n_total();
    const std::uint64_t m = params.n2();
    if (4 * m < n) {
        return Regime::efficient;
    }
    if (4 * m == n) {
        return Regime::boundary;
    }
    if (2 * m < n) {
        return Regime::inefficient;
    }
    return Regime::invalid;
}

} // namespace grovercol
