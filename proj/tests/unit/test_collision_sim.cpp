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
#include "grovercol/analytic_model.hpp"
#include "grovercol/collision_sim.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace grovercol;

TEST_CASE("center_of_mass_velocity") {
    CHECK(center_of_mass_velocity(CollisionSystem{Ball{3, 1}, Ball{1, -1}}) == 0.5);
    CHECK(center_of_mass_velocity(CollisionSystem{Ball{2.5, 0.3}, Ball{7, 0.3}}) ==
          doctest::Approx(0.3).epsilon(1e-15));
    CHECK(center_of_mass_velocity(CollisionSystem{Ball{4, 1.25}, Ball{4, -1.25}}) == 0.0);

    // Mean of the per-particle velocities for integer masses.
    const CollisionSystem sys{Ball{5, 0.7}, Ball{3, -1.9}};
    const double per_particle = (5 * 0.7 + 3 * -1.9) / 8.0;
    CHECK(center_of_mass_velocity(sys) == doctest::Approx(per_particle).epsilon(1e-15));
}

TEST_CASE("CollisionSystem validation") {
    CHECK_THROWS_AS(CollisionSystem(Ball{0, 1}, Ball{1, 1}), ConfigError);
    CHECK_THROWS_AS(CollisionSystem(Ball{1, 1}, Ball{-2, 1}), ConfigError);
    CHECK_THROWS_AS(CollisionSystem(Ball{1, 1}, Ball{1, 1}, 0.0), ConfigError);
    CHECK_THROWS_AS(CollisionSystem(Ball{1, 1}, Ball{1, 1}, 1.0, -1.0), ConfigError);
    const auto sys = CollisionSystem::from_params(SearchParams{7, 1}, 2.0, 0.5);
    CHECK(sys.ball1().mass == 3.5);
    CHECK(sys.ball2().mass == 0.5);
    CHECK(sys.ball1().velocity == 2.0);
    CHECK(sys.ball2().velocity == 2.0);
}

TEST_CASE("elastic_collide") {
    CHECK(elastic_collide(7, 1, 1, -1) == std::pair{0.5, 2.5});
    CHECK(elastic_collide(3, 1, 1, -1) == std::pair{0.0, 2.0});
    for (double k : {0.5, 1.0, 3.0, 1e3}) {
        const auto [u, w] = elastic_collide(k, k, 0.75, -2.0);
        CHECK(u == doctest::Approx(-2.0).epsilon(1e-15));
        CHECK(w == doctest::Approx(0.75).epsilon(1e-15));
    }
}

TEST_CASE("elastic_collide conserves momentum and energy") {
    std::mt19937_64 rng{77};
    std::uniform_real_distribution<double> logm(-2.0, 2.0);
    std::uniform_real_distribution<double> vel(-10.0, 10.0);
    for (int i = 0; i < 20000; ++i) {
        const double m1 = std::pow(10.0, logm(rng));
        const double m2 = std::pow(10.0, logm(rng));
        const double u = vel(rng);
        const double w = vel(rng);
        const auto [u1, w1] = elastic_collide(m1, m2, u, w);
        const double p_scale = m1 * std::abs(u) + m2 * std::abs(w);
        CHECK(std::abs((m1 * u1 + m2 * w1) - (m1 * u + m2 * w)) <= 1e-12 * p_scale);
        const double e0 = 0.5 * m1 * u * u + 0.5 * m2 * w * w;
        const double e1 = 0.5 * m1 * u1 * u1 + 0.5 * m2 * w1 * w1;
        CHECK(std::abs(e1 - e0) <= 1e-12 * e0);
        // Center-of-mass frame inversion.
        const double vc = (m1 * u + m2 * w) / (m1 + m2);
        CHECK(u1 == 2.0 * vc - u);
        CHECK(w1 == 2.0 * vc - w);
    }
}

TEST_CASE("obstacle_bounce") {
    CHECK(obstacle_bounce(Ball{2, 1}).velocity == -1);
    CHECK(obstacle_bounce(Ball{2, 0}).velocity == 0);
    CHECK(obstacle_bounce(Ball{2, -2.5}).velocity == 2.5);
    const Ball b{3.3, -1.7};
    CHECK(obstacle_bounce(b).kinetic_energy() == b.kinetic_energy());
    CHECK(obstacle_bounce(b).mass == b.mass);
}

TEST_CASE("classify_case") {
    CHECK(classify_case(0.5, 2.5) == CaseLabel::both_rightward);
    CHECK(classify_case(-0.25, 2.75) == CaseLabel::opposite);
    CHECK(classify_case(-1, -0.5) == CaseLabel::both_leftward);
    CHECK(classify_case(0.0, 2.0) == CaseLabel::both_rightward);
    CHECK(classify_case(1.0, -1.0) == CaseLabel::approaching);
}

TEST_CASE("iterate") {
    SUBCASE("N=8 worked case is exact") {
        const auto sys = CollisionSystem::from_params(SearchParams{7, 1});
        const auto [s1, r1] = iterate(sys);
        CHECK(r1.n == 1);
        CHECK(r1.u == 0.5);
        CHECK(r1.v == 2.5);
        CHECK(r1.case_label == CaseLabel::both_rightward);
        const auto [s2, r2] = iterate(s1, r1.n);
        CHECK(r2.n == 2);
        CHECK(r2.u == -0.25);
        CHECK(r2.v == 2.75);
        CHECK(r2.case_label == CaseLabel::opposite);
        CHECK(s2.ball1().velocity == -0.25);
    }
    SUBCASE("equal masses: (u, v) -> (-v, u)") {
        const CollisionSystem sys{Ball{2, 0.3}, Ball{2, -1.1}};
        const auto [next, rec] = iterate(sys);
        CHECK(rec.u == doctest::Approx(1.1).epsilon(1e-15));
        CHECK(rec.v == doctest::Approx(0.3).epsilon(1e-15));
    }
    SUBCASE("matches the iteration matrix") {
        const SearchParams p{13, 4};
        const Mat2 t = build_matrix(p);
        CollisionSystem sys = CollisionSystem::from_params(p);
        TwoLevelState s{1.0, 1.0};
        for (int k = 0; k < 40; ++k) {
            sys = iterate(sys).first;
            s = t * s;
            CHECK(std::abs(sys.ball1().velocity - s.a) <= 1e-12);
            CHECK(std::abs(sys.ball2().velocity - s.b) <= 1e-12);
            CHECK(std::abs(sys.kinetic_energy() - 8.5) <= 1e-12 * 8.5);
        }
    }
    SUBCASE("the approaching pattern does occur in the recursion") {
        // Equal masses rotate (1, 1) through all four sign patterns.
        CollisionSystem sys = CollisionSystem::from_params(SearchParams{1, 1});
        CaseLabel seen[4];
        for (int k = 0; k < 4; ++k) {
            auto [next, rec] = iterate(sys);
            seen[k] = rec.case_label;
            sys = next;
        }
        CHECK(seen[0] == CaseLabel::opposite);
        CHECK(seen[1] == CaseLabel::both_leftward);
        CHECK(seen[2] == CaseLabel::approaching);
        CHECK(seen[3] == CaseLabel::both_rightward);
    }
}

TEST_CASE("closed_form_velocities") {
    const auto [u1, v1] = closed_form_velocities(SearchParams{3, 1}, 1.0, 1);
    CHECK(std::abs(u1) <= 1e-15);
    CHECK(std::abs(v1 - 2.0) <= 1e-15);
    const auto [u0, v0] = closed_form_velocities(SearchParams{50, 9}, 1.5, 0);
    CHECK(std::abs(u0 - 1.5) <= 1e-15);
    CHECK(std::abs(v0 - 1.5) <= 1e-15);

    const SearchParams p8{7, 1};
    const auto two = iterate(iterate(CollisionSystem::from_params(p8)).first).second;
    const auto [u2, v2] = closed_form_velocities(p8, 1.0, 2);
    CHECK(std::abs(u2 - two.u) <= 1e-15);
    CHECK(std::abs(v2 - two.v) <= 1e-14);

    SUBCASE("recursion agreement up to 4 sqrt(N/N2), N up to 2^20") {
        for (unsigned k : {3u, 10u, 20u}) {
            for (std::uint64_t m : {std::uint64_t{1}, std::uint64_t{5}}) {
                const auto p = SearchParams::from_log2(k, m);
                CollisionSystem sys = CollisionSystem::from_params(p);
                const auto limit = static_cast<std::uint64_t>(
                    4 * std::sqrt(static_cast<double>(p.n_total()) / m));
                for (std::uint64_t n = 0; n <= limit; ++n) {
                    const auto [u, v] = closed_form_velocities(p, 1.0, n);
                    REQUIRE(std::abs(u - sys.ball1().velocity) <= 1e-10);
                    REQUIRE(std::abs(v - sys.ball2().velocity) <= 1e-10);
                    sys = iterate(sys).first;
                }
            }
        }
    }
}

TEST_CASE("first_iteration_general") {
    const auto [a, b] = first_iteration_general(SearchParams{7, 1}, 1.0);
    CHECK(a == 0.5);
    CHECK(b == 2.5);
    const auto [c, d] = first_iteration_general(SearchParams{12, 4}, 2.0);
    CHECK(c == 0.0);
    CHECK(d == 4.0);
    const auto [e, f] = first_iteration_general(SearchParams{2, 2}, 1.0);
    CHECK(e == -1.0);
    CHECK(f == 1.0);
    const auto rec = iterate(CollisionSystem::from_params(SearchParams{2, 2})).second;
    CHECK(rec.u == -1.0);
    CHECK(rec.v == 1.0);
}

TEST_CASE("detect_regime") {
    CHECK(detect_regime(SearchParams::from_log2(10, 1)) == Regime::efficient);
    CHECK(detect_regime(SearchParams{12, 4}) == Regime::boundary);
    CHECK(detect_regime(SearchParams{3, 1}) == Regime::boundary);
    CHECK(detect_regime(SearchParams{9, 4}) == Regime::inefficient);
    CHECK(detect_regime(SearchParams{5, 5}) == Regime::invalid);
    CHECK(detect_regime(SearchParams{2, 9}) == Regime::invalid);
}

TEST_CASE("velocity of ball 2 grows by about 2v per iteration") {
    const auto p = SearchParams::from_log2(12, 1);
    const double n_total = static_cast<double>(p.n_total());
    CollisionSystem sys = CollisionSystem::from_params(p);
    const auto limit = static_cast<int>(std::sqrt(n_total) / 10);
    for (int n = 0; n <= limit; ++n) {
        const double k = 2 * n + 1;
        CHECK(std::abs(sys.ball2().velocity - k) <= k * k * k / (6 * n_total));
        sys = iterate(sys).first;
    }
}

TEST_CASE("ball 2 captures at least 1 - 1/N of the energy at n0") {
    for (unsigned k = 2; k <= 14; ++k) {
        const auto p = SearchParams::from_log2(k, 1);
        const auto n0 = optimal_iterations(p).iterations;
        CollisionSystem sys = CollisionSystem::from_params(p);
        for (std::uint64_t n = 0; n < n0; ++n) {
            sys = iterate(sys).first;
        }
        const double fraction = sys.ball2().kinetic_energy() / sys.kinetic_energy();
        CHECK(fraction >= 1.0 - 1.0 / static_cast<double>(p.n_total()) - 1e-12);
    }
}
