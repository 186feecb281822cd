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
#include "grovercol/correspondence.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace grovercol;

TEST_CASE("amplitudes_to_velocities") {
    for (auto p : {SearchParams{3, 1}, SearchParams{100, 28}}) {
        const double q = 1.0 / std::sqrt(static_cast<double>(p.n_total()));
        const auto [u, v] = amplitudes_to_velocities({q, q}, p, 2.0);
        CHECK(std::abs(u - 2.0) <= 1e-15);
        CHECK(std::abs(v - 2.0) <= 1e-15);
    }
    const double q8 = 1.0 / std::sqrt(8.0);
    const auto [u8, v8] = amplitudes_to_velocities({0.5 * q8, 2.5 * q8}, SearchParams{7, 1}, 1.0);
    CHECK(std::abs(u8 - 0.5) <= 1e-15);
    CHECK(std::abs(v8 - 2.5) <= 1e-15);
    const auto [u4, v4] = amplitudes_to_velocities({0.0, 1.0}, SearchParams{3, 1}, 1.0);
    CHECK(u4 == 0.0);
    CHECK(v4 == 2.0);
}

TEST_CASE("velocities_to_amplitudes") {
    const auto s = velocities_to_amplitudes(0.0, 2.0, SearchParams{3, 1}, 1.0);
    CHECK(s.a == 0.0);
    CHECK(s.b == 1.0);
    const auto u = velocities_to_amplitudes(1.5, 1.5, SearchParams{10, 6}, 1.5);
    CHECK(std::abs(u.a - 0.25) <= 1e-16);
    CHECK(std::abs(u.b - 0.25) <= 1e-16);
    CHECK_THROWS_AS((void)velocities_to_amplitudes(1, 1, SearchParams{3, 1}, 0.0), ConfigError);

    std::mt19937_64 rng{4};
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const SearchParams p{1 + rng() % 100000, 1 + rng() % 100};
        const double v_init = 0.1 + 5 * std::abs(amp(rng));
        const TwoLevelState s0{amp(rng), amp(rng)};
        const auto [u, w] = amplitudes_to_velocities(s0, p, v_init);
        const auto back = velocities_to_amplitudes(u, w, p, v_init);
        CHECK(std::abs(back.a - s0.a) <= 1e-14);
        CHECK(std::abs(back.b - s0.b) <= 1e-14);
    }
}

TEST_CASE("energy fraction matches marked probability") {
    const SearchParams p{15, 1};
    CHECK(std::abs(energy_fraction_ball2(1.0, p, 1.0) - 1.0 / 16) <= 1e-16);
    CHECK(std::abs(energy_fraction_ball2(4.0, p, 1.0) - 1.0) <= 1e-16);
}

TEST_CASE("verify_analogy") {
    SUBCASE("N=4 three steps") {
        const auto r = verify_analogy(SearchParams{3, 1}, 1.0, 3);
        CHECK(r.statevector_checked);
        CHECK(r.steps_checked == 3);
        CHECK(r.max_velocity_residual <= 1e-12);
        CHECK(r.max_probability_energy_residual <= 1e-12);
        CHECK(r.max_center_residual <= 1e-12);
        CHECK(r.max_statevector_residual <= 1e-12);
    }
    SUBCASE("equal split still maps exactly") {
        const auto r = verify_analogy(SearchParams{2, 2}, 1.0, 8);
        CHECK(r.max_velocity_residual <= 1e-12);
        CHECK(r.max_probability_energy_residual <= 1e-12);
    }
    SUBCASE("N=2^16, 4 sqrt(N) steps") {
        const auto r = verify_analogy(SearchParams::from_log2(16, 1), 1.0, 4 * 256);
        CHECK(r.statevector_checked);
        CHECK(r.max_velocity_residual <= 1e-9);
        CHECK(r.max_probability_energy_residual <= 1e-9);
        CHECK(r.max_center_residual <= 1e-9);
    }
    SUBCASE("above the cap the state vector is skipped") {
        const auto r = verify_analogy(SearchParams::from_log2(30, 1), 2.0, 100, 1u << 20);
        CHECK(r.statevector_skipped);
        CHECK_FALSE(r.statevector_checked);
        CHECK(r.max_velocity_residual <= 1e-9);
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS((void)verify_analogy(SearchParams{3, 1}, 1.0, 0), ConfigError);
        CHECK_THROWS_AS((void)verify_analogy(SearchParams{3, 1}, -1.0, 3), ConfigError);
    }
}
