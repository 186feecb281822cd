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

#include "grovercol/collision_sim.hpp"
#include "grovercol/quantum_core.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <vector>

namespace grovercol {

namespace {

double velocity_scale(const SearchParams &params, double v_init) {
    return v_init * std::sqrt(static_cast<double>(params.n_total()));
}

struct AmplitudeTrack {
    std::vector<TwoLevelState> states; // n = 0..steps
    std::vector<double> means;         // mean after the oracle of iteration n+1
};

struct VelocityTrack {
    std::vector<std::pair<double, double>> velocities;
    std::vector<double> centers; // v_c of each two-ball collision
};

AmplitudeTrack recursion_leg(const SearchParams &params, std::uint64_t steps) {
    AmplitudeTrack track;
    track.states.reserve(steps + 1);
    track.means.reserve(steps);
    const double n1 = static_cast<double>(params.n1());
    const double n2 = static_cast<double>(params.n2());
    const double n = static_cast<double>(params.n_total());
    TwoLevelState s{1.0 / std::sqrt(n), 1.0 / std::sqrt(n)};
    track.states.push_back(s);
    for (std::uint64_t k = 0; k < steps; ++k) {
        track.means.push_back((n1 * s.a - n2 * s.b) / n);
        s = step(s, params);
        track.states.push_back(s);
    }
    return track;
}

VelocityTrack collision_leg(const SearchParams &params, double v_init, std::uint64_t steps) {
    VelocityTrack track;
    track.velocities.reserve(steps + 1);
    track.centers.reserve(steps);
    CollisionSystem sys = CollisionSystem::from_params(params, v_init);
    track.velocities.emplace_back(sys.ball1().velocity, sys.ball2().velocity);
    for (std::uint64_t k = 0; k < steps; ++k) {
        CollisionSystem bounced = sys;
        bounced.ball2() = obstacle_bounce(bounced.ball2());
        track.centers.push_back(center_of_mass_velocity(bounced));
        auto [next, rec] = iterate(sys, k);
        sys = next;
        track.velocities.emplace_back(rec.u, rec.v);
    }
    return track;
}

struct StatevectorTrack {
    std::vector<TwoLevelState> representative; // first unmarked / first marked entry
    std::vector<double> probabilities;
    std::vector<double> means;
    double max_entry_residual{0.0};
};

StatevectorTrack statevector_leg(const SearchParams &params, std::uint64_t steps,
                                 std::uint64_t seed, const AmplitudeTrack &reference) {
    const auto n = static_cast<std::size_t>(params.n_total());
    StateVector sv = init_uniform(
        params, random_marked_set(n, static_cast<std::size_t>(params.n2()), seed));
    std::size_t first_unmarked = 0;
    while (sv.is_marked(first_unmarked)) {
        ++first_unmarked;
    }
    const std::size_t first_marked = sv.marked().front();

    StatevectorTrack track;
    auto record = [&](std::uint64_t k) {
        const auto amps = sv.amplitudes();
        const TwoLevelState &ref = reference.states[k];
        for (std::size_t i = 0; i < n; ++i) {
            const double expect = sv.is_marked(i) ? ref.b : ref.a;
            track.max_entry_residual =
                std::max(track.max_entry_residual, std::abs(amps[i] - expect));
        }
        track.representative.push_back({amps[first_unmarked], amps[first_marked]});
        track.probabilities.push_back(marked_probability(sv));
    };
    record(0);
    for (std::uint64_t k = 0; k < steps; ++k) {
        sv = apply_oracle(std::move(sv));
        track.means.push_back(mean_amplitude(sv));
        sv = apply_diffusion(std::move(sv));
        record(k + 1);
    }
    return track;
}

} // namespace

std::pair<double, double> amplitudes_to_velocities(const TwoLevelState &state,
                                                   const SearchParams &params,
                                                   double v_init) {
    const double scale = velocity_scale(params, v_init);
    return {scale * state.a, scale * state.b};
}

TwoLevelState velocities_to_amplitudes(double u, double v_ball2, const SearchParams &params,
                                       double v_init) {
    if (!(v_init > 0.0)) {
        throw ConfigError("velocities_to_amplitudes: v_init must be positive");
    }
    const double scale = velocity_scale(params, v_init);
    return {u / scale, v_ball2 / scale};
}

double energy_fraction_ball2(double v_ball2, const SearchParams &params, double v_init) {
    const double ratio = v_ball2 / v_init;
    return static_cast<double>(params.n2()) * ratio * ratio /
           static_cast<double>(params.n_total());
}

AnalogyReport verify_analogy(const SearchParams &params, double v_init, std::uint64_t steps,
                             std::uint64_t statevector_cap, std::uint64_t seed) {
    if (steps == 0) {
        throw ConfigError("verify_analogy: steps must be >= 1");
    }
    if (!(v_init > 0.0)) {
        throw ConfigError("verify_analogy: v_init must be positive");
    }

    const AmplitudeTrack amps = recursion_leg(params, steps);
    const bool run_sv = params.n_total() <= statevector_cap;
    std::future<StatevectorTrack> sv_future;
    if (run_sv) {
        sv_future = std::async(std::launch::async, statevector_leg, std::cref(params), steps,
                               seed, std::cref(amps));
    }
    const VelocityTrack vels = collision_leg(params, v_init, steps);

    AnalogyReport report;
    report.steps_checked = steps;
    const double scale = velocity_scale(params, v_init);
    const double n2 = static_cast<double>(params.n2());
    auto bump = [](double &slot, double value) { slot = std::max(slot, value); };

    for (std::uint64_t k = 0; k <= steps; ++k) {
        const auto [u, v] = vels.velocities[k];
        const TwoLevelState &s = amps.states[k];
        bump(report.max_velocity_residual, std::abs(u - scale * s.a));
        bump(report.max_velocity_residual, std::abs(v - scale * s.b));
        bump(report.max_probability_energy_residual,
             std::abs(n2 * s.b * s.b - energy_fraction_ball2(v, params, v_init)));
        if (k < steps) {
            bump(report.max_center_residual, std::abs(vels.centers[k] - scale * amps.means[k]));
        }
    }

    if (run_sv) {
        const StatevectorTrack sv = sv_future.get();
        report.statevector_checked = true;
        report.max_statevector_residual = sv.max_entry_residual;
        for (std::uint64_t k = 0; k <= steps; ++k) {
            const auto [u, v] = vels.velocities[k];
            bump(report.max_velocity_residual, std::abs(u - scale * sv.representative[k].a));
            bump(report.max_velocity_residual, std::abs(v - scale * sv.representative[k].b));
            bump(report.max_probability_energy_residual,
                 std::abs(sv.probabilities[k] - energy_fraction_ball2(v, params, v_init)));
            if (k < steps) {
                bump(report.max_center_residual, std::abs(vels.centers[k] - scale * sv.means[k]));
            }
        }
    } else {
        report.statevector_skipped = true;
    }
    return report;
}

} // namespace grovercol
