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
#include "grovercol/quantum_core.hpp"

#include "grovercol/random.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <utility>

namespace grovercol {

StateVector::StateVector(std::vector<double> amplitudes, std::vector<std::size_t> marked)
    : amplitudes_{std::move(amplitudes)}, marked_{std::move(marked)},
      mask_(amplitudes_.size(), 0) {
    const std::size_t n = amplitudes_.size();
    if (n < 2) {
        throw ConfigError("StateVector: need at least two amplitudes");
    }
    if (marked_.empty() || marked_.size() >= n) {
        throw ConfigError("StateVector: marked set size must be in [1, N-1], got " +
                          std::to_string(marked_.size()) + " for N=" + std::to_string(n));
    }
    std::sort(marked_.begin(), marked_.end());
    for (std::size_t i = 0; i < marked_.size(); ++i) {
        if (marked_[i] >= n) {
            throw ConfigError("StateVector: marked index " + std::to_string(marked_[i]) +
                              " out of range for N=" + std::to_string(n));
        }
        if (i > 0 && marked_[i] == marked_[i - 1]) {
            throw ConfigError("StateVector: duplicate marked index " +
                              std::to_string(marked_[i]));
        }
        mask_[marked_[i]] = 1;
    }
}

double StateVector::norm_squared() const {
    double sum = 0.0;
    double comp = 0.0;
    for (double c : amplitudes_) {
        const double term = c * c;
        const double t = sum + term;
        comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
        sum = t;
    }
    return sum + comp;
}

bool StateVector::is_normalized(double tol) const {
    return std::abs(norm_squared() - 1.0) <= tol;
}

double compensated_sum(std::span<const double> values) {
    double sum = 0.0;
    double comp = 0.0;
    for (double x : values) {
        const double t = sum + x;
        comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    }
    return sum + comp;
}

StateVector init_uniform(const SearchParams &params, std::vector<std::size_t> marked) {
    if (marked.size() != params.n2()) {
        throw ConfigError("init_uniform: expected " + std::to_string(params.n2()) +
                          " marked indices, got " + std::to_string(marked.size()));
    }
    const auto n = static_cast<std::size_t>(params.n_total());
    std::vector<double> amps(n, 1.0 / std::sqrt(static_cast<double>(n)));
    return StateVector{std::move(amps), std::move(marked)};
}

StateVector apply_oracle(StateVector state) {
    auto amps = state.amplitudes();
    for (std::size_t i : state.marked()) {
        amps[i] = -amps[i];
    }
    return state;
}

StateVector apply_diffusion(StateVector state) {
    const double twice_mean = 2.0 * mean_amplitude(state);
    for (double &c : state.amplitudes()) {
        c = twice_mean - c;
    }
    return state;
}

StateVector grover_iterate(StateVector state, std::uint64_t count) {
    for (std::uint64_t k = 0; k < count; ++k) {
        state = apply_diffusion(apply_oracle(std::move(state)));
    }
    return state;
}

double marked_probability(const StateVector &state) {
    const auto amps = state.amplitudes();
    double p = 0.0;
    for (std::size_t i : state.marked()) {
        p += amps[i] * amps[i];
    }
    return p;
}

double mean_amplitude(const StateVector &state) {
    return compensated_sum(state.amplitudes()) / static_cast<double>(state.size());
}

std::vector<std::size_t> measure_sample(const StateVector &state, std::uint64_t seed,
                                        std::size_t draws) {
    const auto amps = state.amplitudes();
    std::vector<double> cdf(amps.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        acc += amps[i] * amps[i];
        cdf[i] = acc;
    }
    const double total = acc;

    Rng rng{seed};
    std::vector<std::size_t> out;
    out.reserve(draws);
    for (std::size_t k = 0; k < draws; ++k) {
        const double target = uniform_unit(rng) * total;
        auto idx = static_cast<std::size_t>(
            std::upper_bound(cdf.begin(), cdf.end(), target) - cdf.begin());
        if (idx == cdf.size()) {
            // u * total rounded up to total: take the last nonzero entry.
            idx = cdf.size() - 1;
            while (idx > 0 && amps[idx] == 0.0) {
                --idx;
            }
        }
        out.push_back(idx);
    }
    return out;
}

std::vector<std::size_t> random_marked_set(std::size_t n, std::size_t count,
                                           std::uint64_t seed) {
    if (count > n) {
        throw ConfigError("random_marked_set: count exceeds n");
    }
    // Floyd's sampling: O(count) draws, no full permutation.
    Rng rng{seed};
    std::set<std::size_t> chosen;
    for (std::size_t j = n - count; j < n; ++j) {
        const auto t = static_cast<std::size_t>(uniform_below(rng, j + 1));
        if (!chosen.insert(t).second) {
            chosen.insert(j);
        }
    }
    return {chosen.begin(), chosen.end()};
}

} // namespace grovercol
