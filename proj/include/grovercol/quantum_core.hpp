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
 * Full state-vector Grover simulation with real amplitudes.
 *
 * A Grover iteration is U = D C: the oracle C flips the sign of every
 * marked amplitude, the diffusion D maps each amplitude c_i to 2A - c_i
 * where A is the mean amplitude. D is applied as an O(N) two-pass kernel
 * and never materialized as a matrix.
 */
#pragma once

#include "grovercol/search_params.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace grovercol {

/**
 * @brief Real amplitude vector of length N with a set of marked indices.
 *
 * The marked indices are distinct, sorted and lie in [0, N). Instances
 * are plain values; all operations below take them by value and return
 * the transformed copy.
 */
class StateVector {
  public:
    /**
     * @brief Wrap existing amplitudes.
     *
     * Throws ConfigError when the marked set has duplicates or out-of-range
     * entries, when fewer than two amplitudes are given, or when the marked
     * set is empty or covers every index. Normalization is not checked
     * here; see is_normalized().
     */
    StateVector(std::vector<double> amplitudes, std::vector<std::size_t> marked);

    [[nodiscard]] std::size_t size() const noexcept { return amplitudes_.size(); }
    [[nodiscard]] std::span<const double> amplitudes() const noexcept {
        return amplitudes_;
    }
    [[nodiscard]] std::span<double> amplitudes() noexcept { return amplitudes_; }
    [[nodiscard]] std::span<const std::size_t> marked() const noexcept { return marked_; }
    [[nodiscard]] bool is_marked(std::size_t index) const noexcept {
        return mask_[index] != 0;
    }
    /// Search instance implied by the length and the marked set.
    [[nodiscard]] SearchParams params() const {
        return SearchParams{size() - marked_.size(), marked_.size()};
    }

    /// Sum of squared amplitudes.
    [[nodiscard]] double norm_squared() const;
    [[nodiscard]] bool is_normalized(double tol = 1e-12) const;

  private:
    std::vector<double> amplitudes_;
    std::vector<std::size_t> marked_;
    std::vector<unsigned char> mask_;
};

/// Sum with Neumaier compensation; error stays O(eps) independent of length.
[[nodiscard]] double compensated_sum(std::span<const double> values);

/// Equal superposition 1/sqrt(N) over N = params.n_total() states.
[[nodiscard]] StateVector init_uniform(const SearchParams &params,
                                       std::vector<std::size_t> marked);

/// Oracle C: negate marked amplitudes.
[[nodiscard]] StateVector apply_oracle(StateVector state);

/// Diffusion D (inversion about average): c_i -> 2A - c_i.
[[nodiscard]] StateVector apply_diffusion(StateVector state);

/// Applies D C `count` times.
[[nodiscard]] StateVector grover_iterate(StateVector state, std::uint64_t count);

/// Sum of squared marked amplitudes.
[[nodiscard]] double marked_probability(const StateVector &state);

/// Mean amplitude A.
[[nodiscard]] double mean_amplitude(const StateVector &state);

/**
 * @brief Draw `draws` measurement outcomes.
 *
 * Inverse-CDF sampling over the squared amplitudes. The generator is
 * std::mt19937_64 seeded with `seed`; each draw consumes one 64-bit output
 * whose top 53 bits give u in [0, 1), and the outcome is the first index
 * whose cumulative probability exceeds u times the total. The sequence
 * is therefore identical on every conforming platform.
 */
[[nodiscard]] std::vector<std::size_t> measure_sample(const StateVector &state,
                                                      std::uint64_t seed,
                                                      std::size_t draws);

/// `count` distinct indices in [0, n) chosen by a seeded partial shuffle, sorted.
[[nodiscard]] std::vector<std::size_t> random_marked_set(std::size_t n, std::size_t count,
                                                         std::uint64_t seed);

} // namespace grovercol
