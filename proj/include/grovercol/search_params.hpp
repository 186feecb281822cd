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
 * Search instance shared by every engine: the number of unmarked
 * (collective) basis states and the number of marked basis states.
 */
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace grovercol {

/// Raised for invalid sizes, index sets and scenario settings.
class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/**
 * @brief Search instance with `n1` collective and `n2` marked basis states.
 *
 * Both counts are at least one, so the total is at least two. In the
 * mechanical picture `n1` and `n2` are the masses of ball 1 and ball 2 in
 * unit masses.
 */
class SearchParams {
  public:
    SearchParams(std::uint64_t n1, std::uint64_t n2) : n1_{n1}, n2_{n2} {
        if (n1 == 0 || n2 == 0) {
            throw ConfigError("SearchParams: n1 and n2 must both be >= 1 (got n1=" +
                              std::to_string(n1) + ", n2=" + std::to_string(n2) + ")");
        }
        if (n1 > (std::uint64_t{1} << 62) || n2 > (std::uint64_t{1} << 62)) {
            throw ConfigError("SearchParams: counts exceed 2^62");
        }
    }

    /// Instance of size 2^log2_n with `marked` marked states.
    static SearchParams from_log2(unsigned log2_n, std::uint64_t marked) {
        if (log2_n < 1 || log2_n > 62) {
            throw ConfigError("SearchParams: log2_n must be in [1, 62]");
        }
        const std::uint64_t total = std::uint64_t{1} << log2_n;
        if (marked == 0 || marked >= total) {
            throw ConfigError("SearchParams: marked count must be in [1, N-1] for N=" +
                              std::to_string(total));
        }
        return SearchParams{total - marked, marked};
    }

    [[nodiscard]] std::uint64_t n1() const noexcept { return n1_; }
    [[nodiscard]] std::uint64_t n2() const noexcept { return n2_; }
    [[nodiscard]] std::uint64_t n_total() const noexcept { return n1_ + n2_; }

    friend bool operator==(const SearchParams &, const SearchParams &) = default;

  private:
    std::uint64_t n1_;
    std::uint64_t n2_;
};

/**
 * Efficiency regime of an instance, by the marked share N2/N.
 *
 *  - efficient:   N2 <  N/4
 *  - boundary:    N2 == N/4 (certain success after one iteration)
 *  - inefficient: N/4 < N2 < N/2 (ball 1 reverses on the first iteration)
 *  - invalid:     N2 >= N/2, which contains N1 == N2
 */
enum class Regime { efficient, boundary, inefficient, invalid };

[[nodiscard]] constexpr std::string_view to_string(Regime r) noexcept {
    switch (r) {
    case Regime::efficient:
        return "efficient";
    case Regime::boundary:
        return "boundary";
    case Regime::inefficient:
        return "inefficient";
    case Regime::invalid:
        return "invalid";
    }
    return "unknown";
}

} // namespace grovercol
