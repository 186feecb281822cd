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
 * Exact two-amplitude model of Grover search.
 *
 * Starting from the uniform state, every collective amplitude stays equal to
 * some a_n and every marked amplitude to some b_n. One iteration maps
 * (a, b) through the 2x2 matrix
 *
 *        1   | N1 - N2    -2 N2   |
 *   T = ---  |                    |
 *        N   |  2 N1     N1 - N2  |
 *
 * whose eigenvalues are exp(+-2i theta) with sin(theta) = sqrt(N2 / N).
 * With that exact angle
 *
 *   a_n = cos((2n+1) theta) / sqrt(N1),   b_n = sin((2n+1) theta) / sqrt(N2).
 */
#pragma once

#include "grovercol/search_params.hpp"

#include <array>
#include <complex>
#include <cstdint>

namespace grovercol {

/// Common amplitudes (a, b) of the collective and marked basis states.
struct TwoLevelState {
    double a{0.0};
    double b{0.0};

    /// N1 a^2 + N2 b^2, equal to one for a normalized search state.
    [[nodiscard]] double weighted_norm(const SearchParams &p) const noexcept {
        return static_cast<double>(p.n1()) * a * a + static_cast<double>(p.n2()) * b * b;
    }
};

/// Row-major real 2x2 matrix.
struct Mat2 {
    std::array<std::array<double, 2>, 2> m{};

    [[nodiscard]] static constexpr Mat2 identity() noexcept {
        return Mat2{{{{1.0, 0.0}, {0.0, 1.0}}}};
    }
    [[nodiscard]] constexpr double operator()(int r, int c) const noexcept { return m[r][c]; }
    [[nodiscard]] constexpr double determinant() const noexcept {
        return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    }
};

[[nodiscard]] Mat2 operator*(const Mat2 &lhs, const Mat2 &rhs) noexcept;
[[nodiscard]] TwoLevelState operator*(const Mat2 &t, const TwoLevelState &s) noexcept;

using Complex = std::complex<double>;
using CMat2 = std::array<std::array<Complex, 2>, 2>;

[[nodiscard]] CMat2 operator*(const CMat2 &lhs, const CMat2 &rhs) noexcept;

/// Spectral data of T: eigenvalues, eigenvector matrix S, its inverse, angle.
struct Spectral {
    Complex lambda_plus;
    Complex lambda_minus;
    CMat2 s_matrix;
    CMat2 s_inverse;
    double theta{0.0};
};

/// How the rotation half-angle is obtained.
enum class ThetaMode {
    exact,       ///< arcsin(sqrt(N2 / N))
    paper_approx ///< sqrt(N2 / N), the small-angle value (1/sqrt(N) for one marked state)
};

[[nodiscard]] double rotation_angle(const SearchParams &params,
                                    ThetaMode mode = ThetaMode::exact);

/// The iteration matrix T.
[[nodiscard]] Mat2 build_matrix(const SearchParams &params);

/// One iteration of the two-level recursion: (a, b) <- T (a, b).
[[nodiscard]] TwoLevelState step(const TwoLevelState &state, const SearchParams &params);

/// Eigen-decomposition T = S diag(lambda+, lambda-) S^-1.
[[nodiscard]] Spectral spectral_decompose(const SearchParams &params);

/**
 * @brief T^n through the spectral form S diag(lambda+^n, lambda-^n) S^-1.
 *
 * The product is formed in extended precision with lambda^n = exp(+-2i n theta).
 * Throws std::logic_error if the imaginary residue of the product exceeds
 * 1e-13, which only happens if S or S^-1 is inconsistent with T.
 */
[[nodiscard]] Mat2 matrix_power(const SearchParams &params, std::uint64_t n);

/// Closed-form (a_n, b_n) from the uniform start.
[[nodiscard]] TwoLevelState closed_form(const SearchParams &params, std::uint64_t n,
                                        ThetaMode mode = ThetaMode::exact);

/// N2 b_n^2 = sin^2((2n+1) theta).
[[nodiscard]] double success_probability(const SearchParams &params, std::uint64_t n,
                                         ThetaMode mode = ThetaMode::exact);

/// Optimal iteration count with regime warnings.
struct OptimalCount {
    std::uint64_t iterations{0};
    /// N2 > N/4: ball 1 reverses on the first iteration, later iterations lose ground.
    bool beyond_quarter{false};
    /// N1 == N2: no iteration count raises the success probability above N2/N.
    bool equal_split{false};

    [[nodiscard]] bool has_warning() const noexcept { return beyond_quarter || equal_split; }
};

/**
 * round(pi / (4 theta) - 1/2) with ties to even, clamped below at 0.
 * For one marked state and large N this is the familiar pi sqrt(N) / 4 - 1/2.
 */
[[nodiscard]] OptimalCount optimal_iterations(const SearchParams &params,
                                              ThetaMode mode = ThetaMode::exact);

} // namespace grovercol
