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

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace grovercol {

namespace {

using LComplex = std::complex<long double>;
using LCMat2 = std::array<std::array<LComplex, 2>, 2>;

LCMat2 mul(const LCMat2 &x, const LCMat2 &y) {
    LCMat2 r{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            r[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
        }
    }
    return r;
}

long double rotation_angle_ld(const SearchParams &p, ThetaMode mode) {
    const long double ratio =
        static_cast<long double>(p.n2()) / static_cast<long double>(p.n_total());
    const long double s = std::sqrt(ratio);
    return mode == ThetaMode::exact ? std::asin(s) : s;
}

} // namespace

Mat2 operator*(const Mat2 &x, const Mat2 &y) noexcept {
    Mat2 r;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            r.m[i][j] = x.m[i][0] * y.m[0][j] + x.m[i][1] * y.m[1][j];
        }
    }
    return r;
}

TwoLevelState operator*(const Mat2 &t, const TwoLevelState &s) noexcept {
    return {t.m[0][0] * s.a + t.m[0][1] * s.b, t.m[1][0] * s.a + t.m[1][1] * s.b};
}

CMat2 operator*(const CMat2 &x, const CMat2 &y) noexcept {
    CMat2 r{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            r[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
        }
    }
    return r;
}

double rotation_angle(const SearchParams &params, ThetaMode mode) {
    return static_cast<double>(rotation_angle_ld(params, mode));
}

Mat2 build_matrix(const SearchParams &params) {
    const auto n1 = static_cast<double>(params.n1());
    const auto n2 = static_cast<double>(params.n2());
    const auto n = static_cast<double>(params.n_total());
    // N1 - N2 in integers so equal counts give an exact zero.
    const double diag =
        (params.n1() >= params.n2() ? static_cast<double>(params.n1() - params.n2())
                                    : -static_cast<double>(params.n2() - params.n1())) /
        n;
    return Mat2{{{{diag, -2.0 * n2 / n}, {2.0 * n1 / n, diag}}}};
}

TwoLevelState step(const TwoLevelState &state, const SearchParams &params) {
    return build_matrix(params) * state;
}

Spectral spectral_decompose(const SearchParams &params) {
    const auto n1 = static_cast<double>(params.n1());
    const auto n2 = static_cast<double>(params.n2());
    const auto n = static_cast<double>(params.n_total());
    const Mat2 t = build_matrix(params);
    const double im = 2.0 * std::sqrt(n1 * n2) / n;
    const double r = std::sqrt(n1 / n2);

    Spectral sp;
    sp.lambda_plus = Complex{t.m[0][0], im};
    sp.lambda_minus = Complex{t.m[0][0], -im};
    sp.s_matrix = {{{Complex{1.0, 0.0}, Complex{1.0, 0.0}},
                    {Complex{0.0, -r}, Complex{0.0, r}}}};
    sp.s_inverse = {{{Complex{0.5, 0.0}, Complex{0.0, 0.5 / r}},
                     {Complex{0.5, 0.0}, Complex{0.0, -0.5 / r}}}};
    sp.theta = rotation_angle(params);
    return sp;
}

Mat2 matrix_power(const SearchParams &params, std::uint64_t n) {
    const long double n1 = static_cast<long double>(params.n1());
    const long double n2 = static_cast<long double>(params.n2());
    const long double r = std::sqrt(n1 / n2);
    const long double theta = rotation_angle_ld(params, ThetaMode::exact);
    const long double phase = 2.0L * static_cast<long double>(n) * theta;

    const LCMat2 s{{{LComplex{1.0L, 0.0L}, LComplex{1.0L, 0.0L}},
                    {LComplex{0.0L, -r}, LComplex{0.0L, r}}}};
    const LCMat2 s_inv{{{LComplex{0.5L, 0.0L}, LComplex{0.0L, 0.5L / r}},
                        {LComplex{0.5L, 0.0L}, LComplex{0.0L, -0.5L / r}}}};
    const LCMat2 diag{{{std::polar(1.0L, phase), LComplex{}},
                       {LComplex{}, std::polar(1.0L, -phase)}}};
    const LCMat2 p = mul(mul(s, diag), s_inv);

    Mat2 out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const long double residue = std::abs(p[i][j].imag());
            if (residue > 1e-13L) {
                throw std::logic_error("matrix_power: imaginary residue " +
                                       std::to_string(static_cast<double>(residue)) +
                                       " exceeds 1e-13");
            }
            out.m[i][j] = static_cast<double>(p[i][j].real());
        }
    }
    return out;
}

TwoLevelState closed_form(const SearchParams &params, std::uint64_t n, ThetaMode mode) {
    const long double angle =
        static_cast<long double>(2 * n + 1) * rotation_angle_ld(params, mode);
    return {static_cast<double>(std::cos(angle) /
                                std::sqrt(static_cast<long double>(params.n1()))),
            static_cast<double>(std::sin(angle) /
                                std::sqrt(static_cast<long double>(params.n2())))};
}

double success_probability(const SearchParams &params, std::uint64_t n, ThetaMode mode) {
    const long double angle =
        static_cast<long double>(2 * n + 1) * rotation_angle_ld(params, mode);
    const long double s = std::sin(angle);
    return static_cast<double>(s * s);
}

OptimalCount optimal_iterations(const SearchParams &params, ThetaMode mode) {
    const long double theta = rotation_angle_ld(params, mode);
    const long double x = std::numbers::pi_v<long double> / (4.0L * theta) - 0.5L;

    OptimalCount out;
    if (x > 0.0L) {
        long double whole = std::floor(x);
        long double frac = x - whole;
        // The only exact tie is theta = pi/4 (N1 == N2); rounding noise must not break it.
        if (std::abs(frac - 0.5L) < 1e-12L) {
            frac = 0.5L;
        }
        if (frac > 0.5L || (frac == 0.5L && std::fmod(whole, 2.0L) != 0.0L)) {
            whole += 1.0L;
        }
        out.iterations = static_cast<std::uint64_t>(whole);
    }
    out.beyond_quarter = 4 * params.n2() > params.n_total();
    out.equal_split = params.n1() == params.n2();
    return out;
}

} // namespace grovercol
