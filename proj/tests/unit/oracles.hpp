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
// Reference computations for the unit tests. They share nothing with the
// library code paths they check: dense matrices, long double, plain loops.
#pragma once

#include <cmath>
#include <cstddef>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using LVec = std::vector<long double>;

/// Dense Grover step: C = diag(+-1), D = 2P - I with P the all-1/N matrix.
inline LVec dense_grover_step(const LVec &c, const std::set<std::size_t> &marked) {
    const std::size_t n = c.size();
    LVec flipped = c;
    for (std::size_t i : marked) {
        flipped[i] = -flipped[i];
    }
    LVec out(n, 0.0L);
    for (std::size_t i = 0; i < n; ++i) {
        long double acc = 0.0L;
        for (std::size_t j = 0; j < n; ++j) {
            const long double d = 2.0L / static_cast<long double>(n) - (i == j ? 1.0L : 0.0L);
            acc += d * flipped[j];
        }
        out[i] = acc;
    }
    return out;
}

/// Two-pass inversion about the mean in long double.
inline LVec invert_about_mean(const std::vector<double> &c) {
    long double mean = 0.0L;
    for (double x : c) {
        mean += x;
    }
    mean /= static_cast<long double>(c.size());
    LVec out;
    for (double x : c) {
        out.push_back(2.0L * mean - x);
    }
    return out;
}

struct LMat2 {
    long double m[2][2];
};

inline LMat2 mul(const LMat2 &x, const LMat2 &y) {
    LMat2 r{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            r.m[i][j] = x.m[i][0] * y.m[0][j] + x.m[i][1] * y.m[1][j];
        }
    }
    return r;
}

/// T from its defining entries, in long double.
inline LMat2 iteration_matrix(unsigned long long n1, unsigned long long n2) {
    const long double n = static_cast<long double>(n1 + n2);
    const long double d = (static_cast<long double>(n1) - static_cast<long double>(n2)) / n;
    return LMat2{{{d, -2.0L * n2 / n}, {2.0L * n1 / n, d}}};
}

/// T^n by n-fold repeated multiplication.
inline LMat2 repeated_power(unsigned long long n1, unsigned long long n2, unsigned n) {
    const LMat2 t = iteration_matrix(n1, n2);
    LMat2 acc{{{1.0L, 0.0L}, {0.0L, 1.0L}}};
    for (unsigned k = 0; k < n; ++k) {
        acc = mul(t, acc);
    }
    return acc;
}

/// Random unit vector of length n.
inline std::vector<double> random_unit_vector(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    std::vector<double> v(n);
    long double s = 0.0L;
    for (auto &x : v) {
        x = gauss(rng);
        s += static_cast<long double>(x) * x;
    }
    const double inv = static_cast<double>(1.0L / std::sqrt(s));
    for (auto &x : v) {
        x *= inv;
    }
    return v;
}

} // namespace oracle
