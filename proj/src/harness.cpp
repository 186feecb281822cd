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
#include "grovercol/harness.hpp"

#include "grovercol/quantum_core.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace grovercol {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <class T> T parse_number(std::string_view key, std::string_view text) {
    text = trim(text);
    T value{};
    const auto *end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty()) {
        throw ConfigError("invalid value for '" + std::string(key) + "': '" +
                          std::string(text) + "'");
    }
    return value;
}

std::string normalize_key(std::string_view key) {
    std::string k(trim(key));
    while (!k.empty() && k.front() == '-') {
        k.erase(k.begin());
    }
    std::replace(k.begin(), k.end(), '_', '-');
    return k;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(sep, start);
        out.push_back(line.substr(start, pos - start));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return out;
}

CaseLabel parse_case(std::string_view s) {
    for (auto c : {CaseLabel::both_rightward, CaseLabel::opposite, CaseLabel::both_leftward,
                   CaseLabel::approaching}) {
        if (to_string(c) == s) {
            return c;
        }
    }
    throw std::runtime_error("unknown case label '" + std::string(s) + "'");
}

Regime parse_regime(std::string_view s) {
    for (auto r : {Regime::efficient, Regime::boundary, Regime::inefficient, Regime::invalid}) {
        if (to_string(r) == s) {
            return r;
        }
    }
    throw std::runtime_error("unknown regime '" + std::string(s) + "'");
}

TrajectoryRow make_row(std::uint64_t n, const TwoLevelState &amps, double p_marked, double u,
                       double v, const SearchParams &params, double v_init, Regime regime) {
    return TrajectoryRow{n,
                         amps.a,
                         amps.b,
                         p_marked,
                         u,
                         v,
                         energy_fraction_ball2(v, params, v_init),
                         classify_case(u, v),
                         regime};
}

template <class Write> void with_output(const std::string &path, Write write) {
    if (path == "-") {
        write(std::cout);
        std::cout.flush();
        if (!std::cout) {
            throw std::runtime_error("failed writing CSV to stdout");
        }
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open output file '" + path + "'");
    }
    write(out);
    out.flush();
    if (!out) {
        throw std::runtime_error("failed writing CSV to '" + path + "'");
    }
}

} // namespace

SearchParams ScenarioConfig::resolve_params() const {
    if (n2 && marked_count && *n2 != *marked_count) {
        throw ConfigError("n2 and marked-count disagree");
    }
    const std::uint64_t marked = marked_count ? *marked_count : (n2 ? *n2 : 1);
    if (log2_n) {
        const SearchParams p = SearchParams::from_log2(*log2_n, marked);
        if (n1 && *n1 != p.n1()) {
            throw ConfigError("n1=" + std::to_string(*n1) + " is inconsistent with log2-n=" +
                              std::to_string(*log2_n) + " and " + std::to_string(marked) +
                              " marked");
        }
        return p;
    }
    if (!n1) {
        throw ConfigError("instance size missing: give n1 (and n2) or log2-n");
    }
    return SearchParams{*n1, marked};
}

std::uint64_t ScenarioConfig::resolve_iterations(const SearchParams &params) const {
    return iterations ? *iterations : optimal_iterations(params, theta_mode).iterations;
}

void apply_setting(ScenarioConfig &config, std::string_view raw_key, std::string_view raw_value) {
    const std::string key = normalize_key(raw_key);
    const std::string_view value = trim(raw_value);
    if (key == "n1") {
        config.n1 = parse_number<std::uint64_t>(key, value);
    } else if (key == "n2") {
        config.n2 = parse_number<std::uint64_t>(key, value);
    } else if (key == "log2-n") {
        config.log2_n = parse_number<unsigned>(key, value);
    } else if (key == "marked-count") {
        config.marked_count = parse_number<std::uint64_t>(key, value);
    } else if (key == "v-init") {
        config.v_init = parse_number<double>(key, value);
        if (!(config.v_init > 0.0) || !std::isfinite(config.v_init)) {
            throw ConfigError("v-init must be a positive finite number");
        }
    } else if (key == "iterations") {
        if (value == "auto") {
            config.iterations.reset();
        } else {
            config.iterations = parse_number<std::uint64_t>(key, value);
        }
    } else if (key == "theta-mode") {
        if (value == "exact") {
            config.theta_mode = ThetaMode::exact;
        } else if (value == "paper" || value == "paper-approx") {
            config.theta_mode = ThetaMode::paper_approx;
        } else {
            throw ConfigError("theta-mode must be 'exact' or 'paper'");
        }
    } else if (key == "seed") {
        config.seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "statevector-cap") {
        config.statevector_cap = parse_number<std::uint64_t>(key, value);
    } else if (key == "output") {
        if (value.empty()) {
            throw ConfigError("output path is empty");
        }
        config.output_path = std::string(value);
    } else if (key == "format") {
        if (value != "csv") {
            throw ConfigError("only the csv format is supported");
        }
        config.format = std::string(value);
    } else {
        throw ConfigError("unknown setting '" + key + "'");
    }
}

void load_scenario(ScenarioConfig &config, std::istream &in) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string_view body = trim(line);
        if (body.empty() || body.front() == '#') {
            continue;
        }
        const auto eq = body.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("scenario line " + std::to_string(lineno) +
                              ": expected key=value");
        }
        apply_setting(config, body.substr(0, eq), body.substr(eq + 1));
    }
}

void load_scenario_file(ScenarioConfig &config, const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read scenario file '" + path + "'");
    }
    load_scenario(config, in);
}

std::vector<TrajectoryRow> run_search(const ScenarioConfig &config, Engine engine) {
    const SearchParams params = config.resolve_params();
    const std::uint64_t steps = config.resolve_iterations(params);
    const Regime regime = detect_regime(params);
    const double v_init = config.v_init;
    const double n2 = static_cast<double>(params.n2());

    std::vector<TrajectoryRow> rows;
    rows.reserve(steps + 1);

    switch (engine) {
    case Engine::statevector: {
        if (params.n_total() <= config.statevector_cap) {
            const auto n = static_cast<std::size_t>(params.n_total());
            StateVector sv = init_uniform(
                params,
                random_marked_set(n, static_cast<std::size_t>(params.n2()), config.seed));
            std::size_t first_unmarked = 0;
            while (sv.is_marked(first_unmarked)) {
                ++first_unmarked;
            }
            const std::size_t first_marked = sv.marked().front();
            for (std::uint64_t k = 0; k <= steps; ++k) {
                if (k > 0) {
                    sv = grover_iterate(std::move(sv), 1);
                }
                const TwoLevelState amps{sv.amplitudes()[first_unmarked],
                                         sv.amplitudes()[first_marked]};
                const auto [u, v] = amplitudes_to_velocities(amps, params, v_init);
                rows.push_back(
                    make_row(k, amps, marked_probability(sv), u, v, params, v_init, regime));
            }
        } else {
            const double start = 1.0 / std::sqrt(static_cast<double>(params.n_total()));
            TwoLevelState amps{start, start};
            for (std::uint64_t k = 0; k <= steps; ++k) {
                if (k > 0) {
                    amps = step(amps, params);
                }
                const auto [u, v] = amplitudes_to_velocities(amps, params, v_init);
                rows.push_back(
                    make_row(k, amps, n2 * amps.b * amps.b, u, v, params, v_init, regime));
            }
        }
        break;
    }
    case Engine::collision:
    case Engine::closed_form: {
        CollisionSystem sys = CollisionSystem::from_params(params, v_init);
        for (std::uint64_t k = 0; k <= steps; ++k) {
            if (k > 0) {
                sys = iterate(sys, k - 1).first;
            }
            const double u = sys.ball1().velocity;
            const double v = sys.ball2().velocity;
            const TwoLevelState amps = engine == Engine::collision
                                           ? velocities_to_amplitudes(u, v, params, v_init)
                                           : closed_form(params, k, config.theta_mode);
            rows.push_back(make_row(k, amps, n2 * amps.b * amps.b, u, v, params, v_init, regime));
        }
        break;
    }
    }
    return rows;
}

std::uint64_t MarkedSpec::resolve(std::uint64_t n_total) const {
    if (divisor == 0) {
        return count;
    }
    if (n_total % divisor != 0) {
        throw ConfigError("N=" + std::to_string(n_total) + " is not divisible by " +
                          std::to_string(divisor));
    }
    return n_total / divisor;
}

MarkedSpec MarkedSpec::parse(std::string_view text) {
    text = trim(text);
    if (text.size() > 2 && (text[0] == 'N' || text[0] == 'n') && text[1] == '/') {
        const auto d = parse_number<std::uint64_t>("marked", text.substr(2));
        if (d == 0) {
            throw ConfigError("marked: divisor must be positive");
        }
        return MarkedSpec{0, d};
    }
    return MarkedSpec{parse_number<std::uint64_t>("marked", text), 0};
}

std::vector<SweepRow> run_sweep(unsigned k_min, unsigned k_max, MarkedSpec marked,
                                const ScenarioConfig &config, bool parallel) {
    if (k_min > k_max) {
        throw ConfigError("sweep: k-min must not exceed k-max");
    }
    if (k_min < 1 || k_max > 62) {
        throw ConfigError("sweep: exponents must lie in [1, 62]");
    }
    // Validate every size before launching work so errors are deterministic.
    std::vector<SearchParams> instances;
    for (unsigned k = k_min; k <= k_max; ++k) {
        const std::uint64_t n = std::uint64_t{1} << k;
        instances.push_back(SearchParams::from_log2(k, marked.resolve(n)));
    }
    const ThetaMode mode = config.theta_mode;
    auto evaluate = [mode](const SearchParams &p) {
        const std::uint64_t n0 = optimal_iterations(p, mode).iterations;
        return SweepRow{p.n_total(), n0, success_probability(p, n0), detect_regime(p)};
    };

    std::vector<SweepRow> rows(instances.size());
    if (parallel) {
        std::vector<std::future<SweepRow>> jobs;
        jobs.reserve(instances.size());
        for (const auto &p : instances) {
            jobs.push_back(std::async(std::launch::async, evaluate, p));
        }
        for (std::size_t i = 0; i < jobs.size(); ++i) {
            rows[i] = jobs[i].get();
        }
    } else {
        std::transform(instances.begin(), instances.end(), rows.begin(), evaluate);
    }
    std::sort(rows.begin(), rows.end(),
              [](const SweepRow &x, const SweepRow &y) { return x.n_total < y.n_total; });
    return rows;
}

std::string format_double(double value) {
    char buf[40];
    const int len = std::snprintf(buf, sizeof buf, "%.17g", value);
    std::string s(buf, static_cast<std::size_t>(len));
    if (std::isfinite(value) && s.find_first_of(".e") == std::string::npos) {
        s += ".0";
    }
    return s;
}

void emit_csv(const std::vector<TrajectoryRow> &rows, std::ostream &out,
              const std::vector<std::string> &comments) {
    out << kTrajectoryHeader << '\n';
    for (const auto &r : rows) {
        out << r.n << ',' << format_double(r.a_n) << ',' << format_double(r.b_n) << ','
            << format_double(r.p_marked) << ',' << format_double(r.u_n) << ','
            << format_double(r.v_n) << ',' << format_double(r.energy_fraction_ball2) << ','
            << to_string(r.case_label) << ',' << to_string(r.regime) << '\n';
    }
    for (const auto &c : comments) {
        out << c << '\n';
    }
}

void emit_csv(const std::vector<TrajectoryRow> &rows, const std::string &path,
              const std::vector<std::string> &comments) {
    with_output(path, [&](std::ostream &out) { emit_csv(rows, out, comments); });
}

void emit_sweep_csv(const std::vector<SweepRow> &rows, std::ostream &out) {
    out << kSweepHeader << '\n';
    for (const auto &r : rows) {
        out << r.n_total << ',' << r.n0 << ',' << format_double(r.p_at_n0) << ','
            << to_string(r.regime) << '\n';
    }
}

void emit_sweep_csv(const std::vector<SweepRow> &rows, const std::string &path) {
    with_output(path, [&](std::ostream &out) { emit_sweep_csv(rows, out); });
}

std::vector<TrajectoryRow> parse_trajectory_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line) || line != kTrajectoryHeader) {
        throw std::runtime_error("trajectory CSV: missing or unexpected header");
    }
    std::vector<TrajectoryRow> rows;
    while (std::getline(in, line)) {
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto f = split(line, ',');
        if (f.size() != 9) {
            throw std::runtime_error("trajectory CSV: expected 9 fields in '" + line + "'");
        }
        TrajectoryRow r;
        r.n = parse_number<std::uint64_t>("n", f[0]);
        r.a_n = parse_number<double>("a_n", f[1]);
        r.b_n = parse_number<double>("b_n", f[2]);
        r.p_marked = parse_number<double>("p_marked", f[3]);
        r.u_n = parse_number<double>("u_n", f[4]);
        r.v_n = parse_number<double>("v_n", f[5]);
        r.energy_fraction_ball2 = parse_number<double>("energy_fraction_ball2", f[6]);
        r.case_label = parse_case(f[7]);
        r.regime = parse_regime(f[8]);
        rows.push_back(r);
    }
    return rows;
}

std::vector<std::string> report_comments(const AnalogyReport &report) {
    std::vector<std::string> out;
    out.push_back("# steps_checked=" + std::to_string(report.steps_checked));
    out.push_back("# max_velocity_residual=" + format_double(report.max_velocity_residual));
    out.push_back("# max_probability_energy_residual=" +
                  format_double(report.max_probability_energy_residual));
    out.push_back("# max_center_residual=" + format_double(report.max_center_residual));
    if (report.statevector_checked) {
        out.push_back("# max_statevector_residual=" +
                      format_double(report.max_statevector_residual));
    }
    out.push_back(std::string("# statevector=") +
                  (report.statevector_checked ? "checked" : "skipped"));
    return out;
}

} // namespace grovercol
