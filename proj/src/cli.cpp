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
#include "grovercol/cli.hpp"

#include "grovercol/harness.hpp"
#include "grovercol/quantum_core.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <ostream>
#include <string>

namespace grovercol {

namespace {

constexpr std::size_t kMeasurementDraws = 10000;

// Flags shared by every subcommand; each maps onto apply_setting.
struct SettingFlag {
    const char *name;
    const char *help;
};

constexpr std::array<SettingFlag, 10> kSettingFlags = {{
    {"n1", "unmarked item count"},
    {"n2", "marked item count"},
    {"log2-n", "total size as a power of two (with --marked-count)"},
    {"marked-count", "marked items when sizing by --log2-n"},
    {"iterations", "trajectory length, or auto for the optimal count"},
    {"v-init", "initial speed of both balls (> 0)"},
    {"theta-mode", "exact or paper-approx rotation angle"},
    {"seed", "seed for the marked set and measurement draws"},
    {"statevector-cap", "largest N simulated as a full state vector"},
    {"output", "CSV destination, - for stdout"},
}};

struct CommonFlags {
    std::optional<std::string> scenario;
    std::map<std::string, std::string> overrides;
};

void add_common(CLI::App &cmd, CommonFlags &flags) {
    cmd.add_option("--scenario", flags.scenario, "key=value scenario file; flags override it");
    for (const auto &flag : kSettingFlags) {
        const std::string key = flag.name;
        cmd.add_option_function<std::string>(
            "--" + key, [&flags, key](const std::string &v) { flags.overrides[key] = v; },
            flag.help);
    }
}

ScenarioConfig resolve_config(const CommonFlags &flags) {
    ScenarioConfig cfg;
    if (flags.scenario) {
        load_scenario_file(cfg, *flags.scenario);
    }
    // Apply in the fixed flag order so results do not depend on argv order.
    for (const auto &flag : kSettingFlags) {
        if (auto it = flags.overrides.find(flag.name); it != flags.overrides.end()) {
            apply_setting(cfg, it->first, it->second);
        }
    }
    return cfg;
}

std::vector<std::string> measurement_comments(const ScenarioConfig &cfg,
                                              const SearchParams &params,
                                              std::uint64_t iterations) {
    const auto n = static_cast<std::size_t>(params.n_total());
    StateVector sv = init_uniform(
        params, random_marked_set(n, static_cast<std::size_t>(params.n2()), cfg.seed));
    sv = grover_iterate(std::move(sv), iterations);
    const auto draws = measure_sample(sv, cfg.seed, kMeasurementDraws);
    const auto hits = std::count_if(draws.begin(), draws.end(),
                                    [&sv](std::size_t i) { return sv.is_marked(i); });
    return {"# measurement_draws=" + std::to_string(kMeasurementDraws),
            "# measured_marked_fraction=" +
                format_double(static_cast<double>(hits) / static_cast<double>(draws.size())),
            "# marked_probability=" + format_double(marked_probability(sv))};
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &err) {
    CLI::App app{"Grover search and its two-ball elastic-collision analogue"};
    app.require_subcommand(1);

    CommonFlags search_flags, collide_flags, compare_flags, sweep_flags;
    auto *search = app.add_subcommand("search", "state-vector Grover trajectory");
    auto *collide = app.add_subcommand("collide", "bounce-and-collide trajectory");
    auto *compare =
        app.add_subcommand("compare", "closed form vs collision, with an analogy report");
    auto *sweep = app.add_subcommand("sweep", "optimal iteration count for N = 2^k");
    add_common(*search, search_flags);
    add_common(*collide, collide_flags);
    add_common(*compare, compare_flags);
    add_common(*sweep, sweep_flags);

    unsigned k_min = 2;
    unsigned k_max = 10;
    std::optional<std::string> marked;
    bool serial = false;
    sweep->add_option("--k-min", k_min, "smallest exponent k (N = 2^k)");
    sweep->add_option("--k-max", k_max, "largest exponent k");
    sweep->add_option("--marked", marked, "marked count per N: an integer or N/<d>");
    sweep->add_flag("--serial", serial, "evaluate rows on one thread");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        app.exit(e, err, err);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        app.exit(e, err, err);
        return kExitConfig;
    }

    try {
        if (search->parsed() || collide->parsed()) {
            const bool is_search = search->parsed();
            const ScenarioConfig cfg = resolve_config(is_search ? search_flags : collide_flags);
            const auto rows =
                run_search(cfg, is_search ? Engine::statevector : Engine::collision);
            emit_csv(rows, cfg.output_path);
        } else if (compare->parsed()) {
            const ScenarioConfig cfg = resolve_config(compare_flags);
            const SearchParams params = cfg.resolve_params();
            const std::uint64_t iterations = cfg.resolve_iterations(params);
            const auto rows = run_search(cfg, Engine::closed_form);
            const AnalogyReport report =
                verify_analogy(params, cfg.v_init, std::max<std::uint64_t>(iterations, 1),
                               cfg.statevector_cap, cfg.seed);
            auto comments = report_comments(report);
            if (report.statevector_checked) {
                const auto extra = measurement_comments(cfg, params, iterations);
                comments.insert(comments.end(), extra.begin(), extra.end());
            }
            emit_csv(rows, cfg.output_path, comments);
        } else {
            const ScenarioConfig cfg = resolve_config(sweep_flags);
            MarkedSpec spec;
            if (marked) {
                spec = MarkedSpec::parse(*marked);
            } else if (cfg.marked_count || cfg.n2) {
                spec.count = cfg.marked_count ? *cfg.marked_count : *cfg.n2;
            }
            const auto rows = run_sweep(k_min, k_max, spec, cfg, !serial);
            emit_sweep_csv(rows, cfg.output_path);
        }
    } catch (const ConfigError &e) {
        err << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitOk;
}

} // namespace grovercol
