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
 * Scenario configuration, trajectory tables and CSV output.
 *
 * Trajectory CSV header:
 *
 *   n,a_n,b_n,p_marked,u_n,v_n,energy_fraction_ball2,case_label,regime
 *
 * Floats use 17 significant digits so every double round-trips; values
 * without a fraction or exponent get a trailing ".0". Lines starting with
 * '#' are comments.
 */
#pragma once

#include "grovercol/analytic_model.hpp"
#include "grovercol/collision_sim.hpp"
#include "grovercol/correspondence.hpp"
#include "grovercol/search_params.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace grovercol {

struct ScenarioConfig {
    std::optional<std::uint64_t> n1;
    std::optional<std::uint64_t> n2;
    std::optional<unsigned> log2_n;
    std::optional<std::uint64_t> marked_count;
    double v_init{1.0};
    std::optional<std::uint64_t> iterations; ///< empty means "auto"
    ThetaMode theta_mode{ThetaMode::exact};
    std::uint64_t seed{0};
    std::uint64_t statevector_cap{kDefaultStatevectorCap};
    std::string output_path{"-"};
    std::string format{"csv"};

    /**
     * Sizing rules: with log2_n, N = 2^log2_n and the marked count comes from
     * marked_count, else n2, else 1; a given n1 must then equal N minus the
     * marked count. Without log2_n, n1 is required and the marked count
     * defaults to 1. Conflicting values throw ConfigError.
     */
    [[nodiscard]] SearchParams resolve_params() const;
    [[nodiscard]] std::uint64_t resolve_iterations(const SearchParams &params) const;
};

/**
 * Set one option by its flag name without the leading dashes ("n1",
 * "log2-n", "iterations", ...). Underscores are accepted for dashes.
 * Throws ConfigError on unknown keys or malformed values.
 */
void apply_setting(ScenarioConfig &config, std::string_view key, std::string_view value);

/// Read `key = value` lines; blank lines and '#' comments are skipped.
void load_scenario(ScenarioConfig &config, std::istream &in);
void load_scenario_file(ScenarioConfig &config, const std::string &path);

struct TrajectoryRow {
    std::uint64_t n{0};
    double a_n{0.0};
    double b_n{0.0};
    double p_marked{0.0};
    double u_n{0.0};
    double v_n{0.0};
    double energy_fraction_ball2{0.0};
    CaseLabel case_label{CaseLabel::both_rightward};
    Regime regime{Regime::efficient};

    friend bool operator==(const TrajectoryRow &, const TrajectoryRow &) = default;
};

/// Which engine drives the rows; the other half of each row follows by the v sqrt(N) map.
enum class Engine {
    statevector, ///< full state vector, two-level recursion above the cap
    collision,   ///< bounce-and-collide iteration
    closed_form  ///< closed-form amplitudes (theta_mode) next to the collision velocities
};

/// Rows for n = 0..iterations.
[[nodiscard]] std::vector<TrajectoryRow> run_search(const ScenarioConfig &config,
                                                    Engine engine = Engine::statevector);

struct SweepRow {
    std::uint64_t n_total{0};
    std::uint64_t n0{0};
    double p_at_n0{0.0};
    Regime regime{Regime::efficient};

    friend bool operator==(const SweepRow &, const SweepRow &) = default;
};

/// Marked count for a sweep: a fixed number, or N / divisor.
struct MarkedSpec {
    std::uint64_t count{1};
    std::uint64_t divisor{0}; ///< nonzero selects N / divisor

    [[nodiscard]] std::uint64_t resolve(std::uint64_t n_total) const;
    /// "3" or "N/4".
    static MarkedSpec parse(std::string_view text);
};

/**
 * One row per N = 2^k, k in [k_min, k_max], ordered by N. Rows are computed
 * concurrently when `parallel` is set; the result does not depend on it.
 */
[[nodiscard]] std::vector<SweepRow> run_sweep(unsigned k_min, unsigned k_max,
                                              MarkedSpec marked, const ScenarioConfig &config,
                                              bool parallel = true);

inline constexpr std::string_view kTrajectoryHeader =
    "n,a_n,b_n,p_marked,u_n,v_n,energy_fraction_ball2,case_label,regime";
inline constexpr std::string_view kSweepHeader = "N,n0,p_at_n0,regime";

/// %.17g, with ".0" appended to bare integers.
[[nodiscard]] std::string format_double(double value);

void emit_csv(const std::vector<TrajectoryRow> &rows, std::ostream &out,
              const std::vector<std::string> &comments = {});
/// Writes to `path`, or to stdout for "-". Throws std::runtime_error naming the path.
void emit_csv(const std::vector<TrajectoryRow> &rows, const std::string &path,
              const std::vector<std::string> &comments = {});

void emit_sweep_csv(const std::vector<SweepRow> &rows, std::ostream &out);
void emit_sweep_csv(const std::vector<SweepRow> &rows, const std::string &path);

/// Parse trajectory CSV as written by emit_csv; comment lines are skipped.
[[nodiscard]] std::vector<TrajectoryRow> parse_trajectory_csv(std::istream &in);

/// "# key=value" lines summarizing an analogy check.
[[nodiscard]] std::vector<std::string> report_comments(const AnalogyReport &report);

} // namespace grovercol
