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
#include "grovercol/collision_sim.hpp"
#include "grovercol/correspondence.hpp"
#include "grovercol/harness.hpp"
#include "grovercol/quantum_core.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace grovercol;

namespace {

py::list mat2_to_list(const Mat2 &m) {
    py::list rows;
    for (const auto &r : m.m) {
        rows.append(py::make_tuple(r[0], r[1]));
    }
    return rows;
}

py::list cmat2_to_list(const CMat2 &m) {
    py::list rows;
    for (const auto &r : m) {
        rows.append(py::make_tuple(r[0], r[1]));
    }
    return rows;
}

ScenarioConfig make_config(std::uint64_t n1, std::uint64_t n2,
                           std::optional<std::uint64_t> iterations, double v_init,
                           ThetaMode theta_mode, std::uint64_t seed,
                           std::uint64_t statevector_cap) {
    ScenarioConfig cfg;
    cfg.n1 = n1;
    cfg.n2 = n2;
    cfg.iterations = iterations;
    cfg.v_init = v_init;
    cfg.theta_mode = theta_mode;
    cfg.seed = seed;
    cfg.statevector_cap = statevector_cap;
    return cfg;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Grover search simulators and the two-ball elastic-collision analogue";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::enum_<Regime>(m, "Regime")
        .value("efficient", Regime::efficient)
        .value("boundary", Regime::boundary)
        .value("inefficient", Regime::inefficient)
        .value("invalid", Regime::invalid);
    py::enum_<ThetaMode>(m, "ThetaMode")
        .value("exact", ThetaMode::exact)
        .value("paper_approx", ThetaMode::paper_approx);
    py::enum_<CaseLabel>(m, "CaseLabel")
        .value("both_rightward", CaseLabel::both_rightward)
        .value("opposite", CaseLabel::opposite)
        .value("both_leftward", CaseLabel::both_leftward)
        .value("approaching", CaseLabel::approaching);
    py::enum_<Engine>(m, "Engine")
        .value("statevector", Engine::statevector)
        .value("collision", Engine::collision)
        .value("closed_form", Engine::closed_form);

    py::class_<SearchParams>(m, "SearchParams")
        .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("n1"), py::arg("n2"))
        .def_static("from_log2", &SearchParams::from_log2, py::arg("log2_n"),
                    py::arg("marked") = 1)
        .def_property_readonly("n1", &SearchParams::n1)
        .def_property_readonly("n2", &SearchParams::n2)
        .def_property_readonly("n_total", &SearchParams::n_total)
        .def("__repr__", [](const SearchParams &p) {
            return "SearchParams(n1=" + std::to_string(p.n1()) +
                   ", n2=" + std::to_string(p.n2()) + ")";
        });

    // quantum core
    py::class_<StateVector>(m, "StateVector")
        .def(py::init<std::vector<double>, std::vector<std::size_t>>(), py::arg("amplitudes"),
             py::arg("marked"))
        .def_property_readonly("amplitudes",
                               [](const StateVector &s) {
                                   auto a = s.amplitudes();
                                   return std::vector<double>(a.begin(), a.end());
                               })
        .def_property_readonly("marked",
                               [](const StateVector &s) {
                                   auto mk = s.marked();
                                   return std::vector<std::size_t>(mk.begin(), mk.end());
                               })
        .def("norm_squared", &StateVector::norm_squared)
        .def("__len__", &StateVector::size);
    m.def("init_uniform", &init_uniform, py::arg("params"), py::arg("marked"));
    m.def("apply_oracle", &apply_oracle, py::arg("state"));
    m.def("apply_diffusion", &apply_diffusion, py::arg("state"));
    m.def("grover_iterate", &grover_iterate, py::arg("state"), py::arg("count"),
          py::call_guard<py::gil_scoped_release>());
    m.def("marked_probability", &marked_probability, py::arg("state"));
    m.def("measure_sample", &measure_sample, py::arg("state"), py::arg("seed"),
          py::arg("draws"));

    // analytic model
    py::class_<TwoLevelState>(m, "TwoLevelState")
        .def(py::init<double, double>(), py::arg("a"), py::arg("b"))
        .def_readwrite("a", &TwoLevelState::a)
        .def_readwrite("b", &TwoLevelState::b)
        .def("__repr__", [](const TwoLevelState &s) {
            return "TwoLevelState(a=" + format_double(s.a) + ", b=" + format_double(s.b) + ")";
        });
    m.def("build_matrix", [](const SearchParams &p) { return mat2_to_list(build_matrix(p)); },
          py::arg("params"));
    m.def("step", &step, py::arg("state"), py::arg("params"));
    m.def(
        "spectral_decompose",
        [](const SearchParams &p) {
            const Spectral s = spectral_decompose(p);
            py::dict d;
            d["lambda_plus"] = s.lambda_plus;
            d["lambda_minus"] = s.lambda_minus;
            d["s_matrix"] = cmat2_to_list(s.s_matrix);
            d["s_inverse"] = cmat2_to_list(s.s_inverse);
            d["theta"] = s.theta;
            return d;
        },
        py::arg("params"));
    m.def("matrix_power",
          [](const SearchParams &p, std::uint64_t n) { return mat2_to_list(matrix_power(p, n)); },
          py::arg("params"), py::arg("n"));
    m.def("closed_form", &closed_form, py::arg("params"), py::arg("n"),
          py::arg("theta_mode") = ThetaMode::exact);
    m.def("success_probability", &success_probability, py::arg("params"), py::arg("n"),
          py::arg("theta_mode") = ThetaMode::exact);
    m.def("rotation_angle", &rotation_angle, py::arg("params"),
          py::arg("theta_mode") = ThetaMode::exact);
    py::class_<OptimalCount>(m, "OptimalCount")
        .def_readonly("iterations", &OptimalCount::iterations)
        .def_readonly("beyond_quarter", &OptimalCount::beyond_quarter)
        .def_readonly("equal_split", &OptimalCount::equal_split);
    m.def("optimal_iterations", &optimal_iterations, py::arg("params"),
          py::arg("theta_mode") = ThetaMode::exact);

    // collision simulator
    py::class_<Ball>(m, "Ball")
        .def(py::init<double, double>(), py::arg("mass"), py::arg("velocity"))
        .def_readwrite("mass", &Ball::mass)
        .def_readwrite("velocity", &Ball::velocity)
        .def("kinetic_energy", &Ball::kinetic_energy);
    py::class_<CollisionSystem>(m, "CollisionSystem")
        .def(py::init<Ball, Ball, double, double>(), py::arg("ball1"), py::arg("ball2"),
             py::arg("v_init") = 1.0, py::arg("m_unit") = 1.0)
        .def_static("from_params", &CollisionSystem::from_params, py::arg("params"),
                    py::arg("v_init") = 1.0, py::arg("m_unit") = 1.0)
        .def_property_readonly("ball1",
                               [](const CollisionSystem &s) { return s.ball1(); })
        .def_property_readonly("ball2",
                               [](const CollisionSystem &s) { return s.ball2(); })
        .def("kinetic_energy", &CollisionSystem::kinetic_energy)
        .def("momentum", &CollisionSystem::momentum);
    py::class_<IterationRecord>(m, "IterationRecord")
        .def_readonly("n", &IterationRecord::n)
        .def_readonly("u", &IterationRecord::u)
        .def_readonly("v", &IterationRecord::v)
        .def_readonly("case_label", &IterationRecord::case_label);
    m.def("center_of_mass_velocity", &center_of_mass_velocity, py::arg("system"));
    m.def("elastic_collide", &elastic_collide, py::arg("m1"), py::arg("m2"), py::arg("u"),
          py::arg("w"));
    m.def("obstacle_bounce", &obstacle_bounce, py::arg("ball"));
    m.def("classify_case", &classify_case, py::arg("u"), py::arg("v"));
    m.def("iterate", &iterate, py::arg("system"), py::arg("previous_n") = 0);
    m.def("closed_form_velocities", &closed_form_velocities, py::arg("params"),
          py::arg("v_init"), py::arg("n"));
    m.def("first_iteration_general", &first_iteration_general, py::arg("params"),
          py::arg("v_init"));
    m.def("detect_regime", &detect_regime, py::arg("params"));

    // correspondence
    py::class_<AnalogyReport>(m, "AnalogyReport")
        .def_readonly("max_velocity_residual", &AnalogyReport::max_velocity_residual)
        .def_readonly("max_probability_energy_residual",
                      &AnalogyReport::max_probability_energy_residual)
        .def_readonly("max_center_residual", &AnalogyReport::max_center_residual)
        .def_readonly("max_statevector_residual", &AnalogyReport::max_statevector_residual)
        .def_readonly("steps_checked", &AnalogyReport::steps_checked)
        .def_readonly("statevector_checked", &AnalogyReport::statevector_checked)
        .def_readonly("statevector_skipped", &AnalogyReport::statevector_skipped);
    m.def("amplitudes_to_velocities", &amplitudes_to_velocities, py::arg("state"),
          py::arg("params"), py::arg("v_init") = 1.0);
    m.def("velocities_to_amplitudes", &velocities_to_amplitudes, py::arg("u"),
          py::arg("v_ball2"), py::arg("params"), py::arg("v_init") = 1.0);
    m.def("verify_analogy", &verify_analogy, py::arg("params"), py::arg("v_init") = 1.0,
          py::arg("steps") = 1, py::arg("statevector_cap") = kDefaultStatevectorCap,
          py::arg("seed") = 0, py::call_guard<py::gil_scoped_release>());

    // harness
    py::class_<TrajectoryRow>(m, "TrajectoryRow")
        .def_readonly("n", &TrajectoryRow::n)
        .def_readonly("a_n", &TrajectoryRow::a_n)
        .def_readonly("b_n", &TrajectoryRow::b_n)
        .def_readonly("p_marked", &TrajectoryRow::p_marked)
        .def_readonly("u_n", &TrajectoryRow::u_n)
        .def_readonly("v_n", &TrajectoryRow::v_n)
        .def_readonly("energy_fraction_ball2", &TrajectoryRow::energy_fraction_ball2)
        .def_readonly("case_label", &TrajectoryRow::case_label)
        .def_readonly("regime", &TrajectoryRow::regime);
    m.def(
        "run_search",
        [](std::uint64_t n1, std::uint64_t n2, std::optional<std::uint64_t> iterations,
           double v_init, ThetaMode theta_mode, std::uint64_t seed,
           std::uint64_t statevector_cap, Engine engine) {
            return run_search(
                make_config(n1, n2, iterations, v_init, theta_mode, seed, statevector_cap),
                engine);
        },
        py::arg("n1"), py::arg("n2"), py::arg("iterations") = py::none(),
        py::arg("v_init") = 1.0, py::arg("theta_mode") = ThetaMode::exact,
        py::arg("seed") = 0, py::arg("statevector_cap") = kDefaultStatevectorCap,
        py::arg("engine") = Engine::statevector);
    py::class_<SweepRow>(m, "SweepRow")
        .def_readonly("n_total", &SweepRow::n_total)
        .def_readonly("n0", &SweepRow::n0)
        .def_readonly("p_at_n0", &SweepRow::p_at_n0)
        .def_readonly("regime", &SweepRow::regime);
    m.def(
        "run_sweep",
        [](unsigned k_min, unsigned k_max, const std::string &marked, ThetaMode theta_mode) {
            ScenarioConfig cfg;
            cfg.theta_mode = theta_mode;
            return run_sweep(k_min, k_max, MarkedSpec::parse(marked), cfg);
        },
        py::arg("k_min"), py::arg("k_max"), py::arg("marked") = "1",
        py::arg("theta_mode") = ThetaMode::exact);
    m.def(
        "rows_to_csv",
        [](const std::vector<TrajectoryRow> &rows) {
            std::ostringstream out;
            emit_csv(rows, out);
            return out.str();
        },
        py::arg("rows"));
    m.def("emit_csv",
          py::overload_cast<const std::vector<TrajectoryRow> &, const std::string &,
                            const std::vector<std::string> &>(&emit_csv),
          py::arg("rows"), py::arg("path"), py::arg("comments") = std::vector<std::string>{});

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
