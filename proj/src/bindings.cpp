#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vlasim/agent.hpp"
#include "vlasim/config.hpp"
#include "vlasim/core.hpp"
#include "vlasim/engine.hpp"
#include "vlasim/errors.hpp"
#include "vlasim/injection.hpp"
#include "vlasim/metrics.hpp"
#include "vlasim/runner.hpp"

namespace py = pybind11;
using namespace vlasim;

PYBIND11_MODULE(_core, m) {
    m.doc() = "farmlet self-monitoring simulator core";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    m.def("adjusted_sigmoid", &adjusted_sigmoid, py::arg("d"), py::arg("f"),
          "2 * (1 / (1 + e^(-d*f)) - 0.5)");
    m.def("utility_value", &utility_value, py::arg("expected_data"), py::arg("watermark"),
          py::arg("c"), py::arg("f"));
    m.def("update_sensitivity", &update_sensitivity, py::arg("d"), py::arg("found"),
          py::arg("params"));

    py::class_<AgentParams>(m, "AgentParams")
        .def(py::init<>())
        .def_readwrite("d_init", &AgentParams::d_init)
        .def_readwrite("d_min", &AgentParams::d_min)
        .def_readwrite("d_max", &AgentParams::d_max)
        .def_readwrite("delta_up", &AgentParams::delta_up)
        .def_readwrite("delta_down", &AgentParams::delta_down)
        .def_readwrite("adaptive", &AgentParams::adaptive)
        .def_readwrite("c", &AgentParams::c)
        .def_readwrite("expected_data", &AgentParams::expected_data);

    py::class_<SensitivityMatrix>(m, "SensitivityMatrix")
        .def(py::init<int, int, int, double>(), py::arg("observer"), py::arg("n_slots"),
             py::arg("n_errors"), py::arg("d_init"))
        .def_property_readonly("observer", &SensitivityMatrix::observer)
        .def_property_readonly("slots", &SensitivityMatrix::slots)
        .def_property_readonly("error_types", &SensitivityMatrix::error_types)
        .def("d", &SensitivityMatrix::d, py::arg("target"), py::arg("error"))
        .def("f", &SensitivityMatrix::f, py::arg("target"), py::arg("error"))
        .def("tick", &SensitivityMatrix::tick)
        .def("record_check", &SensitivityMatrix::record_check, py::arg("target"), py::arg("error"),
             py::arg("found"), py::arg("params"))
        .def("set_entry", &SensitivityMatrix::set_entry, py::arg("target"), py::arg("error"),
             py::arg("d"), py::arg("f"));

    py::enum_<ControlDecision::Kind>(m, "ControlKind")
        .value("PA", ControlDecision::Kind::Pa)
        .value("VLA_CHECK", ControlDecision::Kind::VlaCheck);

    py::class_<ControlDecision>(m, "ControlDecision")
        .def_readonly("kind", &ControlDecision::kind)
        .def_readonly("target", &ControlDecision::target)
        .def_readonly("error", &ControlDecision::error)
        .def_readonly("score", &ControlDecision::score);

    py::class_<CheckTarget>(m, "CheckTarget")
        .def_readonly("target", &CheckTarget::target)
        .def_readonly("error", &CheckTarget::error)
        .def_readonly("score", &CheckTarget::score);

    m.def("best_check_target", &best_check_target, py::arg("matrix"));
    m.def("decide_control", &decide_control, py::arg("watermark"), py::arg("matrix"));

    py::class_<SchedulePhase>(m, "SchedulePhase")
        .def(py::init([](Step start, Step end, double rate) {
                 return SchedulePhase{start, end, rate};
             }),
             py::arg("start"), py::arg("end"), py::arg("rate"))
        .def_readwrite("start", &SchedulePhase::start)
        .def_readwrite("end", &SchedulePhase::end)
        .def_readwrite("rate", &SchedulePhase::rate);

    py::class_<ErrorSchedule>(m, "ErrorSchedule")
        .def(py::init<std::vector<SchedulePhase>>(), py::arg("phases"))
        .def_property_readonly("phases", &ErrorSchedule::phases)
        .def("rate_at", &ErrorSchedule::rate_at, py::arg("step"))
        .def("phase_index", &ErrorSchedule::phase_index, py::arg("step"));

    py::class_<SimConfig>(m, "SimConfig")
        .def(py::init<>())
        .def_readwrite("farmlets", &SimConfig::farmlets)
        .def_readwrite("nodes_per_farmlet", &SimConfig::nodes_per_farmlet)
        .def_readwrite("error_types", &SimConfig::error_types)
        .def_readwrite("total_steps", &SimConfig::total_steps)
        .def_readwrite("seed", &SimConfig::seed)
        .def_readwrite("capacity", &SimConfig::capacity)
        .def_readwrite("arrival_rate", &SimConfig::arrival_rate)
        .def_readwrite("base_rate", &SimConfig::base_rate)
        .def_readwrite("slowdown", &SimConfig::slowdown)
        .def_readwrite("agent", &SimConfig::agent)
        .def_readwrite("decision_interval", &SimConfig::decision_interval)
        .def_readwrite("check_cost_steps", &SimConfig::check_cost_steps)
        .def_readwrite("schedule", &SimConfig::schedule)
        .def_readwrite("sample_every", &SimConfig::sample_every)
        .def_readwrite("out_dir", &SimConfig::out_dir)
        .def("validate", &SimConfig::validate);

    m.def("preset", &preset_config, py::arg("name"));
    m.def("load_config", [](const std::string& path) { return load_config_file(path); },
          py::arg("path"));
    m.def("encode_config", &encode_config, py::arg("config"));

    py::class_<DValueRow>(m, "DValueRow")
        .def_readonly("step", &DValueRow::step)
        .def_readonly("farmlet", &DValueRow::farmlet)
        .def_readonly("observer", &DValueRow::observer)
        .def_readonly("target", &DValueRow::target)
        .def_readonly("error", &DValueRow::error)
        .def_readonly("d", &DValueRow::d)
        .def_readonly("f", &DValueRow::f);

    py::class_<ThroughputRow>(m, "ThroughputRow")
        .def_readonly("step", &ThroughputRow::step)
        .def_readonly("farmlet", &ThroughputRow::farmlet)
        .def_readonly("slot", &ThroughputRow::slot)
        .def_readonly("processed", &ThroughputRow::processed)
        .def_readonly("fill", &ThroughputRow::fill)
        .def_readonly("dropped", &ThroughputRow::dropped)
        .def_readonly("vla", &ThroughputRow::vla);

    py::enum_<EventKind>(m, "EventKind")
        .value("INJECT", EventKind::Inject)
        .value("CHECK_HIT", EventKind::CheckHit)
        .value("CHECK_MISS", EventKind::CheckMiss)
        .value("OVERFLOW_DROP", EventKind::OverflowDrop);

    py::class_<EventRow>(m, "EventRow")
        .def_readonly("step", &EventRow::step)
        .def_readonly("farmlet", &EventRow::farmlet)
        .def_readonly("slot", &EventRow::slot)
        .def_readonly("kind", &EventRow::kind)
        .def_readonly("error", &EventRow::error);

    py::class_<NodeTotals>(m, "NodeTotals")
        .def_readonly("farmlet", &NodeTotals::farmlet)
        .def_readonly("slot", &NodeTotals::slot)
        .def_readonly("enqueued", &NodeTotals::enqueued)
        .def_readonly("processed", &NodeTotals::processed)
        .def_readonly("dropped", &NodeTotals::dropped)
        .def_readonly("final_fill", &NodeTotals::final_fill);

    py::class_<PhaseDMean>(m, "PhaseDMean")
        .def_readonly("phase", &PhaseDMean::phase)
        .def_readonly("farmlet", &PhaseDMean::farmlet)
        .def_readonly("observer", &PhaseDMean::observer)
        .def_readonly("target", &PhaseDMean::target)
        .def_readonly("error", &PhaseDMean::error)
        .def_readonly("mean_d", &PhaseDMean::mean_d);

    py::class_<Summary>(m, "Summary")
        .def_readonly("nodes", &Summary::nodes)
        .def_readonly("total_enqueued", &Summary::total_enqueued)
        .def_readonly("total_processed", &Summary::total_processed)
        .def_readonly("total_dropped", &Summary::total_dropped)
        .def_readonly("mean_processed_per_dsp", &Summary::mean_processed_per_dsp)
        .def_readonly("check_hits", &Summary::check_hits)
        .def_readonly("check_misses", &Summary::check_misses)
        .def_readonly("injects", &Summary::injects)
        .def_readonly("overflow_events", &Summary::overflow_events)
        .def_readonly("phase_d_means", &Summary::phase_d_means);

    py::class_<MetricsLog>(m, "MetricsLog")
        .def_readonly("d_series", &MetricsLog::d_series)
        .def_readonly("throughput_series", &MetricsLog::throughput_series)
        .def_readonly("event_log", &MetricsLog::event_log)
        .def_readonly("summary", &MetricsLog::summary)
        .def("write_csv",
             [](const MetricsLog& log, const std::string& out_dir) { write_csv(log, out_dir); },
             py::arg("out_dir"));

    m.def("run", &run, py::arg("config"), py::call_guard<py::gil_scoped_release>());

    py::class_<CompareRow>(m, "CompareRow")
        .def_readonly("seed", &CompareRow::seed)
        .def_readonly("adaptive", &CompareRow::adaptive)
        .def_readonly("mean_processed_per_dsp", &CompareRow::mean_processed_per_dsp)
        .def_readonly("total_dropped", &CompareRow::total_dropped)
        .def_readonly("check_hits", &CompareRow::check_hits)
        .def_readonly("check_misses", &CompareRow::check_misses);

    py::class_<CompareResult>(m, "CompareResult")
        .def_readonly("rows", &CompareResult::rows)
        .def_readonly("adaptive_wins", &CompareResult::adaptive_wins);

    m.def("compare_runs",
          [](const SimConfig& base, const std::vector<std::uint64_t>& seeds,
             const std::string& out_dir) { return compare_runs(base, seeds, out_dir); },
          py::arg("base"), py::arg("seeds"), py::arg("out_dir"));
}
