// Python module: thin wrappers over the simulation core plus the experiment
// entry points. Heavy calls drop the GIL so sweeps can use worker threads.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <cstdint>
#include <optional>
#include <string>

#include "dpd/errors.hpp"
#include "dpd/forces.hpp"
#include "dpd/harness.hpp"
#include "dpd/integrators.hpp"
#include "dpd/neighbors.hpp"
#include "dpd/observables.hpp"
#include "dpd/params.hpp"
#include "dpd/rng.hpp"
#include "dpd/state.hpp"
#include "dpd/vec3.hpp"

namespace py = pybind11;
using namespace dpd;

namespace {

py::array_t<double> vec_to_array(const Vec3& v) {
    py::array_t<double> out(3);
    auto w = out.mutable_unchecked<1>();
    w(0) = v.x;
    w(1) = v.y;
    w(2) = v.z;
    return out;
}

py::array_t<double> vecs_to_array(const std::vector<Vec3>& vs) {
    py::array_t<double> out({static_cast<py::ssize_t>(vs.size()), py::ssize_t(3)});
    auto w = out.mutable_unchecked<2>();
    for (py::ssize_t i = 0; i < static_cast<py::ssize_t>(vs.size()); ++i) {
        w(i, 0) = vs[i].x;
        w(i, 1) = vs[i].y;
        w(i, 2) = vs[i].z;
    }
    return out;
}

// owns one trajectory: parameters, particle state, neighbor list, rng
class Simulation {
public:
    Simulation(const DpdParams& params, SchemeKind scheme, std::uint64_t seed, double skin)
        : params_(params), scheme_(scheme), rng_(seed), skin_(skin),
          state_(init_state(params_, rng_)),
          list_(NeighborList::build(state_, params_, skin)) {}

    void step_n(double dt, std::size_t n) {
        for (std::size_t k = 0; k < n; ++k)
            step(scheme_, state_, params_, dt, list_, rng_, counters_);
    }

    py::array_t<double> positions() const { return vecs_to_array(state_.q); }
    py::array_t<double> momenta() const { return vecs_to_array(state_.p); }
    py::array_t<double> forces() const { return vecs_to_array(state_.f); }
    double kinetic_temperature_() const { return kinetic_temperature(state_, params_); }
    py::array_t<double> total_momentum_() const { return vec_to_array(total_momentum(state_)); }

    ForceReport force_report() {
        ensure_fresh(list_, state_, params_);
        return compute_forces(state_, params_, list_);
    }

    double time() const { return state_.t; }
    std::uint64_t step_count() const { return state_.step_count; }
    const StepCounters& counters() const { return counters_; }
    const DpdParams& params() const { return params_; }
    SchemeKind scheme() const { return scheme_; }

private:
    DpdParams params_;
    SchemeKind scheme_;
    RngStream rng_;
    double skin_;
    SystemState state_;
    NeighborList list_;
    StepCounters counters_;
};

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "dissipative particle dynamics integrator benchmark";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<EstimateError>(m, "EstimateError", PyExc_RuntimeError);
    py::register_exception<DegeneratePairError>(m, "DegeneratePairError", PyExc_RuntimeError);
    py::register_exception<StaleListError>(m, "StaleListError", PyExc_RuntimeError);

    py::enum_<SchemeKind>(m, "SchemeKind")
        .value("shardlow", SchemeKind::shardlow)
        .value("aboba", SchemeKind::aboba)
        .value("mshardlow1", SchemeKind::mshardlow1)
        .value("mshardlow2", SchemeKind::mshardlow2);

    m.def("scheme_name", [](SchemeKind k) { return std::string(scheme_name(k)); });
    m.def("scheme_from_name",
          [](const std::string& s) -> std::optional<SchemeKind> { return scheme_from_name(s); });

    py::class_<DpdParams>(m, "DpdParams")
        .def_static("standard", &DpdParams::standard, py::arg("a"), py::arg("gamma"),
                    py::arg("kbt"), py::arg("rc"), py::arg("box"), py::arg("n"),
                    py::arg("mass") = 1.0)
        .def_readonly("a", &DpdParams::a)
        .def_readonly("gamma", &DpdParams::gamma)
        .def_readonly("sigma", &DpdParams::sigma)
        .def_readonly("kbt", &DpdParams::kBT)
        .def_readonly("rc", &DpdParams::r_c)
        .def_readonly("box", &DpdParams::L)
        .def_readonly("n", &DpdParams::N)
        .def_readonly("mass", &DpdParams::mass)
        .def_readonly("rho", &DpdParams::rho)
        .def("__repr__", [](const DpdParams& p) {
            return "DpdParams(a=" + std::to_string(p.a) + ", gamma=" + std::to_string(p.gamma) +
                   ", n=" + std::to_string(p.N) + ", box=" + std::to_string(p.L) + ")";
        });

    py::class_<StepCounters>(m, "StepCounters")
        .def_readonly("force_evaluations", &StepCounters::force_evaluations)
        .def_readonly("pair_sweeps", &StepCounters::pair_sweeps)
        .def_readonly("gaussian_draws", &StepCounters::gaussian_draws)
        .def_readonly("list_rebuilds", &StepCounters::list_rebuilds);

    py::class_<ForceReport>(m, "ForceReport")
        .def_readonly("potential", &ForceReport::potential)
        .def_readonly("grad_sq_sum", &ForceReport::grad_sq_sum)
        .def_readonly("laplacian_sum", &ForceReport::laplacian_sum)
        .def_readonly("pair_count", &ForceReport::pair_count);

    py::class_<Simulation>(m, "Simulation")
        .def(py::init<const DpdParams&, SchemeKind, std::uint64_t, double>(), py::arg("params"),
             py::arg("scheme") = SchemeKind::shardlow, py::arg("seed") = 12345,
             py::arg("skin") = 0.3)
        .def("step", &Simulation::step_n, py::arg("dt"), py::arg("n") = 1,
             py::call_guard<py::gil_scoped_release>())
        .def("positions", &Simulation::positions)
        .def("momenta", &Simulation::momenta)
        .def("forces", &Simulation::forces)
        .def("kinetic_temperature", &Simulation::kinetic_temperature_)
        .def("total_momentum", &Simulation::total_momentum_)
        .def("force_report", &Simulation::force_report)
        .def_property_readonly("time", &Simulation::time)
        .def_property_readonly("step_count", &Simulation::step_count)
        .def_property_readonly("counters", &Simulation::counters)
        .def_property_readonly("params", &Simulation::params)
        .def_property_readonly("scheme", &Simulation::scheme);

    py::class_<ExperimentConfig>(m, "ExperimentConfig")
        .def(py::init<>())
        .def_readwrite("scheme", &ExperimentConfig::scheme)
        .def_readwrite("schemes", &ExperimentConfig::schemes)
        .def_readwrite("a", &ExperimentConfig::a)
        .def_readwrite("gamma", &ExperimentConfig::gamma)
        .def_readwrite("kbt", &ExperimentConfig::kbt)
        .def_readwrite("rc", &ExperimentConfig::rc)
        .def_readwrite("mass", &ExperimentConfig::mass)
        .def_readwrite("box", &ExperimentConfig::box)
        .def_readwrite("n", &ExperimentConfig::n)
        .def_readwrite("dt", &ExperimentConfig::dt)
        .def_readwrite("dt_list", &ExperimentConfig::dt_list)
        .def_readwrite("time", &ExperimentConfig::time)
        .def_readwrite("seed", &ExperimentConfig::seed)
        .def_readwrite("out", &ExperimentConfig::out)
        .def_readwrite("skin", &ExperimentConfig::skin)
        .def_readwrite("equil_fraction", &ExperimentConfig::equil_fraction)
        .def_readwrite("temp_stride", &ExperimentConfig::temp_stride)
        .def_readwrite("rdf_stride", &ExperimentConfig::rdf_stride)
        .def_readwrite("rdf_min_snapshots", &ExperimentConfig::rdf_min_snapshots)
        .def_readwrite("rdf_bin", &ExperimentConfig::rdf_bin)
        .def_readwrite("rdf_r_max", &ExperimentConfig::rdf_r_max)
        .def_readwrite("collect_rdf", &ExperimentConfig::collect_rdf)
        .def_readwrite("replicas", &ExperimentConfig::replicas)
        .def_readwrite("threads", &ExperimentConfig::threads)
        .def_readwrite("dt_lo", &ExperimentConfig::dt_lo)
        .def_readwrite("dt_hi", &ExperimentConfig::dt_hi)
        .def_readwrite("err_tol", &ExperimentConfig::err_tol)
        .def_readwrite("resolution", &ExperimentConfig::resolution)
        .def_readwrite("bench_steps", &ExperimentConfig::bench_steps)
        .def_readwrite("bench_reps", &ExperimentConfig::bench_reps)
        .def_readwrite("fit_lo", &ExperimentConfig::fit_lo)
        .def_readwrite("fit_hi", &ExperimentConfig::fit_hi)
        .def_readwrite("grid_per_decade", &ExperimentConfig::grid_per_decade)
        .def("params", &ExperimentConfig::params);

    py::class_<RunReport>(m, "RunReport")
        .def_readonly("scheme", &RunReport::scheme)
        .def_readonly("a", &RunReport::a)
        .def_readonly("gamma", &RunReport::gamma)
        .def_readonly("dt", &RunReport::dt)
        .def_readonly("steps", &RunReport::steps)
        .def_readonly("t_c", &RunReport::t_c)
        .def_readonly("t_k", &RunReport::t_k)
        .def_readonly("rel_err_tc", &RunReport::rel_err_tc)
        .def_readonly("rel_err_tk", &RunReport::rel_err_tk)
        .def_readonly("ms_per_step", &RunReport::ms_per_step)
        .def_readonly("counters", &RunReport::counters)
        .def_readonly("seed", &RunReport::seed)
        .def_readonly("stable", &RunReport::stable)
        .def_readonly("unstable_step", &RunReport::unstable_step)
        .def_readonly("rdf_centers", &RunReport::rdf_centers)
        .def_readonly("rdf_g", &RunReport::rdf_g);

    py::class_<SweepSlope>(m, "SweepSlope")
        .def_readonly("scheme", &SweepSlope::scheme)
        .def_readonly("slope", &SweepSlope::slope)
        .def_readonly("points_used", &SweepSlope::points_used);

    py::class_<SweepResult>(m, "SweepResult")
        .def_readonly("runs", &SweepResult::runs)
        .def_readonly("slopes", &SweepResult::slopes);

    py::class_<CriticalResult>(m, "CriticalResult")
        .def_readonly("scheme", &CriticalResult::scheme)
        .def_readonly("found", &CriticalResult::found)
        .def_readonly("critical_dt", &CriticalResult::critical_dt)
        .def_readonly("err_at_lo", &CriticalResult::err_at_lo)
        .def_readonly("err_at_hi", &CriticalResult::err_at_hi);

    py::class_<EfficiencyRow>(m, "EfficiencyRow")
        .def_readonly("scheme", &EfficiencyRow::scheme)
        .def_readonly("critical_dt", &EfficiencyRow::critical_dt)
        .def_readonly("ms_per_step", &EfficiencyRow::ms_per_step)
        .def_readonly("efficiency_pct", &EfficiencyRow::efficiency_pct);

    py::class_<RdfCurve>(m, "RdfCurve")
        .def_readonly("scheme", &RdfCurve::scheme)
        .def_readonly("dt", &RdfCurve::dt)
        .def_readonly("stable", &RdfCurve::stable)
        .def_readonly("sup_dev", &RdfCurve::sup_dev)
        .def_readonly("g", &RdfCurve::g);

    py::class_<RdfStudyResult>(m, "RdfStudyResult")
        .def_readonly("centers", &RdfStudyResult::centers)
        .def_readonly("reference", &RdfStudyResult::reference)
        .def_readonly("curves", &RdfStudyResult::curves);

    m.def("run_single", &run_single, py::arg("cfg"),
          py::call_guard<py::gil_scoped_release>());
    m.def("run_averaged", &run_averaged, py::arg("cfg"), py::arg("scheme"), py::arg("dt"),
          py::call_guard<py::gil_scoped_release>());
    m.def("sweep", &sweep, py::arg("cfg"), py::call_guard<py::gil_scoped_release>());
    m.def("critical_stepsize", &critical_stepsize, py::arg("cfg"), py::arg("scheme"),
          py::call_guard<py::gil_scoped_release>());
    m.def("bench_cpu_per_step", &bench_cpu_per_step, py::arg("cfg"), py::arg("scheme"),
          py::call_guard<py::gil_scoped_release>());
    m.def("efficiency_table", &efficiency_table, py::arg("cfg"),
          py::call_guard<py::gil_scoped_release>());
    m.def("rdf_study", &rdf_study, py::arg("cfg"), py::arg("ref_dt") = 0.001,
          py::call_guard<py::gil_scoped_release>());

    m.def("fit_loglog_slope", &fit_loglog_slope, py::arg("x"), py::arg("y"));
    m.def("geometric_grid", &geometric_grid, py::arg("lo"), py::arg("hi"),
          py::arg("points_per_decade") = 12);

    m.def("write_runs_csv", &write_runs_csv, py::arg("path"), py::arg("runs"));
    m.def("write_rdf_csv",
          py::overload_cast<const std::filesystem::path&, const RdfStudyResult&>(&write_rdf_csv),
          py::arg("path"), py::arg("study"));
    m.def("write_efficiency_csv", &write_efficiency_csv, py::arg("path"), py::arg("rows"));

    m.def("load_config_file", &load_config_file, py::arg("path"));
    m.def("apply_config_text", &apply_config_text, py::arg("cfg"), py::arg("text"));
}
