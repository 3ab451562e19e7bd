#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orthospeed/device.hpp"
#include "orthospeed/oracle.hpp"
#include "orthospeed/sweep.hpp"

namespace py = pybind11;
using namespace orthospeed;

namespace {

py::list counts_as_list(const SpeedReport& r) {
    py::list rows;
    for (int i = 0; i < 2; ++i) {
        py::list row;
        for (int j = 0; j < 2; ++j) row.append(r.counts[i][j]);
        rows.append(row);
    }
    return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "charge-qubit/cavity evolution and orthogonality-speed analysis";

    py::register_exception<domain_error>(m, "DomainError", PyExc_ValueError);
    py::register_exception<numeric_error>(m, "NumericError",
                                          PyExc_ArithmeticError);

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init<>())
        .def(py::init([](double g, double delta) {
                 ModelParams p;
                 p.g = g;
                 p.delta = delta;
                 p.validate();
                 return p;
             }),
             py::arg("g"), py::arg("delta"))
        .def_readwrite("g", &ModelParams::g)
        .def_readwrite("delta", &ModelParams::delta);

    py::enum_<FieldKind>(m, "FieldKind")
        .value("fock", FieldKind::fock)
        .value("binomial", FieldKind::binomial)
        .value("coherent_approx", FieldKind::coherent_approx);

    py::class_<FieldState>(m, "FieldState")
        .def_readonly("amplitudes", &FieldState::amplitudes)
        .def_readonly("kind", &FieldState::kind)
        .def_property_readonly("truncation", &FieldState::truncation)
        .def("norm_sq", &FieldState::norm_sq)
        .def("describe", &FieldState::describe)
        .def("__repr__", &FieldState::describe);

    m.def("make_fock", &make_fock, py::arg("n"));
    m.def("make_binomial", &make_binomial, py::arg("mu"), py::arg("eta"));
    m.def("make_coherent_approx", &make_coherent_approx, py::arg("nbar"),
          py::arg("tail_tol") = 1e-12);
    m.def("mean_photon", &mean_photon, py::arg("state"));
    m.def("rabi_frequency", &rabi_frequency, py::arg("params"), py::arg("n"));

    py::class_<QubitDensity>(m, "QubitDensity")
        .def(py::init<>())
        .def_readwrite("rho11", &QubitDensity::rho11)
        .def_readwrite("rho22", &QubitDensity::rho22)
        .def_readwrite("rho12", &QubitDensity::rho12)
        .def("trace", &QubitDensity::trace)
        .def("det", &QubitDensity::det)
        .def("is_valid", &QubitDensity::is_valid, py::arg("tol") = 1e-12);

    py::class_<JointState>(m, "JointState")
        .def_readonly("f_plus", &JointState::f_plus)
        .def_readonly("f_minus", &JointState::f_minus)
        .def("norm_sq", &JointState::norm_sq);

    m.def("qubit_state", &qubit_state, py::arg("theta"), py::arg("phi"));
    m.def("default_qubit", &default_qubit);
    m.def("evolve_joint", &evolve_joint, py::arg("params"), py::arg("field"),
          py::arg("qubit"), py::arg("t"));
    m.def("reduced_qubit", &reduced_qubit, py::arg("state"));
    m.def("fock_rho_direct", &fock_rho_direct, py::arg("params"), py::arg("n"),
          py::arg("t"));

    py::class_<SeriesEval>(m, "SeriesEval")
        .def_readonly("rho11", &SeriesEval::rho11)
        .def_readonly("rho22", &SeriesEval::rho22)
        .def_readonly("rho12", &SeriesEval::rho12)
        .def_readonly("max_deviation", &SeriesEval::max_deviation);

    m.def("binomial_rho_series", &binomial_rho_series, py::arg("params"),
          py::arg("mu"), py::arg("eta"), py::arg("t"));

    m.def(
        "oracle_rho",
        [](const ModelParams& p, const FieldState& field, double t,
           const QubitVec& qubit) { return oracle_rho(p, field, t, qubit); },
        py::arg("params"), py::arg("field"), py::arg("t"),
        py::arg("qubit") = default_qubit());

    py::class_<SpectralPair>(m, "SpectralPair")
        .def_readonly("lambda1", &SpectralPair::lambda1)
        .def_readonly("lambda2", &SpectralPair::lambda2)
        .def_readonly("u1", &SpectralPair::u1)
        .def_readonly("u2", &SpectralPair::u2)
        .def_readonly("degenerate", &SpectralPair::degenerate);

    m.def("eig2", &eig2, py::arg("rho"));
    m.def(
        "overlaps", [](const SpectralPair& pair) { return overlaps(pair); },
        py::arg("pair"));

    py::class_<OrthogonalityEvent>(m, "OrthogonalityEvent")
        .def_readonly("i", &OrthogonalityEvent::i)
        .def_readonly("j", &OrthogonalityEvent::j)
        .def_readonly("t_event", &OrthogonalityEvent::t_event)
        .def_readonly("residual", &OrthogonalityEvent::residual)
        .def("__repr__", [](const OrthogonalityEvent& e) {
            return "OrthogonalityEvent(i=" + std::to_string(e.i) +
                   ", j=" + std::to_string(e.j) +
                   ", t=" + std::to_string(e.t_event) + ")";
        });

    py::class_<DetectorSettings>(m, "DetectorSettings")
        .def(py::init<>())
        .def_readwrite("epsilon_orth", &DetectorSettings::epsilon_orth)
        .def_readwrite("refine_tol", &DetectorSettings::refine_tol);

    py::class_<SpeedReport>(m, "SpeedReport")
        .def_readonly("t0", &SpeedReport::t0)
        .def_readonly("t1", &SpeedReport::t1)
        .def_readonly("total_events", &SpeedReport::total_events)
        .def_readonly("first_orthogonality_time",
                      &SpeedReport::first_orthogonality_time)
        .def_readonly("speed", &SpeedReport::speed)
        .def_property_readonly("counts", &counts_as_list);

    py::enum_<Engine>(m, "Engine")
        .value("closed_form", Engine::closed_form)
        .value("oracle", Engine::oracle)
        .value("both", Engine::both);

    py::class_<FieldSpec>(m, "FieldSpec")
        .def(py::init<>())
        .def_readwrite("kind", &FieldSpec::kind)
        .def_readwrite("n", &FieldSpec::n)
        .def_readwrite("mu", &FieldSpec::mu)
        .def_readwrite("eta", &FieldSpec::eta)
        .def_readwrite("nbar", &FieldSpec::nbar)
        .def_readwrite("tail_tol", &FieldSpec::tail_tol)
        .def("materialize", &FieldSpec::materialize);

    py::class_<Window>(m, "Window")
        .def(py::init<>())
        .def_readwrite("t0", &Window::t0)
        .def_readwrite("t1", &Window::t1)
        .def_readwrite("dt", &Window::dt);

    py::class_<TracePoint>(m, "TracePoint")
        .def_readonly("t", &TracePoint::t)
        .def_readonly("rho", &TracePoint::rho)
        .def_readonly("lambda1", &TracePoint::lambda1)
        .def_readonly("lambda2", &TracePoint::lambda2)
        .def_readonly("sp", &TracePoint::sp)
        .def_readonly("degenerate", &TracePoint::degenerate)
        .def_readonly("rho_dev", &TracePoint::rho_dev);

    py::class_<CellResult>(m, "CellResult")
        .def_readonly("trace", &CellResult::trace)
        .def_readonly("events", &CellResult::events)
        .def_readonly("report", &CellResult::report);

    m.def("run_cell", &run_cell, py::arg("params"), py::arg("field"),
          py::arg("qubit"), py::arg("window"), py::arg("detector"),
          py::arg("engine") = Engine::closed_form,
          py::call_guard<py::gil_scoped_release>());

    py::class_<DeviceParams>(m, "DeviceParams")
        .def(py::init<>())
        .def_readwrite("C_g", &DeviceParams::C_g)
        .def_readwrite("C_J", &DeviceParams::C_J)
        .def_readwrite("C_F", &DeviceParams::C_F)
        .def_readwrite("E_J", &DeviceParams::E_J)
        .def_readwrite("omega", &DeviceParams::omega)
        .def_readwrite("e", &DeviceParams::e)
        .def_readwrite("hbar", &DeviceParams::hbar);

    m.def("charging_energy", &charging_energy, py::arg("device"));
    m.def("coupling_g", &coupling_g, py::arg("device"));
    m.def("coupling_g_alt", &coupling_g_alt, py::arg("device"));
    m.def("detuning_delta", &detuning_delta, py::arg("device"));
    m.def("regime_warning", &regime_warning, py::arg("device"));
}
