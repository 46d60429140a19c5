#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "bosesemi/action.hpp"
#include "bosesemi/meanfield.hpp"
#include "bosesemi/quantize.hpp"
#include "bosesemi/quantum.hpp"
#include "bosesemi/special.hpp"
#include "bosesemi/wavefun.hpp"

namespace py = pybind11;
using namespace bosesemi;

namespace {

Lobe parse_lobe(const std::string& s) {
  if (s == "whole") return Lobe::whole;
  if (s == "left") return Lobe::left;
  if (s == "right") return Lobe::right;
  throw DomainError("lobe must be 'whole', 'left' or 'right'");
}

std::string kind_name(WavefunctionKind k) {
  switch (k) {
    case WavefunctionKind::exact: return "exact";
    case WavefunctionKind::primitive: return "primitive";
    case WavefunctionKind::uniform: return "uniform";
  }
  return "?";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Compiled core of bosesemi";

  auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
  // Registered after DomainError so its translator is tried first.
  py::register_exception<UnsupportedGeometry>(m, "UnsupportedGeometry", domain.ptr());

  py::class_<ModelParams>(m, "ModelParams")
      .def(py::init([](int N, double eps, double v, double g, double hbar) {
             ModelParams p{N, eps, v, g, hbar};
             p.validate();
             return p;
           }),
           py::arg("N"), py::arg("eps") = 0.0, py::arg("v") = 1.0, py::arg("g") = 0.0,
           py::arg("hbar") = 1.0)
      .def_static("with_g_over_ns", &ModelParams::with_g_over_ns, py::arg("N"), py::arg("eps"),
                  py::arg("v"), py::arg("g_over_ns"), py::arg("hbar") = 1.0)
      .def_readwrite("N", &ModelParams::N)
      .def_readwrite("eps", &ModelParams::eps)
      .def_readwrite("v", &ModelParams::v)
      .def_readwrite("g", &ModelParams::g)
      .def_readwrite("hbar", &ModelParams::hbar)
      .def_property_readonly("ns", &ModelParams::ns_real)
      .def("__repr__", &ModelParams::describe);

  py::class_<EnergyRange>(m, "EnergyRange")
      .def_readonly("min", &EnergyRange::min)
      .def_readonly("max", &EnergyRange::max);

  py::class_<BarrierInfo>(m, "BarrierInfo")
      .def_readonly("E_barr", &BarrierInfo::E_barr)
      .def_readonly("p_barr", &BarrierInfo::p_barr)
      .def_readonly("E_min_lower", &BarrierInfo::E_min_lower)
      .def_readonly("E_min_upper", &BarrierInfo::E_min_upper)
      .def_readonly("p_min_lower", &BarrierInfo::p_min_lower)
      .def_readonly("p_min_upper", &BarrierInfo::p_min_upper);

  py::class_<FixedPoint>(m, "FixedPoint")
      .def_property_readonly("q", [](const FixedPoint& f) { return f.point.q; })
      .def_property_readonly("p", [](const FixedPoint& f) { return f.point.p; })
      .def_readonly("energy", &FixedPoint::energy)
      .def_property_readonly("kind", [](const FixedPoint& f) { return std::string(to_string(f.kind)); })
      .def_property_readonly("label", [](const FixedPoint& f) { return std::string(to_string(f.label)); });

  py::class_<LevelDensity>(m, "LevelDensity")
      .def_readonly("bin_edges", &LevelDensity::bin_edges)
      .def_readonly("heights", &LevelDensity::heights)
      .def_readonly("normalization", &LevelDensity::normalization);

  py::class_<MomentumWavefunction>(m, "Wavefunction")
      .def_readonly("grid", &MomentumWavefunction::grid)
      .def_readonly("values", &MomentumWavefunction::values)
      .def_readonly("state", &MomentumWavefunction::state)
      .def_readonly("energy", &MomentumWavefunction::energy)
      .def_property_readonly("kind", [](const MomentumWavefunction& w) { return kind_name(w.kind); });

  m.def(
      "exact_spectrum", [](const ModelParams& p) { return exact_spectrum(p).energies; }, py::arg("params"),
      "All N + 1 eigenvalues of the symmetrized Hamiltonian, ascending.");
  m.def(
      "semiclassical_spectrum", [](const ModelParams& p) { return semiclassical_spectrum(p).energies; },
      py::arg("params"), "All N + 1 semiclassical levels, ascending.");
  m.def(
      "level_density", [](const ModelParams& p, int bins) { return level_density(exact_spectrum(p), bins); },
      py::arg("params"), py::arg("bins") = 60, "Histogram of the exact spectrum, unit area.");
  m.def(
      "wavefunction",
      [](const ModelParams& p, int n, const std::string& kind, std::optional<double> energy) {
        if (kind == "exact") return p_representation(exact_spectrum(p, true), n);
        if (kind == "primitive") return primitive(p, n, energy);
        if (kind == "uniform") return uniform(p, n, energy);
        throw DomainError("kind must be 'exact', 'primitive' or 'uniform'");
      },
      py::arg("params"), py::arg("n"), py::arg("kind") = "exact", py::arg("energy") = py::none(),
      "|Psi_n(p)|^2 on p = -N, -N+2, ..., N.");
  m.def(
      "sweep_epsilon",
      [](const ModelParams& p, const std::vector<double>& grid, int threads) {
        py::list out;
        for (const auto& pt : sweep_epsilon(p, grid, true, true, {}, threads)) {
          py::dict d;
          d["eps"] = pt.eps;
          d["exact"] = pt.exact;
          d["semiclassical"] = pt.semiclassical;
          d["stationary"] = pt.stationary;
          d["swallowtail"] = pt.swallowtail;
          d["error"] = pt.error;
          out.append(d);
        }
        return out;
      },
      py::arg("params"), py::arg("eps_grid"), py::arg("threads") = 0,
      "Exact and semiclassical spectra for each eps; params.eps is ignored.");

  m.def("classical_range", &classical_range, py::arg("params"));
  m.def("barrier", &barrier, py::arg("params"));
  m.def("fixed_points", &fixed_points, py::arg("params"));
  m.def(
      "action", [](const ModelParams& p, double E, const std::string& lobe) { return action(p, E, parse_lobe(lobe)); },
      py::arg("params"), py::arg("E"), py::arg("lobe") = "whole");
  m.def(
      "period", [](const ModelParams& p, double E, const std::string& lobe) { return period(p, E, parse_lobe(lobe)); },
      py::arg("params"), py::arg("E"), py::arg("lobe") = "whole");
  m.def(
      "hamiltonian", [](const ModelParams& p, double q, double pm) { return hamiltonian(p, {q, pm}); },
      py::arg("params"), py::arg("q"), py::arg("p"), "Mean-field energy at (q, p).");
  m.def("arg_gamma_half", &arg_gamma_half, py::arg("x"));
  m.def("phase_correction", &phase_correction, py::arg("s_eps"));
}
