#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qheat/cli.hpp"
#include "qheat/core_model.hpp"
#include "qheat/cycles.hpp"
#include "qheat/errors.hpp"
#include "qheat/processes.hpp"
#include "qheat/statmech.hpp"
#include "qheat/sweep.hpp"
#include "qheat/validation.hpp"
#include "qheat/version.hpp"

namespace py = pybind11;
using namespace qheat;

namespace {

py::dict to_dict(const statmech::Quantities& q) {
  py::dict d;
  d["Z"] = q.Z;
  d["F"] = q.F;
  d["U"] = q.U;
  d["S"] = q.S;
  d["S0"] = q.S0;
  d["quality"] = std::string(statmech::to_string(q.quality));
  return d;
}

py::dict to_dict(const statmech::GupQuantities& q) {
  py::dict d;
  d["ZG"] = q.ZG;
  d["FG"] = q.FG;
  d["UG"] = q.UG;
  d["SG"] = q.SG;
  d["dF"] = q.dF;
  d["dU"] = q.dU;
  d["dS"] = q.dS;
  return d;
}

py::dict to_dict(const HeatResult& h) {
  py::dict d;
  d["Q"] = h.Q;
  d["QG"] = h.QG;
  d["correction"] = h.correction;
  return d;
}

py::dict to_dict(const CycleLedger& l) {
  py::dict d;
  py::dict legs;
  for (std::size_t k = 0; k < 4; ++k)
    legs[py::str(std::string(kLegNames[k]))] = to_dict(l.legs[k]);
  d["legs"] = legs;
  d["Q_in"] = l.Q_in;
  d["Q_out"] = l.Q_out;
  d["W"] = l.W;
  d["eta"] = l.eta;
  d["Q_inG"] = l.Q_inG;
  d["Q_outG"] = l.Q_outG;
  d["WG"] = l.WG;
  d["etaG"] = l.etaG;
  d["deltaQ"] = l.deltaQ;
  d["deltaEta"] = l.deltaEta;
  d["deltaEta_first_order"] = l.deltaEtaFirstOrder;
  d["regime_flags"] = l.flags.to_string();
  d["engine_regime"] = l.engine_regime();
  d["approximation"] = std::string(statmech::to_string(l.approximation));
  return d;
}

py::list to_records(const report::Table& t) {
  py::list rows;
  for (const auto& row : t.rows) {
    py::dict d;
    for (std::size_t c = 0; c < row.size(); ++c) {
      py::object v = py::none();
      if (const auto* x = std::get_if<double>(&row[c]))
        v = py::float_(*x);
      else if (const auto* s = std::get_if<std::string>(&row[c]))
        v = py::str(*s);
      d[py::str(t.columns[c])] = v;
    }
    rows.append(d);
  }
  return rows;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Python bindings for the qheat quantum heat-engine library";
  m.attr("__version__") = std::string(kVersion);

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<SpecError>(m, "SpecError", PyExc_ValueError);
  py::register_exception<ContractError>(m, "ContractError", PyExc_ValueError);
  py::register_exception<RegimeError>(m, "RegimeError", PyExc_RuntimeError);
  py::register_exception<DegenerateCycleError>(m, "DegenerateCycleError", PyExc_RuntimeError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

  // core model
  m.def("gamma_of", &gamma_of, py::arg("mass"), py::arg("width"),
        "Spectral scale pi^2 / (2 m L^2).");
  m.def("energy_level", &energy_level, py::arg("gamma"), py::arg("n"));
  m.def("energy_level_gup", &energy_level_gup, py::arg("gamma"), py::arg("delta"), py::arg("n"));

  py::class_<ThermalPoint>(m, "ThermalPoint")
      .def(py::init<double, double>(), py::arg("beta"), py::arg("gamma"))
      .def_property_readonly("beta", &ThermalPoint::beta)
      .def_property_readonly("gamma", &ThermalPoint::gamma)
      .def_property_readonly("beta_gamma", &ThermalPoint::beta_gamma)
      .def("__repr__", [](const ThermalPoint& p) {
        std::ostringstream os;
        os << "ThermalPoint(beta=" << p.beta() << ", gamma=" << p.gamma() << ")";
        return os.str();
      });

  py::class_<GupParams>(m, "GupParams")
      .def(py::init<double, double, double>(), py::arg("beta_g"), py::arg("mass"),
           py::arg("threshold") = kDefaultGupThreshold)
      .def_property_readonly("beta_g", &GupParams::beta_g)
      .def_property_readonly("mass", &GupParams::mass)
      .def_property_readonly("K", &GupParams::K)
      .def_property_readonly("lambda_", &GupParams::lambda)
      .def("delta", &GupParams::delta, py::arg("gamma"));

  m.def(
      "gup_coefficients",
      [](const GupParams& p, double gamma) {
        const auto c = gup_coefficients(p, gamma);
        return py::make_tuple(c.delta, c.K, c.lambda);
      },
      py::arg("params"), py::arg("gamma"), "Returns (delta, K, lambda).");

  // statmech
  m.def("partition_approx", &statmech::partition_approx, py::arg("point"));
  m.def("partition_sum_oracle", &statmech::partition_sum_oracle, py::arg("point"),
        py::arg("tail_tol") = 1e-20);
  m.def("n4_moment_approx", &statmech::n4_moment_approx, py::arg("point"));
  m.def("partition_gup", &statmech::partition_gup, py::arg("point"), py::arg("params"));
  m.def("thermo_closed_form", [](const ThermalPoint& p) { return to_dict(statmech::thermo_closed_form(p)); },
        py::arg("point"));
  m.def("thermo_gup",
        [](const ThermalPoint& p, const GupParams& g) { return to_dict(statmech::thermo_gup(p, g)); },
        py::arg("point"), py::arg("params"));
  m.def(
      "thermo_oracle",
      [](const ThermalPoint& p, const GupParams& g, double tail_tol, double h) {
        return to_dict(statmech::thermo_oracle(p, g, tail_tol, h));
      },
      py::arg("point"), py::arg("params"), py::arg("tail_tol") = 1e-20,
      py::arg("h") = statmech::default_fd_step());

  // processes
  py::class_<Process>(m, "Process")
      .def_static("isothermal", &Process::isothermal, py::arg("beta"), py::arg("gamma_i"),
                  py::arg("gamma_f"))
      .def_static("isochoric", &Process::isochoric, py::arg("gamma"), py::arg("beta_i"),
                  py::arg("beta_f"))
      .def_static("adiabatic", &Process::adiabatic, py::arg("start"), py::arg("beta_f"))
      .def_property_readonly("kind", [](const Process& p) { return std::string(to_string(p.kind())); })
      .def_property_readonly("start", &Process::start)
      .def_property_readonly("end", &Process::end)
      .def("reversed", &Process::reversed);

  m.def("heat_isothermal", &heat_isothermal, py::arg("beta"), py::arg("gamma_i"), py::arg("gamma_f"));
  m.def("heat_isochoric", &heat_isochoric, py::arg("gamma"), py::arg("beta_i"), py::arg("beta_f"));
  m.def("heat_gup", [](const Process& leg, const GupParams& g) { return to_dict(heat_gup(leg, g)); },
        py::arg("leg"), py::arg("params"));
  m.def(
      "leg_heat_oracle",
      [](const Process& leg, const GupParams& g, int steps) {
        return to_dict(leg_heat_oracle(leg, g, steps));
      },
      py::arg("leg"), py::arg("params"), py::arg("steps") = 10'000);

  // cycles
  m.def(
      "carnot_ledger",
      [](double t_hot, double t_cold, double l_a, double l_b, double mass, double beta_g,
         double threshold) {
        return to_dict(carnot_ledger(CarnotSpec{t_hot, t_cold, l_a, l_b, mass, beta_g, threshold}));
      },
      py::arg("t_hot"), py::arg("t_cold"), py::arg("l_a"), py::arg("l_b"), py::arg("mass"),
      py::arg("beta_g") = 0.0, py::arg("gup_threshold") = kDefaultGupThreshold);
  m.def(
      "otto_ledger",
      [](double t_hot, double t_cold, double l_small, double l_large, double mass, double beta_g,
         std::optional<double> f_ad, std::optional<double> f_cb, double threshold) {
        return to_dict(otto_ledger(
            OttoSpec{t_hot, t_cold, l_small, l_large, mass, beta_g, f_ad, f_cb, threshold}));
      },
      py::arg("t_hot"), py::arg("t_cold"), py::arg("l_small"), py::arg("l_large"), py::arg("mass"),
      py::arg("beta_g") = 0.0, py::arg("f_ad") = py::none(), py::arg("f_cb") = py::none(),
      py::arg("gup_threshold") = kDefaultGupThreshold);
  m.def("carnot_figure_f", &carnot_figure_f, py::arg("r"), py::arg("r_L"));
  m.def("otto_figure_f", &otto_figure_f, py::arg("r"), py::arg("r_L_O"), py::arg("f_ad"),
        py::arg("f_cb"));
  m.def("otto_figure_f_printed", &otto_figure_f_printed, py::arg("r"), py::arg("r_L_O"),
        py::arg("f_ad"), py::arg("f_cb"));

  m.def(
      "sweep",
      [](const std::string& target, std::optional<double> lo, std::optional<double> hi,
         std::optional<int> steps) {
        const auto t = sweep::parse_target(target);
        if (!t)
          throw DomainError("unknown sweep target: " + target);
        auto spec = sweep::default_spec(*t);
        if (lo) spec.min = *lo;
        if (hi) spec.max = *hi;
        if (steps) spec.steps = *steps;
        return to_records(sweep::run(spec));
      },
      py::arg("target"), py::arg("min") = py::none(), py::arg("max") = py::none(),
      py::arg("steps") = py::none(), "Figure sweep with the caption's fixed parameters.");

  m.def(
      "validate",
      [](double beta_gamma, int steps, double tail_tol) {
        return to_records(validation::to_table(validation::run({beta_gamma, steps, tail_tol})));
      },
      py::arg("beta_gamma") = 1e-4, py::arg("steps") = 10'000, py::arg("tail_tol") = 1e-20);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
