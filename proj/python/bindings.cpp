#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gpssvs/errors.hpp"
#include "gpssvs/observables.hpp"
#include "gpssvs/oracle.hpp"
#include "gpssvs/states.hpp"
#include "gpssvs/verify.hpp"
#include "gpssvs/wigner.hpp"

namespace py = pybind11;
using namespace gpssvs;

namespace {

Parity parity_of(const std::string& p) {
  if (p == "even") return Parity::even;
  if (p == "odd") return Parity::odd;
  throw std::invalid_argument("parity must be 'even' or 'odd'");
}

py::array_t<std::complex<double>> coeffs_array(const FockExpansion& s) {
  const auto c = s.coeffs();
  return py::array_t<std::complex<double>>(static_cast<py::ssize_t>(c.size()), c.data());
}

py::dict metrics_dict(const NegativityMetrics& m) {
  py::dict d;
  d["min_value"] = m.min_value;
  d["negative_volume"] = m.negative_volume;
  d["integral"] = m.integral;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Generalized photon-subtracted squeezed vacuum states";

  auto base = py::register_exception<Error>(m, "GpssvsError", PyExc_RuntimeError);
  py::register_exception<TruncationError>(m, "TruncationError", base.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
  py::register_exception<AnnihilatedStateError>(m, "AnnihilatedStateError", base.ptr());
  py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
  py::register_exception<ConsistencyError>(m, "ConsistencyError", base.ptr());

  py::class_<Nonlinearity>(m, "Nonlinearity")
      .def_static("harmonic", &Nonlinearity::harmonic)
      .def_static("poschl_teller", &Nonlinearity::poschl_teller, py::arg("lam") = 1.5,
                  py::arg("kappa") = 1.5)
      .def_static("custom", &Nonlinearity::custom, py::arg("table"))
      .def_property_readonly("kind", [](const Nonlinearity& nl) { return std::string(to_string(nl.kind())); })
      .def("f", &Nonlinearity::f)
      .def("log_f_factorial", &Nonlinearity::log_f_factorial)
      .def("commutator_weight", &Nonlinearity::commutator_weight)
      .def("__repr__", &Nonlinearity::describe);

  py::class_<FockExpansion>(m, "FockExpansion")
      .def_property_readonly("parity", [](const FockExpansion& s) { return std::string(to_string(s.parity())); })
      .def_property_readonly("truncation", &FockExpansion::truncation)
      .def_property_readonly("tail_bound", &FockExpansion::tail_bound)
      .def_property_readonly("r", [](const FockExpansion& s) { return s.spec().r(); })
      .def_property_readonly("theta", [](const FockExpansion& s) { return s.spec().theta(); })
      .def_property_readonly("m", [](const FockExpansion& s) { return s.spec().m(); })
      .def_property_readonly("nonlinearity", &FockExpansion::nl)
      .def_property_readonly("coeffs", &coeffs_array)
      .def_property_readonly("photon_numbers",
                             [](const FockExpansion& s) {
                               std::vector<std::uint64_t> n(s.truncation());
                               for (std::size_t j = 0; j < n.size(); ++j) n[j] = s.photon_number(j);
                               return py::array_t<std::uint64_t>(static_cast<py::ssize_t>(n.size()), n.data());
                             })
      .def_property_readonly("probabilities", [](const FockExpansion& s) {
        std::vector<double> p;
        for (auto [n, w] : photon_distribution(s)) p.push_back(w);
        return py::array_t<double>(static_cast<py::ssize_t>(p.size()), p.data());
      });

  m.def(
      "pssvs",
      [](const Nonlinearity& nl, double r, double theta, unsigned mm, const std::string& parity,
         double tol, std::size_t nmax) {
        return pssvs(nl, SqueezeSpec(r, theta, mm, parity_of(parity)), {tol, nmax});
      },
      py::arg("nl"), py::arg("r"), py::arg("theta") = 0.0, py::arg("m") = 0,
      py::arg("parity") = "even", py::arg("tol") = 1e-12, py::arg("nmax") = 100000);
  m.def(
      "squeezed_vacuum",
      [](const Nonlinearity& nl, double r, double theta, double tol, std::size_t nmax) {
        return squeezed_vacuum(nl, r, theta, {tol, nmax});
      },
      py::arg("nl"), py::arg("r"), py::arg("theta") = 0.0, py::arg("tol") = 1e-12,
      py::arg("nmax") = 100000);

  m.def("quadratures", [](const FockExpansion& s) {
    const auto q = quadrature_report(s);
    py::dict d;
    d["exp_A2"] = q.exp_A2;
    d["exp_AdA"] = q.exp_AdA;
    d["exp_AAd"] = q.exp_AAd;
    d["var_x"] = q.var_x;
    d["var_p"] = q.var_p;
    d["robertson_rhs"] = q.robertson_rhs;
    d["x_squeezed"] = q.x_squeezed;
    d["p_squeezed"] = q.p_squeezed;
    return d;
  });
  m.def("number_stats", [](const FockExpansion& s) {
    const auto n = number_stats(s);
    py::dict d;
    d["mean_N"] = n.mean_N;
    d["mean_N2"] = n.mean_N2;
    d["n_squeeze"] = n.n_squeeze;
    d["mandel_q"] = n.mandel_q ? py::cast(*n.mandel_q) : py::none();
    return d;
  });

  m.def("wigner_point", &wigner_point, py::arg("state"), py::arg("z"));
  m.def("wigner_point_oracle", &wigner_point_oracle, py::arg("state"), py::arg("z"));
  m.def(
      "wigner_grid",
      [](const FockExpansion& s, double xlo, double xhi, std::size_t nx, double plo, double phi,
         std::size_t np) {
        WignerGrid g;
        {
          py::gil_scoped_release release;
          g = wigner_grid(s, {xlo, xhi, nx}, {plo, phi, np});
        }
        std::vector<double> x(nx), p(np);
        for (std::size_t i = 0; i < nx; ++i) x[i] = g.x.at(i);
        for (std::size_t i = 0; i < np; ++i) p[i] = g.p.at(i);
        py::array_t<double> w({static_cast<py::ssize_t>(nx), static_cast<py::ssize_t>(np)});
        std::copy(g.values.begin(), g.values.end(), w.mutable_data());
        return py::make_tuple(py::array_t<double>(nx, x.data()), py::array_t<double>(np, p.data()), w,
                              metrics_dict(g.metrics));
      },
      py::arg("state"), py::arg("xlo"), py::arg("xhi"), py::arg("nx"), py::arg("plo"),
      py::arg("phi"), py::arg("np"),
      "Returns (x, p, W[x, p], metrics).");

  m.def(
      "squeeze_by_exponential",
      [](const Nonlinearity& nl, double r, double theta, std::size_t dim) {
        return squeeze_by_exponential(build_workspace(nl, dim), r, theta);
      },
      py::arg("nl"), py::arg("r"), py::arg("theta") = 0.0, py::arg("dim") = 80);
  m.def(
      "subtract_photons",
      [](const FockExpansion& s, unsigned count, std::size_t dim) {
        return subtract_photons(build_workspace(s.nl(), dim), s, count);
      },
      py::arg("state"), py::arg("count"), py::arg("dim"));

  m.def(
      "verify",
      [](double tol, std::size_t oracle_dim) {
        std::vector<CheckResult> checks;
        {
          py::gil_scoped_release release;
          checks = run_verification({tol, oracle_dim, 100000});
        }
        py::list out;
        for (const auto& c : checks) {
          py::dict d;
          d["name"] = c.name;
          d["domain"] = c.domain;
          d["residual"] = c.residual;
          d["tolerance"] = c.tolerance;
          d["pass"] = c.pass;
          d["error"] = c.error.empty() ? py::none() : py::cast(c.error);
          out.append(d);
        }
        return out;
      },
      py::arg("tol") = 1e-12, py::arg("oracle_dim") = 80);
}
