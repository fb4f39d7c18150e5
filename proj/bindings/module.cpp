#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sliosp/elliptic.hpp"
#include "sliosp/error_function.hpp"
#include "sliosp/errors.hpp"
#include "sliosp/forward.hpp"
#include "sliosp/kernels.hpp"
#include "sliosp/reconstruct.hpp"
#include "sliosp/report.hpp"

namespace py = pybind11;
using namespace sliosp;

namespace {

ReconstructMethod parse_method(const std::string& name) {
  if (name == "auto") return ReconstructMethod::Auto;
  if (name == "ode") return ReconstructMethod::Ode;
  if (name == "closed-form") return ReconstructMethod::ClosedForm;
  throw Error(ErrorKind::DomainError, "method must be auto, ode or closed-form");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "inverse optimization spectral problem solver "
            "(Dirichlet Sturm-Liouville operator, constant prior potential)";

  py::register_exception<Error>(m, "SliospError");

  py::class_<ProblemSpec>(m, "ProblemSpec")
      .def(py::init([](double q0, double lambda_star, int m_, double p) {
             return validate(ProblemSpec{q0, lambda_star, m_, p});
           }),
           py::arg("q0"), py::arg("lambda_star"), py::arg("m"), py::arg("p"))
      .def_readonly("q0", &ProblemSpec::q0)
      .def_readonly("lambda_star", &ProblemSpec::lambda_star)
      .def_readonly("m", &ProblemSpec::m)
      .def_readonly("p", &ProblemSpec::p)
      .def_property_readonly("gap", &ProblemSpec::gap)
      .def_property_readonly("p_star", &ProblemSpec::p_star);

  py::class_<RegimeClass>(m, "RegimeClass")
      .def_property_readonly(
          "regime", [](const RegimeClass& rc) { return regime_name(rc.regime); })
      .def_readonly("epsilon", &RegimeClass::epsilon)
      .def_readonly("gap", &RegimeClass::gap);

  py::class_<AmplitudeSolution>(m, "AmplitudeSolution")
      .def_readonly("a_m", &AmplitudeSolution::a_m)
      .def_readonly("k", &AmplitudeSolution::k)
      .def_readonly("bracket_lo", &AmplitudeSolution::bracket_lo)
      .def_readonly("bracket_hi", &AmplitudeSolution::bracket_hi)
      .def_readonly("iterations", &AmplitudeSolution::iterations);

  py::class_<PotentialProfile>(m, "PotentialProfile")
      .def_readonly("n", &PotentialProfile::n)
      .def_readonly("x", &PotentialProfile::x)
      .def_readonly("u", &PotentialProfile::u)
      .def_readonly("q_hat", &PotentialProfile::q_hat)
      .def_readonly("amplitude", &PotentialProfile::amplitude)
      .def_readonly("conservation_residual",
                    &PotentialProfile::conservation_residual);

  m.def("classify",
        [](const ProblemSpec& spec, double boundary_tol) {
          return classify(spec, boundary_tol);
        },
        py::arg("spec"), py::arg("boundary_tol") = 0.0);
  m.def("invert_v", &invert_v, py::arg("spec"));
  m.def("z_m", &z_m, py::arg("x"), py::arg("m"), py::arg("p"));
  m.def("r_m", &r_m, py::arg("x"), py::arg("m"));
  m.def("dilation_residual", &dilation_residual, py::arg("x"), py::arg("m"),
        py::arg("p"));
  m.def("gap_free_error", &gap_free_error, py::arg("m"), py::arg("p"));

  m.def("reconstruct",
        [](const ProblemSpec& spec, int n, const std::string& method) {
          return reconstruct(spec, n, parse_method(method));
        },
        py::arg("spec"), py::arg("n") = 8192, py::arg("method") = "auto");
  m.def("lp_norm_direct", &lp_norm_direct, py::arg("profile"));

  m.def("eigenvalue",
        [](const std::vector<double>& values, int m_, double tol) {
          SampledPotential q{static_cast<int>(values.size()) - 1, values};
          return eigenvalue(q, m_, tol);
        },
        py::arg("values"), py::arg("m"), py::arg("tol") = 1e-10);
  m.def("prufer_angle",
        [](double lambda, const std::vector<double>& values, int steps) {
          SampledPotential q{static_cast<int>(values.size()) - 1, values};
          return prufer_angle(lambda, q, steps);
        },
        py::arg("lam"), py::arg("values"), py::arg("steps"));

  m.def("e1", &e1, py::arg("s"));
  m.def("e2", &e2, py::arg("s"));
  m.def("jacobi",
        [](double z, double k) {
          const auto t = jacobi(z, k);
          return py::make_tuple(t.sn, t.cn, t.dn);
        },
        py::arg("z"), py::arg("k"));
  m.def("first_integral_residual", &first_integral_residual, py::arg("u"),
        py::arg("du"), py::arg("spec"), py::arg("k"));
}
