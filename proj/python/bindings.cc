#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cli.h"
#include "jtube/errors.h"
#include "jtube/jalg.h"
#include "jtube/rep1d.h"
#include "jtube/riesz.h"
#include "jtube/serialize.h"
#include "jtube/wedge.h"

#define JTUBE_STR_(x) #x
#define JTUBE_STR(x) JTUBE_STR_(x)

namespace py = pybind11;

namespace {

jtube::jalg::JordanAlgebra Algebra(const std::string& family, int size) {
  return jtube::jalg::JordanAlgebra::Make(jtube::jalg::ParseFamily(family), size);
}

jtube::Element ToElement(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

}  // namespace

PYBIND11_MODULE(_jtube, m) {
  m.doc() = "Jordan algebra tube domains, Riesz boundary values and modular objects";

  py::register_exception<jtube::ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<jtube::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<jtube::UnsupportedAlgebraError>(m, "UnsupportedAlgebraError", PyExc_ValueError);
  py::register_exception<jtube::NumericError>(m, "NumericError", PyExc_ArithmeticError);

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = jtube::cli::Run(args, out, err);
        }
        return std::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs a CLI command; returns (exit_code, stdout, stderr).");

  m.def(
      "classify_json",
      [](const std::string& family, int size, const std::vector<double>& x, double tol) {
        const auto a = Algebra(family, size);
        const auto e = ToElement(x);
        a.CheckElement(e);
        return jtube::serialize::ToJson(a.Classify(e, tol)).dump();
      },
      py::arg("family"), py::arg("size"), py::arg("element"), py::arg("tol") = 1e-9);

  m.def(
      "support_report_json",
      [](const std::string& family, int size, const std::string& s, bool parity_only) {
        const auto d = jtube::jalg::MakeDescriptor(jtube::jalg::ParseFamily(family), size);
        return jtube::serialize::ToJson(jtube::riesz::MakeSupportReport(d, jtube::Exponent::Parse(s), parity_only))
            .dump();
      },
      py::arg("family"), py::arg("size"), py::arg("s"), py::arg("parity_only") = false);

  m.def(
      "trace_h",
      [](const std::string& family, int size, int k) {
        const auto a = Algebra(family, size);
        return std::make_pair(jtube::wedge::TraceH(a, k), jtube::wedge::TraceHFormula(a.descriptor(), k));
      },
      py::arg("family"), py::arg("size"), py::arg("k"), "Returns (assembled trace, closed form).");

  m.def(
      "tilde_mu_boundary",
      [](const std::string& family, int size, double s, const std::vector<double>& x) {
        const auto a = Algebra(family, size);
        const auto e = ToElement(x);
        a.CheckElement(e);
        return jtube::riesz::TildeMuBoundary(a, s, e);
      },
      py::arg("family"), py::arg("size"), py::arg("s"), py::arg("element"));

  m.def(
      "kernel_gram_min_eigenvalue",
      [](double s, const std::vector<std::complex<double>>& points) {
        const auto g = jtube::modular::KernelGram(s, points);
        return std::make_pair(g.min_eigenvalue, g.norm);
      },
      py::arg("s"), py::arg("points"));

#ifdef VERSION_INFO
  m.attr("__version__") = JTUBE_STR(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
