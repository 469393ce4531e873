#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dhankel/carleson.hpp"
#include "dhankel/criteria.hpp"
#include "dhankel/errors.hpp"
#include "dhankel/operators.hpp"
#include "dhankel/stochastic.hpp"
#include "dhankel/symbol.hpp"

namespace py = pybind11;
using namespace dhankel;

PYBIND11_MODULE(_dhankel, m) {
  m.doc() = "Hankel and Cesaro operators on the Dirichlet space";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  py::enum_<OperatorKind>(m, "OperatorKind")
      .value("hankel", OperatorKind::hankel)
      .value("cesaro", OperatorKind::cesaro)
      .value("bilinear", OperatorKind::bilinear);
  py::enum_<SpaceTag>(m, "SpaceTag")
      .value("dirichlet_exact", SpaceTag::dirichlet_exact)
      .value("dirichlet_section", SpaceTag::dirichlet_section)
      .value("bergman", SpaceTag::bergman);
  py::enum_<Verdict>(m, "Verdict")
      .value("unbounded", Verdict::unbounded)
      .value("bounded", Verdict::bounded)
      .value("compact", Verdict::compact)
      .value("inconclusive", Verdict::inconclusive);

  py::class_<SymbolSeq>(m, "SymbolSeq")
      .def_static("explicit", &SymbolSeq::explicit_list, py::arg("values"))
      .def_static("powerlog", &SymbolSeq::powerlog, py::arg("alpha"), py::arg("beta"), py::arg("scale") = 1.0)
      .def_static("hilbert", &SymbolSeq::hilbert)
      .def_static("lacunary", &SymbolSeq::lacunary, py::arg("support"), py::arg("values"))
      .def("value", &SymbolSeq::value)
      .def("values", &SymbolSeq::values);

  py::class_<TailBracket>(m, "TailBracket")
      .def_readonly("lower", &TailBracket::lower)
      .def_readonly("upper", &TailBracket::upper);

  py::class_<ClassReport>(m, "ClassReport")
      .def_readonly("verdict", &ClassReport::verdict)
      .def_readonly("decay_ratio", &ClassReport::decay_ratio)
      .def_readonly("notes", &ClassReport::notes);

  m.def("classify", [](const SymbolSeq& s, OperatorKind k) { return classify(s, k); }, py::arg("symbol"),
        py::arg("kind") = OperatorKind::hankel);
  m.def("dirichlet_membership", &dirichlet_membership, py::arg("symbol"), py::arg("n_max"));
  m.def(
      "section_norm",
      [](const SymbolSeq& s, OperatorKind k, SpaceTag t, std::size_t n) {
        return top_singular_value(section_matrix(s, k, t, n)).sigma;
      },
      py::arg("symbol"), py::arg("kind"), py::arg("weight"), py::arg("n"));
  m.def("fourth_moment_exact_rademacher", &fourth_moment_exact_rademacher, py::arg("a"));
  m.def(
      "x_norm", [](const std::vector<cplx>& b, std::size_t n) { return x_norm(TaylorPoly(b), n); }, py::arg("b"),
      py::arg("n"));
}
