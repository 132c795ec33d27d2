#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stratoforest/homotopy.hpp"
#include "stratoforest/nerve.hpp"
#include "stratoforest/poset.hpp"
#include "stratoforest/render.hpp"
#include "stratoforest/superimpose.hpp"
#include "stratoforest/tracer.hpp"
#include "stratoforest/whitehead.hpp"

namespace py = pybind11;
using namespace stratoforest;

namespace {

std::vector<std::string> nerve_homology(int n, int max_codim) {
  std::vector<std::string> out;
  for (const auto& h : homology(build_nerve(build_cover(build_poset(n, max_codim))))) out.push_back(h.to_string());
  return out;
}

}  // namespace

PYBIND11_MODULE(_stratoforest, m) {
  m.doc() = "Signatures of complex polynomial drawings";

  py::register_exception<SignatureError>(m, "SignatureError", PyExc_ValueError);
  py::register_exception<MoveError>(m, "MoveError", PyExc_ValueError);
  py::register_exception<DistinctRootsViolated>(m, "DistinctRootsViolated", PyExc_ValueError);

  py::class_<Signature>(m, "Signature")
      .def_property_readonly("n", &Signature::n)
      .def_property_readonly("codimension", [](const Signature& s) { return codimension(s); })
      .def_property_readonly("critical_count", [](const Signature& s) { return critical_count(s); })
      .def("is_generic", [](const Signature& s) { return is_generic(s); })
      .def("encode", &Signature::encode)
      .def("rotate", [](const Signature& s, int steps) { return rotate(s, steps); })
      .def("svg", [](const Signature& s) { return signature_svg(s); })
      .def("contractions", [](const Signature& s) {
        std::vector<Signature> out;
        for (auto& [mv, t] : enumerate_contractions(s)) out.push_back(t);
        return out;
      })
      .def("__eq__", [](const Signature& a, const Signature& b) { return a == b; })
      .def("__hash__", [](const Signature& s) { return std::hash<std::string>{}(s.encode()); })
      .def("__repr__", [](const Signature& s) {
        return "<Signature n=" + std::to_string(s.n()) + " codim=" + std::to_string(codimension(s)) + ">";
      });

  m.def("decode", &decode, py::arg("data"));
  m.def("enumerate_generic", [](int n) { return enumerate_generic_signatures(n); }, py::arg("n"));
  m.def("enumerate_all", [](int n, int max_codim) { return enumerate_all(n, max_codim); }, py::arg("n"), py::arg("max_codim"));
  m.def("orbit_sizes", [](int n) {
    std::vector<int> out;
    for (const auto& o : orbit_decompose(enumerate_generic_signatures(n))) out.push_back(o.size);
    return out;
  }, py::arg("n"));
  m.def("catalan", &catalan, py::arg("m"));
  m.def("trace", [](const std::string& coeffs) { return trace_drawing(Polynomial::parse(coeffs)); }, py::arg("coeffs"),
        "Signature of the polynomial given as monic coefficients, highest degree first");
  m.def("critical_values", [](const std::string& coeffs) { return critical_values(Polynomial::parse(coeffs)); }, py::arg("coeffs"));
  m.def("cover_degree", &cover_degree, py::arg("n"));
  m.def("common_incident", [](const std::vector<Signature>& sigs, std::uint64_t seed) {
    std::vector<GenericSignature> gens;
    for (const auto& s : sigs) {
      auto g = to_generic(s);
      if (!g) throw py::value_error("common_incident needs generic signatures");
      gens.push_back(*g);
    }
    return common_incident(gens, seed);
  }, py::arg("signatures"), py::arg("seed") = 0);
  m.def("nerve_homology", &nerve_homology, py::arg("n"), py::arg("max_codim"));
}
