#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nsg/dim3.hpp"
#include "nsg/factorization.hpp"
#include "nsg/fixtures.hpp"
#include "nsg/report.hpp"

namespace py = pybind11;
using nsg::Int;
using nsg::NumericalSemigroup;

namespace {

py::tuple as_tuple(const nsg::Factorization& x) {
  py::tuple t(x.dimension());
  for (std::size_t i = 0; i < x.dimension(); ++i) t[i] = x[i];
  return t;
}

py::list as_list(const std::vector<nsg::Factorization>& zs) {
  py::list out;
  for (const auto& z : zs) out.append(as_tuple(z));
  return out;
}

// JSON text to plain Python dicts and lists.
py::object from_json(const nsg::Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Factorization invariants of numerical semigroups";

  static py::exception<nsg::Error> nsg_error(m, "NsgError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const nsg::Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(nsg_error)(py::str(e.what()));
      exc.attr("kind") = std::string(nsg::to_string(e.kind()));
      PyErr_SetObject(nsg_error.ptr(), exc.ptr());
    }
  });

  py::class_<NumericalSemigroup>(m, "NumericalSemigroup")
      .def(py::init([](const std::vector<Int>& gens, Int max_generator) {
             return NumericalSemigroup(gens, max_generator);
           }),
           py::arg("generators"), py::arg("max_generator") = nsg::kDefaultMaxGenerator)
      .def_property_readonly("generators", &NumericalSemigroup::generators)
      .def_property_readonly("embedding_dimension", &NumericalSemigroup::embedding_dimension)
      .def_property_readonly("multiplicity", &NumericalSemigroup::multiplicity)
      .def("__contains__", &NumericalSemigroup::contains)
      .def("contains", &NumericalSemigroup::contains)
      .def("__eq__", [](const NumericalSemigroup& a, const NumericalSemigroup& b) { return a == b; })
      .def("__repr__", [](const NumericalSemigroup& s) {
        std::string out = "NumericalSemigroup([";
        for (std::size_t i = 0; i < s.generators().size(); ++i) {
          out += (i ? ", " : "") + std::to_string(s.generators()[i]);
        }
        return out + "])";
      });

  m.def("apery_set", &nsg::apery_set, py::arg("s"), py::arg("m"));
  m.def("frobenius", &nsg::frobenius);
  m.def("genus", &nsg::genus);
  m.def("gaps", &nsg::gaps);
  m.def("pseudo_frobenius", &nsg::pseudo_frobenius);
  m.def("symmetry_class", [](const NumericalSemigroup& s) {
    return std::string(nsg::to_string(nsg::symmetry_class(s)));
  });

  m.def("factorizations", [](const NumericalSemigroup& s, Int x) {
    return as_list(nsg::factorizations(s, x));
  });
  m.def("length_set", &nsg::length_set);
  m.def("r_classes", [](const NumericalSemigroup& s, Int x) {
    py::list out;
    for (const auto& cls : nsg::r_classes(s, x)) out.append(as_list(cls));
    return out;
  });
  m.def("mu_of_element", &nsg::mu_of_element);
  m.def("catenary_of_element", &nsg::catenary_of_element);
  m.def("betti_elements", &nsg::betti_elements, py::arg("s"), py::arg("scan_bound") = std::nullopt);
  m.def("delta_max", &nsg::delta_max);
  m.def("catenary", &nsg::catenary);
  m.def("delta_set", &nsg::delta_set_scan, py::arg("s"), py::arg("stop") = std::nullopt);

  m.def("dim3_params", [](const NumericalSemigroup& s) {
    const auto d = nsg::dim3_params(s);
    py::dict out;
    out["c"] = d.c;
    py::dict r;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        if (i != j) r[py::str("r" + std::to_string(i + 1) + std::to_string(j + 1))] = d.r[i][j];
      }
    }
    out["r"] = r;
    out["symmetric"] = d.symmetric;
    out["betti_count"] = d.betti_count;
    return out;
  });
  m.def("characterize", [](const NumericalSemigroup& s) {
    const auto c = nsg::characterize(s);
    py::dict out;
    out["family"] = std::string(nsg::to_string(c.family));
    out["betti_count"] = c.betti_count;
    out["delta_max"] = c.closed_form_delta_max;
    out["catenary"] = c.closed_form_catenary;
    out["minimal_catenary"] = c.minimal_catenary;
    out["witness"] = c.witness;
    return out;
  });
  m.def(
      "report",
      [](const NumericalSemigroup& s, std::optional<Int> scan_bound) {
        return from_json(nsg::to_json(nsg::build_report(s, scan_bound)));
      },
      py::arg("s"), py::arg("scan_bound") = std::nullopt,
      "Same content as `nsg invariants --json`.");
  m.def(
      "run_examples", [](bool inject_failure) {
        return from_json(nsg::to_json(nsg::run_example_fixtures(inject_failure)));
      },
      py::arg("inject_failure") = false);
}
