/* Copyright 2026 The trico Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "trico/additive.hpp"
#include "trico/cli.hpp"
#include "trico/codes.hpp"
#include "trico/equiv.hpp"
#include "trico/error.hpp"
#include "trico/serialize.hpp"

namespace py = pybind11;
using namespace trico;

namespace {

using PyRing = std::shared_ptr<ChainRing>;

PyRing mutable_ring(const RingPtr& r) { return std::const_pointer_cast<ChainRing>(r); }

py::object json_to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::string py_to_text(const py::object& o) {
  if (py::isinstance<py::str>(o)) return o.cast<std::string>();
  return py::module_::import("json").attr("dumps")(o).cast<std::string>();
}

Element to_element(const PyRing& R, const py::object& o) {
  if (py::isinstance<Element>(o)) return o.cast<Element>();
  if (py::isinstance<py::int_>(o)) return R->from_int(o.cast<std::int64_t>());
  return parse_element(R, py_to_text(o));
}

RingPoly to_poly(const PyRing& R, const py::object& o) { return parse_poly(R, py_to_text(o)); }

Binomial to_binomial(const PyRing& R, const py::object& o) {
  if (py::isinstance<Binomial>(o)) return o.cast<Binomial>();
  return parse_binomial(R, py_to_text(o));
}

py::object certificate(const std::optional<EquivalenceCertificate>& c) {
  if (!c) return py::none();
  return py::make_tuple(c->alpha, c->l);
}

}  // namespace

PYBIND11_MODULE(_trico, m) {
  m.doc() = "Finite chain ring arithmetic and classification of binomials and polycyclic codes";

  auto base = py::register_exception<Error>(m, "TricoError");
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<BoundExceeded>(m, "BoundExceeded", base.ptr());
  py::register_exception<CrossDegreeRefusal>(m, "CrossDegreeRefusal", base.ptr());
  py::register_exception<NotAUnit>(m, "NotAUnit", base.ptr());
  py::register_exception<RingMismatch>(m, "RingMismatch", base.ptr());

  py::class_<ChainRing, PyRing>(m, "Ring")
      .def(py::init([](const std::string& spec) { return mutable_ring(ChainRing::parse(spec)); }), py::arg("spec"))
      .def_property_readonly("spec", &ChainRing::spec)
      .def_property_readonly("p", &ChainRing::p)
      .def_property_readonly("m", &ChainRing::m)
      .def_property_readonly("r", &ChainRing::r)
      .def_property_readonly("e", &ChainRing::e)
      .def_property_readonly("t", &ChainRing::t)
      .def_property_readonly("s", &ChainRing::s)
      .def_property_readonly("q", &ChainRing::q)
      .def_property_readonly("characteristic", &ChainRing::characteristic)
      .def_property_readonly("cardinality", &ChainRing::cardinality)
      .def_property_readonly("unit_count", &ChainRing::unit_count)
      .def("element", [](const PyRing& R, const py::object& o) { return to_element(R, o); }, py::arg("value"))
      .def("binomial", [](const PyRing& R, const py::object& o) { return to_binomial(R, o); }, py::arg("text"))
      .def("one", &ChainRing::one)
      .def("zero", &ChainRing::zero)
      .def("gamma", &ChainRing::gamma)
      .def("omega", &ChainRing::omega)
      .def("teichmuller_generator", &ChainRing::teichmuller_generator)
      .def("units", [](const PyRing& R, std::uint64_t bound) { return R->units(bound); },
           py::arg("bound") = ChainRing::kDefaultUnitBound)
      .def("unit_decomposition", [](const PyRing& R) { return json_to_py(decomposition_to_json(R->unit_decomposition())); })
      .def("__eq__", [](const PyRing& a, const PyRing& b) { return a->same_as(*b); })
      .def("__hash__", [](const PyRing& R) { return py::hash(py::str(R->spec())); })
      .def("__repr__", [](const PyRing& R) { return "Ring('" + R->spec() + "')"; });

  py::class_<Element>(m, "Element")
      .def_property_readonly("ring", [](const Element& a) { return mutable_ring(a.ring_ptr()); })
      .def("__add__", [](const Element& a, const py::object& b) { return a + to_element(mutable_ring(a.ring_ptr()), b); })
      .def("__radd__", [](const Element& a, const py::object& b) { return to_element(mutable_ring(a.ring_ptr()), b) + a; })
      .def("__sub__", [](const Element& a, const py::object& b) { return a - to_element(mutable_ring(a.ring_ptr()), b); })
      .def("__rsub__", [](const Element& a, const py::object& b) { return to_element(mutable_ring(a.ring_ptr()), b) - a; })
      .def("__mul__", [](const Element& a, const py::object& b) { return a * to_element(mutable_ring(a.ring_ptr()), b); })
      .def("__rmul__", [](const Element& a, const py::object& b) { return to_element(mutable_ring(a.ring_ptr()), b) * a; })
      .def("__neg__", [](const Element& a) { return -a; })
      .def("__pow__", [](const Element& a, std::int64_t e) { return a.ring().pow_signed(a, e); })
      .def("__eq__", [](const Element& a, const Element& b) { return a == b; })
      .def("__hash__", [](const Element& a) { return a.ring().encode(a); })
      .def("inverse", &Element::inverse)
      .def("is_unit", &Element::is_unit)
      .def("is_zero", &Element::is_zero)
      .def("valuation", [](const Element& a) { return a.ring().valuation(a); })
      .def("order", [](const Element& a) { return a.ring().element_order(a); })
      .def("to_json", [](const Element& a) { return json_to_py(element_to_json(a)); })
      .def("__str__", &format_element)
      .def("__repr__", [](const Element& a) { return "Element(" + format_element(a) + ")"; });

  py::class_<Binomial>(m, "Binomial")
      .def(py::init<unsigned, Element, Element>(), py::arg("k"), py::arg("b1"), py::arg("b0"))
      .def_property_readonly("k", &Binomial::k)
      .def_property_readonly("b1", &Binomial::b1)
      .def_property_readonly("b0", &Binomial::b0)
      .def("__mul__", &star)
      .def("__pow__", &star_pow)
      .def("__eq__", [](const Binomial& a, const Binomial& b) { return a == b; })
      .def("__str__", &format_binomial)
      .def("__repr__", [](const Binomial& b) { return "Binomial('" + format_binomial(b) + "')"; });

  py::class_<PolycyclicCode>(m, "Code")
      .def_property_readonly("length", &PolycyclicCode::length)
      .def_property_readonly("cardinality", &code_cardinality)
      .def("lambda_profile", &PolycyclicCode::lambda_profile)
      .def("rows", [](const PolycyclicCode& c) {
        py::list out;
        for (const auto& row : c.rows()) out.append(py::make_tuple(row.lambda, format_poly(row.g)));
        return out;
      })
      .def("contains", [](const PolycyclicCode& c, const py::object& h) {
        return code_membership(c, to_poly(mutable_ring(c.ring_ptr()), h));
      })
      .def("issubset", &code_subset)
      .def("principal_generator", [](const PolycyclicCode& c) { return format_poly(principal_generator(c)); })
      .def("min_distance", &min_distance, py::arg("bound") = std::uint64_t{1} << 22)
      .def("violations", &standard_form_violations)
      .def("to_json", [](const PolycyclicCode& c) { return json_to_py(code_to_json(c)); })
      .def_static("from_json", [](const py::object& o) { return code_from_json(Json::parse(py_to_text(o))); })
      .def("__eq__", [](const PolycyclicCode& a, const PolycyclicCode& b) { return a == b; })
      .def("__repr__", [](const PolycyclicCode& c) { return "Code(" + code_to_json(c).dump() + ")"; });

  m.def("standard_form", [](const PyRing& R, const py::object& modulus, const std::vector<py::object>& gens) {
    std::vector<RingPoly> g;
    for (const auto& x : gens) g.push_back(to_poly(R, x));
    return standard_form(to_poly(R, modulus), g);
  }, py::arg("ring"), py::arg("modulus"), py::arg("gens"));
  m.def("enumerate_codes", [](const PyRing& R, const py::object& modulus) {
    return enumerate_codes_squarefree(to_poly(R, modulus));
  }, py::arg("ring"), py::arg("modulus"));

  m.def("kernel_size", [](const PyRing& R, unsigned n, unsigned k) { return kernel_size(*R, n, k); });
  m.def("omega", [](const PyRing& R, unsigned n, unsigned k) { return omega(*R, n, k); });
  m.def("count_classes_k", [](const PyRing& R, unsigned n, unsigned k) { return count_classes_k(*R, n, k); },
        py::arg("ring"), py::arg("n"), py::arg("k"));
  m.def("count_classes_k_bruteforce",
        [](const PyRing& R, unsigned n, unsigned k) { return count_classes_k_bruteforce(R, n, k); });
  m.def("count_classes_total", [](const PyRing& R, unsigned n) { return count_classes_total(*R, n); },
        py::arg("ring"), py::arg("n"));
  m.def("class_representatives", [](const PyRing& R, unsigned n, unsigned k, std::uint64_t bound) {
    return class_representatives(R, n, k, bound);
  }, py::arg("ring"), py::arg("n"), py::arg("k"), py::arg("bound") = std::uint64_t{1} << 22);
  m.def("n_equivalent", [](const Binomial& a, const Binomial& b, unsigned n) {
    return certificate(n_equivalent(a, b, n));
  }, py::arg("a"), py::arg("b"), py::arg("n"));
  m.def("isometry_b1_classify", [](const Binomial& a, const Binomial& b, unsigned n) {
    return certificate(isometry_b1_classify(a, b, n));
  }, py::arg("a"), py::arg("b"), py::arg("n"));
  m.def("restricted_class_count", [](const PyRing& R, unsigned n, unsigned k, const std::string& group,
                                     const std::optional<std::string>& coefficients) {
    return restricted_class_count(n, k, UnitSubgroup::parse(R, coefficients.value_or(group)),
                                  UnitSubgroup::parse(R, group));
  }, py::arg("ring"), py::arg("n"), py::arg("k"), py::arg("group") = "T", py::arg("coefficients") = py::none());
  m.def("restricted_equivalent", [](const Binomial& a, const Binomial& b, unsigned n, const std::string& group) {
    const auto alpha = restricted_equivalent(a, b, n, UnitSubgroup::parse(a.ring_ptr(), group));
    return alpha ? py::cast(*alpha) : py::none();
  }, py::arg("a"), py::arg("b"), py::arg("n"), py::arg("group") = "T");

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs one CLI command; returns (exit_code, stdout, stderr).");
}
