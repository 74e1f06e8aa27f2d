#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "clifftype/core.hpp"
#include "clifftype/group.hpp"
#include "clifftype/oracle.hpp"
#include "clifftype/rep.hpp"

namespace py = pybind11;
using namespace cliff;

namespace {

std::vector<std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>>> gammas_as_lists(
    const Signature& sig) {
  std::vector<std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>>> out;
  for (const auto& g : build_gammas(sig)) {
    std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> rows;
    for (int r = 0; r < g.dim(); ++r) {
      std::vector<std::pair<std::int64_t, std::int64_t>> row;
      for (int c = 0; c < g.dim(); ++c) row.emplace_back(g.at(r, c).re, g.at(r, c).im);
      rows.push_back(std::move(row));
    }
    out.push_back(std::move(rows));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite Clifford group representation types";

  py::register_exception<cap_error>(m, "CapError");

  py::enum_<GroupKind>(m, "GroupKind")
      .value("PIN", GroupKind::Pin)
      .value("SPIN", GroupKind::Spin);

  py::class_<Signature>(m, "Signature")
      .def(py::init([](int p, int q) { return make_signature(p, q); }), py::arg("p"), py::arg("q"))
      .def_readonly("p", &Signature::p)
      .def_readonly("q", &Signature::q)
      .def_property_readonly("n", &Signature::n)
      .def("__repr__", [](const Signature& s) {
        return "Signature(" + std::to_string(s.p) + ", " + std::to_string(s.q) + ")";
      });

  py::class_<SignedMonomial>(m, "SignedMonomial")
      .def(py::init<int, std::uint32_t>(), py::arg("sign") = 1, py::arg("mask") = 0)
      .def_readonly("sign", &SignedMonomial::sign)
      .def_readonly("mask", &SignedMonomial::mask)
      .def("__eq__", [](const SignedMonomial& a, const SignedMonomial& b) { return a == b; })
      .def("__repr__", [](const SignedMonomial& m) {
        return std::string(m.sign < 0 ? "-" : "+") + "monomial(mask=" + std::to_string(m.mask) + ")";
      });

  py::class_<TypeValue>(m, "TypeValue")
      .def_readonly("value", &TypeValue::value)
      .def_property_readonly("label", &TypeValue::label)
      .def("__int__", [](const TypeValue& t) { return t.value; })
      .def("__eq__", [](const TypeValue& a, const TypeValue& b) { return a == b; })
      .def("__repr__", [](const TypeValue& t) {
        return "TypeValue(" + std::to_string(t.value) + ", " + t.label() + ")";
      });

  py::class_<SpinorIrrepInfo>(m, "SpinorIrrepInfo")
      .def_readonly("num_one_dim", &SpinorIrrepInfo::num_one_dim)
      .def_readonly("num_spinor", &SpinorIrrepInfo::num_spinor)
      .def_readonly("spinor_dim", &SpinorIrrepInfo::spinor_dim)
      .def_readonly("group_order", &SpinorIrrepInfo::group_order)
      .def_readonly("class_count", &SpinorIrrepInfo::class_count);

  py::class_<ConjugacyClassReport>(m, "ConjugacyClassReport")
      .def_readonly("class_count", &ConjugacyClassReport::class_count)
      .def_readonly("class_sizes", &ConjugacyClassReport::class_sizes)
      .def_readonly("central_count", &ConjugacyClassReport::central_count);

  m.def("metric_sign", &metric_sign);
  m.def("mono_mul", &mono_mul);
  m.def("mono_square_sign", &mono_square_sign);
  m.def("grade", &grade);
  m.def("commutes", &commutes);

  m.def("group_order",
        [](const Signature& s, GroupKind k) { return describe_group(s, k).order; });
  m.def("enumerate_group", &enumerate_group);
  m.def("center", &center);
  m.def("commutator_subgroup", &commutator_subgroup);
  m.def("abelianization_order", &abelianization_order);
  m.def("conjugacy_classes_brute", &conjugacy_classes_brute);
  m.def("conjugacy_class_count_structural", &conjugacy_class_count_structural);

  m.def("burnside_spinor_solve", &burnside_spinor_solve);
  m.def("fs_indicator_brute", &fs_indicator_brute);
  m.def("fs_indicator_closed",
        [](long long p, long long q, GroupKind k) { return fs_indicator_closed(p, q, k); });
  m.def("check_periodicity", &check_periodicity);

  m.def("build_gammas", &gammas_as_lists,
        "Gamma matrices as nested lists of (re, im) Gaussian-integer entries");
  m.def("fs_sum_matrix", [](const Signature& s, GroupKind k) {
    Rational r = fs_sum_matrix(s, k);
    return std::make_pair(r.num, r.den);
  });
  m.def("character_norm", &character_norm);
  m.def("constituent_count", &constituent_count);
}
