#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "starxor/experiments.hpp"
#include "starxor/modifiers.hpp"
#include "starxor/monsters.hpp"
#include "starxor/tableaux.hpp"
#include "starxor/witness.hpp"

namespace py = pybind11;
using namespace starxor;

namespace {

// Reports cross the boundary as JSON text; the python side decodes them.
std::string dump(const ExperimentReport& r) { return r.to_json().dump(); }

py::tuple as_tuple(DfaPair p) {
  std::vector<std::string> labels;
  for (const auto& l : p.letters) labels.push_back(l.label());
  return py::make_tuple(std::move(p.first), std::move(p.second), std::move(labels));
}

ExperimentOptions options(unsigned jobs, std::uint64_t cap_states, std::uint64_t cap_letters) {
  ExperimentOptions o;
  o.jobs = jobs;
  o.cap_states = cap_states;
  o.cap_letters = cap_letters;
  return o;
}

}  // namespace

PYBIND11_MODULE(_starxor, m) {
  m.doc() = "State complexity of the star of symmetric difference";

  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);
  py::register_exception<DfaFormatError>(m, "DfaFormatError", PyExc_ValueError);

  py::class_<Transformation>(m, "Transformation")
      .def(py::init<std::vector<State>>())
      .def_static("identity", &Transformation::identity)
      .def_static("unrank", &Transformation::unrank)
      .def_property_readonly("images", &Transformation::images)
      .def("rank", &Transformation::rank)
      .def("__call__", &Transformation::apply)
      .def("__eq__", [](const Transformation& a, const Transformation& b) { return a == b; })
      .def("__repr__", &Transformation::to_string);

  py::class_<Dfa>(m, "Dfa")
      .def(py::init([](std::size_t n, std::size_t k, State initial, std::vector<State> finals,
                       std::vector<State> delta, std::vector<std::string> labels) {
             return Dfa(n, k, initial, finals, std::move(delta), std::move(labels));
           }),
           py::arg("state_count"), py::arg("letter_count"), py::arg("initial"), py::arg("finals"),
           py::arg("delta"), py::arg("letter_labels") = std::vector<std::string>{})
      .def_property_readonly("state_count", &Dfa::state_count)
      .def_property_readonly("letter_count", &Dfa::letter_count)
      .def_property_readonly("initial", &Dfa::initial)
      .def_property_readonly("finals", &Dfa::finals)
      .def_property_readonly("letter_labels", &Dfa::letter_labels)
      .def("next", &Dfa::next)
      .def("accepts", [](const Dfa& a, const Word& w) { return accepts(a, w); })
      .def("to_json", [](const Dfa& a) { return export_json(a); })
      .def_static("from_json", [](const std::string& s) { return import_json(s); })
      .def("to_dot", [](const Dfa& a) { return export_dot(a); })
      .def("__eq__", [](const Dfa& a, const Dfa& b) { return a == b; });

  m.def("minimize", &minimize);
  m.def("minimal_state_count", &minimal_state_count);
  m.def("is_equivalent", &is_equivalent);
  m.def("preimage_by_renaming", [](const Dfa& a, const std::vector<Letter>& phi) {
    return preimage_by_renaming(a, phi);
  });

  m.def("monster1", &monster1, py::arg("n"), py::arg("finals"),
        py::arg("letter_cap") = kDefaultLetterCap);
  m.def(
      "monster2",
      [](std::size_t n1, std::vector<State> f1, std::size_t n2, std::vector<State> f2,
         std::uint64_t cap) { return as_tuple(monster2({{n1, n2}, {f1, f2}}, cap)); },
      py::arg("n1"), py::arg("f1"), py::arg("n2"), py::arg("f2"),
      py::arg("letter_cap") = kDefaultLetterCap);
  m.def("witness_pair", [](std::size_t n1, std::size_t n2) { return as_tuple(witness_pair(n1, n2)); });
  m.def("sigma_prime_names", [](std::size_t n1, std::size_t n2) { return sigma_prime(n1, n2).names; });

  m.def("star", [](const Dfa& a) { return star_modifier(a).dfa; });
  m.def("xor", [](const Dfa& a, const Dfa& b) { return xor_modifier(a, b).dfa; });
  m.def(
      "stx", [](const Dfa& a, const Dfa& b, std::uint64_t cap) {
        return stx(a, b, {Materialize::accessible, cap}).dfa;
      },
      py::arg("a"), py::arg("b"), py::arg("state_cap") = kDefaultStateCap);
  m.def("minimized_stx_size", &minimized_stx_size, py::arg("a"), py::arg("b"),
        py::arg("state_cap") = kDefaultStateCap);

  m.def("count_rtf", &count_rtf);
  m.def("count_rtf_pinned", &count_rtf_pinned);
  m.def("predicted_complexity", &predicted_complexity);
  m.def("has_right_triangle", [](std::size_t n1, std::size_t n2, std::uint64_t cells) {
    return has_right_triangle(Tableau(n1, n2, cells));
  });
  m.def("saturate", [](std::size_t n1, std::size_t n2, std::uint64_t cells) {
    return saturate(Tableau(n1, n2, cells)).cells();
  });

  m.def(
      "cmd_sc_json",
      [](std::size_t n1, std::size_t n2, const std::string& method, unsigned jobs,
         std::uint64_t cap_states, std::uint64_t cap_letters) {
        py::gil_scoped_release release;
        return dump(cmd_sc(n1, n2, parse_method(method), options(jobs, cap_states, cap_letters)));
      },
      py::arg("n1"), py::arg("n2"), py::arg("method") = "all", py::arg("jobs") = 1,
      py::arg("cap_states") = kDefaultStateCap, py::arg("cap_letters") = kDefaultLetterCap);
  m.def(
      "cmd_sweep_finals_json",
      [](std::size_t n1, std::size_t n2, unsigned jobs) {
        py::gil_scoped_release release;
        return dump(cmd_sweep_finals(n1, n2, options(jobs, kDefaultStateCap, kDefaultLetterCap)));
      },
      py::arg("n1"), py::arg("n2"), py::arg("jobs") = 1);
  m.def("cmd_verify_figures_json", [] { return dump(cmd_verify_figures()); });
  m.def(
      "render_export",
      [](const std::string& what, const std::string& format, std::size_t n1, std::size_t n2,
         std::size_t max_size) { return render_export({what, format, n1, n2, max_size}); },
      py::arg("what"), py::arg("format"), py::arg("n1") = 2, py::arg("n2") = 2,
      py::arg("max_size") = 4);
}
