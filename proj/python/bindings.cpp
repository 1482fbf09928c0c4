#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fcperm/crowding.hpp"
#include "fcperm/enumerate.hpp"
#include "fcperm/errors.hpp"
#include "fcperm/patterns.hpp"
#include "fcperm/report.hpp"
#include "fcperm/rsk.hpp"
#include "fcperm/text.hpp"
#include "fcperm/verify.hpp"
#include "fcperm/weak_order.hpp"
#include "fcperm/words.hpp"

namespace py = pybind11;
using namespace fcperm;

namespace {

// Tableaux and words cross the boundary as plain lists.
py::dict tableau_pair(const RskResult& r) {
  py::dict d;
  d["p"] = r.p.rows;
  d["q"] = r.q.rows;
  return d;
}

std::vector<std::vector<int>> words_as_lists(const std::vector<ReducedWord>& words) {
  std::vector<std::vector<int>> out;
  for (const auto& u : words) out.push_back(u.letters);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fully commutative permutations: RSK, heaps, boolean cores, crowding.";

  py::register_exception<LimitExceeded>(m, "LimitExceeded", PyExc_ValueError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_AssertionError);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<std::vector<int>>())
      .def_static("parse", &parse_permutation)
      .def_static("identity", &Permutation::identity)
      .def_property_readonly("degree", &Permutation::degree)
      .def("one_line", [](const Permutation& w) { return std::vector<int>(w.one_line().begin(), w.one_line().end()); })
      .def("__call__", &Permutation::at)
      .def("__str__", [](const Permutation& w) { return format_permutation(w, true); })
      .def("__repr__", [](const Permutation& w) { return "Permutation('" + format_permutation(w, true) + "')"; })
      .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
      .def("__lt__", [](const Permutation& a, const Permutation& b) { return a < b; })
      .def("__hash__", [](const Permutation& w) { return std::hash<Permutation>{}(w); });

  m.def("length", &length);
  m.def("inverse", &inverse);
  m.def("descents", &descents);
  m.def("support", &support);
  m.def("multiply_right", [](const Permutation& w, int i) { return multiply_right(w, SimpleReflection{i}); });

  m.def("is_fully_commutative", &is_fully_commutative);
  m.def("is_boolean", &is_boolean);
  m.def("avoids", &avoids);
  m.def("contains_pattern", [](const Permutation& w, const Permutation& p) -> std::optional<std::vector<int>> {
    if (auto occ = contains_pattern(w, p)) return occ->positions;
    return std::nullopt;
  }, "Positions of the lexicographically least occurrence, or None.");

  m.def("reduced_words", [](const Permutation& w) { return words_as_lists(all_reduced_words(w)); });
  m.def("canonical_word", [](const Permutation& w) { return canonical_word(w).letters; });
  m.def("evaluate_word", [](const std::vector<int>& letters, int n) { return evaluate_word(letters, n); });
  m.def("linear_extensions", [](const std::vector<int>& word) {
    return words_as_lists(labeled_linear_extensions(build_heap(ReducedWord{word})));
  }, "Words read off the linear extensions of the heap of a reduced word.");
  m.def("boolean_core", [](const Permutation& w) {
    const auto d = boolean_core(w);
    py::dict out;
    out["core"] = d.core;
    out["remainder"] = d.remainder;
    out["core_word"] = d.core_word.letters;
    out["remainder_word"] = d.remainder_word.letters;
    return out;
  });

  m.def("rsk", [](const Permutation& w) { return tableau_pair(rsk(w)); });
  m.def("row2", &row2);
  m.def("lis_ending_at", &lis_ending_at);

  m.def("is_uncrowded_set", [](const std::vector<int>& s) { return is_uncrowded_set(s); });
  m.def("find_crowded_window", [](const std::vector<int>& s) -> std::optional<py::dict> {
    const auto wit = find_crowded_window(s);
    if (!wit) return std::nullopt;
    py::dict d;
    d["x"] = wit->x;
    d["y"] = wit->y;
    d["window"] = wit->window;
    return d;
  });
  m.def("minimal_crowded_subset", [](const std::vector<int>& s) { return minimal_crowded_subset(s).elements; });
  m.def("is_crowded", &is_crowded);
  m.def("is_minimal_crowded", [](const Permutation& w) { return is_minimal_crowded_direct(w).minimal(); });

  m.def("analyze_json", [](const Permutation& w) { return nlohmann::json(analyze(w)).dump(); });
  m.def("transition_json", [](const Permutation& v, int i) { return transition_json(analyze_transition(v, i)).dump(); });
  m.def("poset_json", [](int n) { return nlohmann::json(edge_list(build_fc_poset(n))).dump(); });
  m.def("poset_dot", [](int n) { return poset_dot(build_fc_poset(n)); });
  m.def("heap_dot", [](const std::vector<int>& word) { return heap_dot(build_heap(ReducedWord{word})); });

  m.def("enumerate", [](int n, const std::string& filter) { return collect_matching(n, parse_filter(filter)); },
        py::arg("n"), py::arg("filter") = "all");
  m.def("available_checks", [] {
    std::vector<std::string> ids;
    for (const auto& c : available_checks()) ids.push_back(c.id);
    return ids;
  });
  m.def("run_check", [](const std::string& id, int n) {
    const auto r = run_check(id, n);
    py::dict d;
    d["id"] = r.id;
    d["n"] = r.n;
    d["passed"] = r.passed;
    d["cases"] = r.cases;
    d["counterexample"] = r.counterexample;
    d["detail"] = r.detail;
    return d;
  });
}
