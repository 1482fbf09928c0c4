#include "fcperm/report.hpp"

#include <algorithm>
#include <sstream>

#include "fcperm/patterns.hpp"
#include "fcperm/text.hpp"

namespace fcperm {

using nlohmann::json;

AnalysisReport analyze(const Permutation& w) {
  AnalysisReport r;
  r.permutation = format_permutation(w, true);
  r.length = length(w);
  r.descents = descents(w);
  r.support = support(w);
  r.fully_commutative = is_fully_commutative(w);
  r.boolean = is_boolean(w);
  r.canonical_word = format_letters(canonical_word(w).letters);
  const RskResult t = rsk(w);
  r.p_tableau = format_tableau(t.p);
  r.q_tableau = format_tableau(t.q);
  r.row2 = t.p.row(2);
  if (r.fully_commutative) {
    const auto core = boolean_core(w);
    r.core = format_permutation(core.core, true);
    r.core_word = format_letters(core.core_word.letters);
    const auto c = classify(w);
    r.crowded = c.crowded;
    r.witness = c.witness;
    r.minimality = is_minimal_crowded_direct(w);
  }
  return r;
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "permutation:        " << r.permutation << '\n'
      << "length:             " << r.length << '\n'
      << "descents:           " << format_int_set(r.descents) << '\n'
      << "support:            " << format_int_set(r.support) << '\n'
      << "reduced word:       " << (r.canonical_word.empty() ? "e" : r.canonical_word) << '\n'
      << "fully commutative:  " << (r.fully_commutative ? "yes" : "no") << '\n'
      << "boolean:            " << (r.boolean ? "yes" : "no") << '\n';
  if (r.core) {
    out << "boolean core:       " << *r.core << " = ["
        << (r.core_word->empty() ? "e" : *r.core_word) << "]\n";
  }
  out << "P:                  " << r.p_tableau << '\n'
      << "Q:                  " << r.q_tableau << '\n'
      << "Row2(P):            " << format_int_set(r.row2) << '\n';
  if (r.crowded) {
    out << "classification:     " << (*r.crowded ? "crowded" : "uncrowded");
    if (r.witness) {
      out << " (x=" << r.witness->x << ", y=" << r.witness->y
          << ", window " << format_int_set(r.witness->window) << ")";
    }
    out << '\n';
  }
  if (r.minimality) {
    const auto& m = *r.minimality;
    out << "minimal crowded:    " << (m.minimal() ? "yes" : "no") << " [a=" << m.descents_alternate
        << " b=" << m.peaks_crowded << " c=" << m.fixes_outside
        << " d=" << m.pattern_415263_consecutive << " e=" << m.windows_match << "]\n";
  }
  return out.str();
}

void to_json(json& j, const CrowdedWitness& w) {
  j = json{{"x", w.x}, {"y", w.y}, {"window", w.window}};
}

void from_json(const json& j, CrowdedWitness& w) {
  j.at("x").get_to(w.x);
  j.at("y").get_to(w.y);
  j.at("window").get_to(w.window);
}

void to_json(json& j, const MinimalityReport& r) {
  j = json{{"minimal", r.minimal()},
           {"d", r.d},
           {"k", r.k},
           {"row2", r.row2},
           {"conditions",
            {{"a_descents_alternate", r.descents_alternate},
             {"b_peaks_crowded", r.peaks_crowded},
             {"c_fixes_outside", r.fixes_outside},
             {"d_415263_all_consecutive", r.pattern_415263_consecutive},
             {"e_windows_415263_or_315264", r.windows_match}}}};
}

void from_json(const json& j, MinimalityReport& r) {
  j.at("d").get_to(r.d);
  j.at("k").get_to(r.k);
  j.at("row2").get_to(r.row2);
  const auto& c = j.at("conditions");
  c.at("a_descents_alternate").get_to(r.descents_alternate);
  c.at("b_peaks_crowded").get_to(r.peaks_crowded);
  c.at("c_fixes_outside").get_to(r.fixes_outside);
  c.at("d_415263_all_consecutive").get_to(r.pattern_415263_consecutive);
  c.at("e_windows_415263_or_315264").get_to(r.windows_match);
}

void to_json(json& j, const Tableau& t) { j = json{{"rows", t.rows}}; }

void from_json(const json& j, Tableau& t) { j.at("rows").get_to(t.rows); }

namespace {

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
void optional_from(const json& j, const char* key, std::optional<T>& v) {
  if (j.at(key).is_null()) {
    v.reset();
  } else {
    v = j.at(key).get<T>();
  }
}

}  // namespace

void to_json(json& j, const AnalysisReport& r) {
  j = json{{"permutation", r.permutation},
           {"length", r.length},
           {"descents", r.descents},
           {"support", r.support},
           {"fully_commutative", r.fully_commutative},
           {"boolean", r.boolean},
           {"reduced_word", r.canonical_word},
           {"core", optional_json(r.core)},
           {"core_word", optional_json(r.core_word)},
           {"p_tableau", r.p_tableau},
           {"q_tableau", r.q_tableau},
           {"row2", r.row2},
           {"crowded", optional_json(r.crowded)},
           {"witness", optional_json(r.witness)},
           {"minimal_crowded", optional_json(r.minimality)}};
  if (r.crowded) j["classification"] = *r.crowded ? "crowded" : "uncrowded";
}

void from_json(const json& j, AnalysisReport& r) {
  j.at("permutation").get_to(r.permutation);
  j.at("length").get_to(r.length);
  j.at("descents").get_to(r.descents);
  j.at("support").get_to(r.support);
  j.at("fully_commutative").get_to(r.fully_commutative);
  j.at("boolean").get_to(r.boolean);
  j.at("reduced_word").get_to(r.canonical_word);
  optional_from(j, "core", r.core);
  optional_from(j, "core_word", r.core_word);
  j.at("p_tableau").get_to(r.p_tableau);
  j.at("q_tableau").get_to(r.q_tableau);
  j.at("row2").get_to(r.row2);
  optional_from(j, "crowded", r.crowded);
  optional_from(j, "witness", r.witness);
  optional_from(j, "minimal_crowded", r.minimality);
}

json classification_json(const Classification& c) {
  return json{{"verdict", c.crowded ? "crowded" : "uncrowded"},
              {"row2", c.row2},
              {"witness", optional_json(c.witness)}};
}

json transition_json(const TransitionReport& r) {
  return json{{"v", format_permutation(r.v, true)},
              {"w", format_permutation(r.w, true)},
              {"i", r.i},
              {"M", r.max_prefix},
              {"m", r.min_suffix},
              {"pattern3142_positions", r.pattern3142},
              {"a_run", r.a_run},
              {"e_run", r.e_run},
              {"e", r.e},
              {"e_seq", r.e_seq},
              {"t_seq", r.t_seq},
              {"r", r.r},
              {"interval", {r.interval_low, r.interval_high}},
              {"row2_v", r.row2_v},
              {"row2_w", r.row2_w},
              {"interval_row2_w", r.interval_row2_w},
              {"witness", r.witness}};
}

PosetEdgeList edge_list(const FcPoset& poset) {
  PosetEdgeList out;
  out.n = poset.degree();
  for (const auto& w : poset.elements()) out.nodes.push_back(format_permutation(w, true));
  for (const auto& e : poset.edges()) {
    out.edges.push_back({out.nodes[static_cast<std::size_t>(e.lower)],
                         out.nodes[static_cast<std::size_t>(e.upper)], e.index});
  }
  return out;
}

void to_json(json& j, const PosetEdgeList& e) {
  json edges = json::array();
  for (const auto& edge : e.edges) edges.push_back(json::array({edge.lower, edge.upper, edge.index}));
  j = json{{"n", e.n}, {"nodes", e.nodes}, {"edges", std::move(edges)}};
}

void from_json(const json& j, PosetEdgeList& e) {
  j.at("n").get_to(e.n);
  j.at("nodes").get_to(e.nodes);
  e.edges.clear();
  for (const auto& edge : j.at("edges")) {
    e.edges.push_back({edge.at(0).get<std::string>(), edge.at(1).get<std::string>(), edge.at(2).get<int>()});
  }
}

std::string heap_dot(const Heap& heap) {
  std::ostringstream out;
  out << "digraph heap {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (int x = 1; x <= heap.size(); ++x) {
    out << "  n" << x << " [label=\"" << heap.label(x) << " (" << x << ")\"];\n";
  }
  for (auto [lo, hi] : heap.covers()) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

std::string poset_dot(const FcPoset& poset) {
  const auto frontier = uncrowded_frontier(poset);
  std::ostringstream out;
  out << "digraph fc_weak_order {\n  rankdir=BT;\n  node [shape=box, style=filled];\n";
  for (const auto& w : poset.elements()) {
    const bool crowded = is_crowded(w);
    const bool minimal = std::binary_search(frontier.minimal_crowded.begin(),
                                            frontier.minimal_crowded.end(), w);
    out << "  \"" << format_permutation(w, true) << "\" [fillcolor="
        << (crowded ? "salmon" : "palegreen");
    if (minimal) out << ", penwidth=3, color=red";
    out << "];\n";
  }
  for (const auto& e : poset.edges()) {
    out << "  \"" << format_permutation(poset.elements()[static_cast<std::size_t>(e.lower)], true)
        << "\" -> \"" << format_permutation(poset.elements()[static_cast<std::size_t>(e.upper)], true)
        << "\" [label=" << e.index << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace fcperm
