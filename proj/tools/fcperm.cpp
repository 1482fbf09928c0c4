// fcperm: command-line front end for the fcperm library.
//
// Exit codes: 0 success, 1 a verification found a counterexample,
// 2 usage, parse or bound error.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

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

using namespace fcperm;
using nlohmann::json;

namespace {

struct Globals {
  bool json = false;
  bool count = false;
  int bound = Limits{}.max_degree;

  Limits limits() const {
    Limits l;
    l.max_degree = bound;
    return l;
  }
};

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_analyze(const Globals& g, const std::string& text) {
  const Permutation w = parse_permutation(text);
  check_degree(w.degree(), g.limits());
  const AnalysisReport r = analyze(w);
  if (g.json) {
    print_json(r);
  } else {
    std::cout << to_text(r);
  }
  return 0;
}

int cmd_enumerate(const Globals& g, int n, const std::string& filter, bool commas) {
  const Filter f = parse_filter(filter);
  if (g.count) {
    const long long total = count_matching(n, f, g.limits());
    if (g.json) {
      print_json({{"n", n}, {"filter", filter}, {"count", total}});
    } else {
      std::cout << total << '\n';
    }
    return 0;
  }
  if (g.json) {
    json list = json::array();
    enumerate(n, f, g.limits(), [&](const Permutation& w) { list.push_back(format_permutation(w, !commas)); });
    print_json({{"n", n}, {"filter", filter}, {"permutations", list}});
    return 0;
  }
  enumerate(n, f, g.limits(), [&](const Permutation& w) { std::cout << format_permutation(w, !commas) << '\n'; });
  return 0;
}

int cmd_verify(const Globals& g, int n, std::vector<std::string> ids, bool list) {
  if (list) {
    for (const auto& c : available_checks()) {
      std::cout << c.id << "  (default n=" << c.default_n << ")  " << c.summary << '\n';
    }
    return 0;
  }
  if (ids.empty()) throw PreconditionError("verify needs at least one check id (or --list)");
  if (ids.size() == 1 && ids.front() == "all") {
    ids.clear();
    for (const auto& c : available_checks()) ids.push_back(c.id);
  }
  bool all_passed = true;
  json results = json::array();
  for (const auto& id : ids) {
    const CheckResult r = run_check(id, n, g.limits());
    all_passed = all_passed && r.passed;
    if (g.json) {
      results.push_back({{"id", r.id},
                         {"n", r.n},
                         {"passed", r.passed},
                         {"cases", r.cases},
                         {"counterexample", r.passed ? json(nullptr) : json(r.counterexample)},
                         {"detail", r.detail}});
      continue;
    }
    std::cout << r.id << " n=" << r.n << ": " << (r.passed ? "PASS" : "FAIL") << " (" << r.cases
              << " cases)\n";
    if (!r.passed) std::cout << "  counterexample: " << r.counterexample << "\n  " << r.detail << '\n';
  }
  if (g.json) print_json(results);
  return all_passed ? 0 : 1;
}

int cmd_dot_heap(const Globals& g, const std::string& text, const std::string& word_text) {
  const Permutation w = parse_permutation(text);
  ReducedWord word;
  if (!word_text.empty()) {
    word.letters = parse_letters(word_text);
    if (!is_reduced(word.letters, w.degree()) || evaluate_word(word.letters, w.degree()) != w) {
      throw PreconditionError("--word " + word_text + " is not a reduced word of " + text);
    }
  } else if (is_fully_commutative(w)) {
    word = canonical_word(w);
  } else {
    throw PreconditionError(text + " is not fully commutative; its heap depends on the word, pass --word");
  }
  const Heap h = build_heap(word);
  if (g.json) {
    json covers = json::array();
    for (auto [lo, hi] : h.covers()) covers.push_back({lo, hi});
    print_json({{"word", format_letters(word.letters)}, {"labels", h.labels()}, {"covers", covers}});
  } else {
    std::cout << heap_dot(h);
  }
  return 0;
}

int cmd_dot_poset(const Globals& g, int n) {
  const FcPoset poset = build_fc_poset(n, g.limits());
  if (g.json) {
    print_json(edge_list(poset));
  } else {
    std::cout << poset_dot(poset);
  }
  return 0;
}

int cmd_rsk(const Globals& g, const std::string& text, bool trace) {
  const Permutation w = parse_permutation(text);
  const RskResult r = rsk(w);
  if (g.json) {
    json events = json::array();
    for (const auto& ev : r.trace.events) {
      json bumps = json::array();
      for (const auto& b : ev.bumps) bumps.push_back({{"row", b.row}, {"bumper", b.bumper}, {"bumped", b.bumped}});
      events.push_back({{"step", ev.step},
                        {"value", ev.value},
                        {"first_column", ev.first_column},
                        {"bumps", bumps},
                        {"final_row", ev.final_row},
                        {"final_column", ev.final_column}});
    }
    json out = {{"permutation", format_permutation(w, true)}, {"p", r.p}, {"q", r.q}, {"row2", r.p.row(2)}};
    if (trace) out["trace"] = events;
    print_json(out);
    return 0;
  }
  std::cout << "P: " << format_tableau(r.p) << "\nQ: " << format_tableau(r.q) << '\n';
  if (!trace) return 0;
  for (const auto& ev : r.trace.events) {
    std::cout << "step " << ev.step << ": insert " << ev.value << " at column " << ev.first_column;
    for (const auto& b : ev.bumps) std::cout << "; row " << b.row << ": " << b.bumper << " bumps " << b.bumped;
    std::cout << "; rests at (" << ev.final_row << ',' << ev.final_column << ")\n";
  }
  return 0;
}

int cmd_core(const Globals& g, const std::string& text) {
  const Permutation w = parse_permutation(text);
  const CoreDecomposition d = boolean_core(w);
  const auto word_or_e = [](const ReducedWord& u) {
    return u.letters.empty() ? std::string("e") : format_letters(u.letters);
  };
  if (g.json) {
    print_json({{"permutation", format_permutation(w, true)},
                {"core", format_permutation(d.core, true)},
                {"core_word", format_letters(d.core_word.letters)},
                {"remainder", format_permutation(d.remainder, true)},
                {"remainder_word", format_letters(d.remainder_word.letters)}});
  } else {
    std::cout << "core:      " << format_permutation(d.core, true) << " [" << word_or_e(d.core_word) << "]\n"
              << "remainder: " << format_permutation(d.remainder, true) << " [" << word_or_e(d.remainder_word)
              << "]\n";
  }
  return 0;
}

int cmd_words(const Globals& g, const std::string& text, bool classes, int max_length) {
  const Permutation w = parse_permutation(text);
  Limits limits = g.limits();
  limits.max_word_length = max_length;
  if (classes) {
    const auto cls = commutation_classes(w, limits);
    if (g.count) {
      std::cout << cls.size() << '\n';
      return 0;
    }
    json out = json::array();
    for (std::size_t k = 0; k < cls.size(); ++k) {
      json words = json::array();
      if (!g.json) std::cout << "class " << k + 1 << ":\n";
      for (const auto& u : cls[k]) {
        words.push_back(format_letters(u.letters));
        if (!g.json) std::cout << "  " << (u.letters.empty() ? "e" : format_letters(u.letters)) << '\n';
      }
      out.push_back(words);
    }
    if (g.json) print_json(out);
    return 0;
  }
  const auto words = all_reduced_words(w, limits);
  if (g.count) {
    std::cout << words.size() << '\n';
    return 0;
  }
  json out = json::array();
  for (const auto& u : words) {
    if (g.json) {
      out.push_back(format_letters(u.letters));
    } else {
      std::cout << (u.letters.empty() ? "e" : format_letters(u.letters)) << '\n';
    }
  }
  if (g.json) print_json(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fully commutative permutations: RSK, heaps, boolean cores, crowding"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "Emit JSON instead of text");
  app.add_flag("--count", g.count, "Print only the number of results");
  app.add_option("--bound", g.bound, "Largest degree accepted by enumerations (default 9)")->check(CLI::PositiveNumber);

  std::string perm_text;
  int n = 0;
  int result = 0;

  auto* analyze_cmd = app.add_subcommand("analyze", "Full report on one permutation");
  analyze_cmd->add_option("perm", perm_text, "Permutation, e.g. 41627385 or 4,1,6,2,7,3,8,5")->required();
  analyze_cmd->callback([&] { result = cmd_analyze(g, perm_text); });

  std::string filter = "all";
  bool commas = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Stream S_n in lexicographic order");
  enumerate_cmd->add_option("n", n, "Degree")->required();
  enumerate_cmd->add_option("--filter", filter, "all|fc|boolean|uncrowded|crowded|minimal-crowded");
  enumerate_cmd->add_flag("--commas", commas, "Comma-separated one-line notation");
  enumerate_cmd->callback([&] { result = cmd_enumerate(g, n, filter, commas); });

  std::vector<std::string> ids;
  bool list = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run exhaustive checks over S_n");
  verify_cmd->add_option("n", n, "Degree");
  verify_cmd->add_option("ids", ids, "Check ids, or 'all'");
  verify_cmd->add_flag("--list", list, "List available checks");
  verify_cmd->callback([&] {
    if (!list && n == 0) throw CLI::ValidationError("n", "degree required");
    result = cmd_verify(g, n, ids, list);
  });

  std::string word_text;
  auto* dot_cmd = app.add_subcommand("dot", "Graphviz output");
  dot_cmd->require_subcommand(1);
  auto* heap_cmd = dot_cmd->add_subcommand("heap", "Heap of a reduced word");
  heap_cmd->add_option("perm", perm_text, "Permutation")->required();
  heap_cmd->add_option("--word", word_text, "Reduced word to use (required for non-FC input)");
  heap_cmd->callback([&] { result = cmd_dot_heap(g, perm_text, word_text); });
  auto* poset_cmd = dot_cmd->add_subcommand("poset", "Right weak order on FC(S_n)");
  poset_cmd->add_option("n", n, "Degree")->required();
  poset_cmd->callback([&] { result = cmd_dot_poset(g, n); });

  bool trace = false;
  auto* rsk_cmd = app.add_subcommand("rsk", "Insertion and recording tableaux");
  rsk_cmd->add_option("perm", perm_text, "Permutation")->required();
  rsk_cmd->add_flag("--trace", trace, "Print every insertion step");
  rsk_cmd->callback([&] { result = cmd_rsk(g, perm_text, trace); });

  auto* core_cmd = app.add_subcommand("core", "Boolean core of an FC permutation");
  core_cmd->add_option("perm", perm_text, "Permutation")->required();
  core_cmd->callback([&] { result = cmd_core(g, perm_text); });

  bool classes = false;
  int max_length = Limits{}.max_word_length;
  auto* words_cmd = app.add_subcommand("words", "Reduced words");
  words_cmd->add_option("perm", perm_text, "Permutation")->required();
  words_cmd->add_flag("--classes", classes, "Group by commutation class");
  words_cmd->add_option("--max-length", max_length, "Refuse permutations longer than this (default 12)");
  words_cmd->callback([&] { result = cmd_words(g, perm_text, classes, max_length); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const LimitExceeded& e) {
    std::cerr << "error: " << e.what() << "; raise --bound to allow it\n";
    return 2;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal check failed: " << e.what() << '\n';
    return 1;
  }
  return result;
}
