// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "fcperm/crowding.hpp"
#include "fcperm/patterns.hpp"
#include "fcperm/rsk.hpp"
#include "fcperm/text.hpp"
#include "fcperm/verify.hpp"
#include "fcperm/words.hpp"
#include "oracles.hpp"

using namespace fcperm;

namespace {

int failures = 0;

void report(bool ok, const std::string& name, const std::string& note = {}) {
  if (!ok) ++failures;
  std::printf("%s  %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), note.empty() ? "" : "  -- ", note.c_str());
}

std::string p_of(const char* w) { return format_tableau(rsk(parse_permutation(w)).p); }

std::string core_of(const char* w) { return format_permutation(boolean_core(parse_permutation(w)).core, true); }

// ---------------------------------------------------------------- 1
void golden_examples() {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::string> bad;
  auto expect = [&](bool ok, const char* what) {
    if (!ok) bad.push_back(what);
  };

  expect(p_of("315264") == "1,2,4/3,5,6", "P(315264)");
  expect(p_of("41623785") == "1,2,3,5,8/4,6,7", "P(41623785)");
  expect(p_of("41627385") == "1,2,3,5/4,6,7,8", "P(41627385)");
  expect(core_of("345619278") == "314569278", "core(345619278)");
  expect(core_of("41623785") == "41263785", "core(41623785)");
  expect(core_of("41627385") == "41263785", "core(41627385)");

  const auto c = classify(parse_permutation("41627385"));
  expect(c.crowded && c.witness && c.witness->window == std::vector<int>{6, 7, 8}, "classify(41627385)");
  const auto m = is_minimal_crowded_direct(parse_permutation("41627385"));
  expect(m.minimal() && m.descents_alternate && m.peaks_crowded && m.fixes_outside &&
             m.pattern_415263_consecutive && m.windows_match,
         "five conditions for 41627385");

  const Heap h = build_heap(canonical_word(parse_permutation("345619278")));
  const auto ext = labeled_linear_extensions(h);
  const auto has = [&](const char* text) {
    return std::binary_search(ext.begin(), ext.end(), ReducedWord{parse_letters(text)});
  };
  expect(h.size() == 11, "heap size of 345619278");
  expect(has("87234561234") && has("23451234876"), "linear extensions of the heap of 345619278");

  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  expect(ms < 1000.0, "golden examples under one second");
  std::string note = std::to_string(static_cast<int>(ms)) + " ms";
  for (const auto& b : bad) note += "; wrong: " + b;
  report(bad.empty(), "1 golden examples", note);
}

// ---------------------------------------------------------------- 2
void exhaustive_suite() {
  struct Item {
    const char* id;
    int n;
  };
  const Item items[] = {{"thm-2.10", 7}, {"prop-2.9", 7}, {"prop-2.2", 6},  {"prop-2.3", 6},
                        {"thm-3.2", 7},  {"thm-3.4", 8},  {"cor-3.5", 7},   {"thm-4.11", 7},
                        {"cor-4.12", 8}, {"lemma-5.1", 8}, {"thm-5.10", 8}};
  for (const auto& item : items) {
    const auto start = std::chrono::steady_clock::now();
    const CheckResult r = run_check(item.id, item.n);
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string note = std::to_string(r.cases) + " cases, " + std::to_string(s).substr(0, 5) + " s";
    if (!r.passed) note += "; counterexample " + r.counterexample + ": " + r.detail;
    report(r.passed, std::string("2 ") + item.id + " over S_" + std::to_string(item.n), note);
  }
}

// ---------------------------------------------------------------- 3
void counting() {
  const long long expected[] = {1, 2, 5, 14, 42, 132, 429, 1430};
  bool ok = true;
  std::string seen;
  for (int n = 1; n <= 8; ++n) {
    long long brute = 0;
    long long lib = 0;
    for_each_permutation(n, [&](const Permutation& w) {
      brute += !oracle::has_321(w);
      lib += is_fully_commutative(w);
    });
    ok = ok && brute == expected[n - 1] && lib == brute;
    seen += (n > 1 ? "," : "") + std::to_string(lib);
  }
  report(ok, "3 |FC(S_n)| for n = 1..8", seen);

  long long crowded = 0;
  for (int n = 1; n <= 5; ++n) {
    for_each_permutation(n, [&](const Permutation& w) {
      if (is_fully_commutative(w) && is_crowded(w)) ++crowded;
    });
  }
  report(crowded == 0, "3 no crowded FC permutation for n <= 5", std::to_string(crowded) + " found");
}

// ---------------------------------------------------------------- 4
void properties() {
  int disagreements = 0;
  int not_minimal = 0;
  int crowded_sets = 0;
  for (unsigned mask = 0; mask < (1u << 10); ++mask) {
    std::vector<int> set;
    for (int v = 1; v <= 10; ++v) {
      if (mask & (1u << (v - 1))) set.push_back(v);
    }
    const bool fast = is_uncrowded_set(set);
    if (fast != oracle::uncrowded_unbounded(set)) ++disagreements;
    if (fast) continue;
    ++crowded_sets;
    const auto sub = minimal_crowded_subset(set).elements;
    bool minimal = !is_uncrowded_set(sub) && std::includes(set.begin(), set.end(), sub.begin(), sub.end());
    for (std::size_t k = 0; k < sub.size() && minimal; ++k) {
      auto smaller = sub;
      smaller.erase(smaller.begin() + static_cast<long>(k));
      minimal = is_uncrowded_set(smaller);
    }
    if (!minimal) ++not_minimal;
  }
  report(disagreements == 0, "4 uncrowded test = unbounded window scan on all subsets of {1..10}",
         std::to_string(disagreements) + " disagreements");
  report(not_minimal == 0, "4 minimal_crowded_subset is minimal under element removal",
         std::to_string(crowded_sets) + " crowded sets, " + std::to_string(not_minimal) + " not minimal");

  std::mt19937 gen(20240611);
  std::uniform_int_distribution<int> size(1, 30);
  long long bumps = 0;
  int bad = 0;
  std::string first_bad;
  for (int trial = 0; trial < 10000; ++trial) {
    std::vector<int> v(static_cast<std::size_t>(size(gen)));
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), gen);
    const Permutation w(v);
    const Permutation wi = inverse(w);
    for (const auto& ev : rsk(w).trace.events) {
      for (const auto& b : ev.bumps) {
        ++bumps;
        const bool ok = b.bumper < b.bumped && (b.row > 1 || wi(b.bumper) > wi(b.bumped));
        if (!ok && bad++ == 0) first_bad = format_permutation(w);
      }
    }
  }
  report(bad == 0, "4 bump trace on 10^4 random permutations of degree <= 30",
         std::to_string(bumps) + " bumps; b < z everywhere, b right of z for row-1 bumps" +
             (bad ? "; first failure " + first_bad : ""));
}

}  // namespace

int main() {
  golden_examples();
  exhaustive_suite();
  counting();
  properties();
  std::printf("%s\n", failures == 0 ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return failures == 0 ? 0 : 1;
}
