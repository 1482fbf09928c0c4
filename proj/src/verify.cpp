#include "fcperm/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "fcperm/crowding.hpp"
#include "fcperm/errors.hpp"
#include "fcperm/patterns.hpp"
#include "fcperm/rsk.hpp"
#include "fcperm/text.hpp"
#include "fcperm/weak_order.hpp"
#include "fcperm/words.hpp"

namespace fcperm {

namespace {

// Accumulates cases and keeps the first failure only.
class Recorder {
 public:
  Recorder(std::string_view id, int n) {
    result_.id = std::string(id);
    result_.n = n;
  }

  void count(long long k = 1) { result_.cases += k; }

  bool failed() const { return !result_.passed; }

  // Returns ok so loops can write `if (!rec.expect(...)) return false;`.
  bool expect(bool ok, const std::string& object, const std::string& detail) {
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.counterexample = object;
      result_.detail = detail;
    }
    return ok;
  }

  bool expect(bool ok, const Permutation& w, const std::string& detail) {
    return ok || expect(false, format_permutation(w, true), detail);
  }

  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::vector<Permutation> fc_permutations(int n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& w) {
    if (is_fully_commutative(w)) out.push_back(w);
  });
  return out;
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool has_distinct_letters(const ReducedWord& word) {
  std::vector<int> sorted = word.letters;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool has_braid_factor(const ReducedWord& word, bool rising_middle) {
  const auto& u = word.letters;
  for (std::size_t j = 0; j + 2 < u.size(); ++j) {
    if (u[j] != u[j + 2]) continue;
    if (rising_middle && u[j + 1] == u[j] + 1) return true;   // i (i+1) i
    if (!rising_middle && u[j + 1] == u[j] - 1) return true;  // (i+1) i (i+1)
  }
  return false;
}

// Quadratic DP, independent of insertion.
int longest_monotone(const Permutation& w, bool increasing) {
  const int n = w.degree();
  std::vector<int> best(static_cast<std::size_t>(n) + 1, 1);
  int top = 0;
  for (int k = 1; k <= n; ++k) {
    for (int j = 1; j < k; ++j) {
      if ((w(j) < w(k)) == increasing) {
        best[static_cast<std::size_t>(k)] =
            std::max(best[static_cast<std::size_t>(k)], best[static_cast<std::size_t>(j)] + 1);
      }
    }
    top = std::max(top, best[static_cast<std::size_t>(k)]);
  }
  return top;
}

int first_column_height(const Tableau& t) { return t.row_count(); }

// Value that pushed `z` out of row 1 during insertion of w, or 0.
int row1_bumper(const RskResult& r, int z) { return r.trace.row1_bumper_of(z).value_or(0); }

bool is_minimal_crowded_poset(const Permutation& w) { return is_minimal_crowded_by_covers(w); }

// ---------------------------------------------------------------- checks

CheckResult check_schensted(int n) {
  Recorder rec("thm-2.10", n);
  for_each_permutation(n, [&](const Permutation& w) {
    rec.count();
    const auto p = rsk(w).p;
    rec.expect(static_cast<int>(p.row(1).size()) == longest_monotone(w, true), w,
               "first row length differs from longest increasing subsequence");
    rec.expect(first_column_height(p) == longest_monotone(w, false), w,
               "first column height differs from longest decreasing subsequence");
    return !rec.failed();
  });
  return rec.take();
}

CheckResult check_inverse_symmetry(int n) {
  Recorder rec("prop-2.9", n);
  for_each_permutation(n, [&](const Permutation& w) {
    rec.count();
    const auto r = rsk(w);
    rec.expect(r.p.is_standard() && r.q.is_standard() && r.p.shape() == r.q.shape(), w,
               "P and Q are not standard tableaux of one shape");
    rec.expect(rsk(inverse(w)).p == r.q, w, "P(w^-1) != Q(w)");
    return !rec.failed();
  });
  return rec.take();
}

Limits full_word_limits(int n, const Limits& base) {
  Limits l = base;
  l.max_word_length = std::max(l.max_word_length, n * (n - 1) / 2);
  l.max_heap_size = std::max(l.max_heap_size, n * (n - 1) / 2);
  return l;
}

CheckResult check_fc_tfae(int n, const Limits& limits) {
  Recorder rec("prop-2.2", n);
  const Limits l = full_word_limits(n, limits);
  const Permutation p321({3, 2, 1});
  for_each_permutation(n, [&](const Permutation& w) {
    rec.count();
    const bool fc = is_fully_commutative(w);
    const bool avoid = n < 3 || avoids(w, p321);
    const bool one_class = commutation_classes(w, l).size() == 1;
    const auto words = all_reduced_words(w, l);
    const bool no_up = std::none_of(words.begin(), words.end(),
                                    [](const ReducedWord& u) { return has_braid_factor(u, true); });
    const bool no_down = std::none_of(words.begin(), words.end(),
                                      [](const ReducedWord& u) { return has_braid_factor(u, false); });
    rec.expect(fc == avoid && avoid == one_class && one_class == no_up && no_up == no_down, w,
               "fully commutative characterizations disagree");
    return !rec.failed();
  });
  return rec.take();
}

CheckResult check_boolean_tfae(int n, const Limits& limits) {
  Recorder rec("prop-2.3", n);
  const Limits l = full_word_limits(n, limits);
  const Permutation p321({3, 2, 1});
  const Permutation p3412({3, 4, 1, 2});
  for_each_permutation(n, [&](const Permutation& w) {
    rec.count();
    const bool flag = is_boolean(w);
    const bool avoid = (n < 3 || avoids(w, p321)) && (n < 4 || avoids(w, p3412));
    const auto words = all_reduced_words(w, l);
    const bool some = std::any_of(words.begin(), words.end(), has_distinct_letters);
    const bool every = std::all_of(words.begin(), words.end(), has_distinct_letters);
    rec.expect(flag == avoid && avoid == some && some == every, w,
               "boolean characterizations disagree");
    return !rec.failed();
  });
  return rec.take();
}

CheckResult check_extensions_are_classes(int n, const Limits& limits) {
  Recorder rec("prop-2.7", n);
  const Limits l = full_word_limits(n, limits);
  for_each_permutation(n, [&](const Permutation& w) {
    for (const auto& cls : commutation_classes(w, l)) {
      rec.count();
      rec.expect(labeled_linear_extensions(build_heap(cls.front()), l) == cls, w,
                 "linear extensions of a heap differ from its commutation class");
    }
    return !rec.failed();
  });
  return rec.take();
}

CheckResult check_support(int n) {
  Recorder rec("lemma-2.1", n);
  for_each_permutation(n, [&](const Permutation& v) {
    const auto supp = support(v);
    std::vector<int> word_letters = peeled_word(v).letters;
    std::sort(word_letters.begin(), word_letters.end());
    word_letters.erase(std::unique(word_letters.begin(), word_letters.end()), word_letters.end());
    rec.expect(word_letters == supp, v, "support differs from the letters of a reduced word");
    for (int i = 1; i < n; ++i) {
      rec.count();
      const auto st = support_stats(v, i);
      std::vector<int> prefix(v.one_line().begin(), v.one_line().begin() + i);
      std::sort(prefix.begin(), prefix.end());
      std::vector<int> suffix(v.one_line().begin() + i, v.one_line().end());
      std::sort(suffix.begin(), suffix.end());
      std::vector<int> first(static_cast<std::size_t>(i));
      std::iota(first.begin(), first.end(), 1);
      std::vector<int> last(static_cast<std::size_t>(n - i));
      std::iota(last.begin(), last.end(), i + 1);
      const bool in_supp = std::binary_search(word_letters.begin(), word_letters.end(), i);
      const bool statements[] = {prefix != first, suffix != last, st.max_prefix > i,
                                 st.min_suffix < i + 1, st.max_prefix > st.min_suffix};
      for (bool s : statements) {
        rec.expect(s == in_supp, v, "support equivalence fails at i=" + std::to_string(i));
      }
    }
    return !rec.failed();
  });
  return rec.take();
}

CheckResult check_heap_covers(int n, const Limits& limits) {
  Recorder rec("lemma-2.5", n);
  const Limits l = full_word_limits(n, limits);
  for (const auto& w : fc_permutations(n)) {
    const auto words = all_reduced_words(w, l);
    const auto reference = build_heap(words.front()).canonical_form();
    for (const auto& u : words) {
      rec.count();
      const Heap h = build_heap(u);
      for (auto [x, y] : h.covers()) {
        rec.expect(std::abs(h.label(x) - h.label(y)) == 1, w,
                   "heap cover labels differ by more than one in word " + format_letters(u.letters));
      }
      rec.expect(h.canonical_form() == reference, w,
                 "heaps of two reduced words are not isomorphic: " + format_letters(u.letters));
    }
    if (rec.failed()) break;
  }
  return rec.take();
}

CheckResult check_bump_direction(int n) {
  Recorder rec("lemma-2.11", n);
  for_each_permutation(n, [&](const Permutation& w) {
    rec.count();
    const Permutation wi = inverse(w);
    // The position clause only holds in row 1, where the bumper is the letter
    // being inserted: in 1235764 the 5 bumps the 7 inside row 2, yet 5 comes
    // first. Two-row (FC) tableaux only ever bump in row 1.
    for (const auto& ev : rsk(w).trace.events) {
      for (const auto& b : ev.bumps) {
        rec.expect(b.bumper < b.bumped && (b.row > 1 || wi(b.bumper) > wi(b.bumped)), w,
                   std::to_string(b.bumper) + " bumps " + std::to_string(b.bumped) + " in row " +
                       std::to_string(b.row));
      }
    }
    return !rec.failed();
  });
  return rec.take();
}

CheckResult check_column_is_lis(int n) {
  Recorder rec("lemma-2.12", n);
  for_each_permutation(n, [&](const Permutation& w) {
    rec.count();
    const auto r = rsk(w);
    for (int q = 1; q <= n; ++q) {
      rec.expect(r.trace.column_of(q) == lis_ending_at(w, q), w,
                 "first column of " + std::to_string(q) + " differs from LIS ending there");
    }
    return !rec.failed();
  });
  return rec.take();
}

CheckResult check_lonely_column(int n) {
  Recorder rec("cor-lis", n);
  for_each_permutation(n, [&](const Permutation& w) {
    rec.count();
    const auto r = rsk(w);
    const auto all = longest_increasing_subsequences(w);
    const Permutation wi = inverse(w);
    for (int q = 1; q <= n; ++q) {
      int sharing = 0;
      for (int v = 1; v <= n; ++v) sharing += r.trace.column_of(v) == r.trace.column_of(q);
      if (sharing != 1) continue;
      for (const auto& lis : all) {
        rec.expect(std::binary_search(lis.begin(), lis.end(), wi(q)), w,
                   std::to_string(q) + " is alone in its column but misses a longest increasing subsequence");
      }
    }
    return !rec.failed();
  });
  return rec.take();
}

CheckResult check_row2_structure(int n) {
  Recorder rec("lemma-row2", n);
  for (const auto& w : fc_permutations(n)) {
    rec.count();
    const auto r = rsk(w);
    const Permutation wi = inverse(w);
    const auto zs = r.p.row(2);
    std::vector<int> bs;
    std::vector<int> bump_step;
    for (int z : zs) {
      bs.push_back(row1_bumper(r, z));
      bump_step.push_back(wi(bs.back()));
    }
    for (std::size_t k = 0; k + 1 < zs.size(); ++k) {
      rec.expect(wi(zs[k]) < wi(zs[k + 1]), w, "(a) row-2 values are not left to right");
      rec.expect(bs[k] < bs[k + 1] && wi(bs[k]) < wi(bs[k + 1]), w,
                 "(c) bumpers are not increasing left to right");
      rec.expect(bump_step[k] < bump_step[k + 1], w, "(d) row-2 values bumped out of order");
    }
    std::vector<int> sorted_bs = bs;
    std::sort(sorted_bs.begin(), sorted_bs.end());
    std::vector<int> common;
    std::set_intersection(zs.begin(), zs.end(), sorted_bs.begin(), sorted_bs.end(),
                          std::back_inserter(common));
    rec.expect(common.empty(), w, "(b) a value both bumps and is bumped");
    const auto pairs = bump_pairs(w);
    rec.expect(pairs.size() == zs.size(), w, "bump pairs do not match the second row");
    if (rec.failed()) break;
  }
  return rec.take();
}

CheckResult check_repeated_letters(int n) {
  Recorder rec("lemma-3.1", n);
  for (const auto& w : fc_permutations(n)) {
    rec.count();
    const Heap h = build_heap(peeled_word(w));
    for (int x = 1; x <= h.size(); ++x) {
      for (int y = x + 1; y <= h.size(); ++y) {
        if (h.label(x) != h.label(y)) continue;
        const int j = h.label(x);
        bool above = false;
        bool below = false;
        for (int p = 1; p <= h.size(); ++p) {
          if (!h.less(x, p) || !h.less(p, y)) continue;
          above = above || h.label(p) == j + 1;
          below = below || h.label(p) == j - 1;
        }
        rec.expect(h.less(x, y) && above && below, w,
                   "copies of letter " + std::to_string(j) + " not separated by both neighbours");
      }
    }
    if (rec.failed()) break;
  }
  return rec.take();
}

CheckResult check_boolean_core(int n, const Limits& limits) {
  Recorder rec("thm-3.2", n);
  for (const auto& w : fc_permutations(n)) {
    rec.count();
    const auto dec = boolean_core(w);
    rec.expect(is_boolean(dec.core), w, "core is not boolean");
    rec.expect(support(dec.core) == support(w), w, "core support differs");
    rec.expect(compose(dec.core, dec.remainder) == w &&
                   length(dec.core) + length(dec.remainder) == length(w),
               w, "core * remainder is not a length-additive factorization");
    std::vector<int> joined = dec.core_word.letters;
    joined.insert(joined.end(), dec.remainder_word.letters.begin(), dec.remainder_word.letters.end());
    rec.expect(is_reduced(joined, n) && evaluate_word(joined, n) == w, w,
               "core word followed by remainder word is not a reduced word of w");
    int same_support = 0;
    for (const auto& b : principal_ideal(w, limits)) {
      if (!is_boolean(b)) continue;
      if (support(b) == support(w)) {
        ++same_support;
        rec.expect(b == dec.core, w, "another boolean element below w has full support");
      }
      rec.expect(b == dec.core || !right_weak_leq(dec.core, b), w,
                 "a boolean element lies strictly above the core");
    }
    rec.expect(same_support == 1, w, "core is not the unique full-support boolean element below w");
    if (rec.failed()) break;
  }
  return rec.take();
}

CheckResult check_row_containment(int n, const Limits& limits) {
  Recorder rec("thm-3.4", n);
  const FcPoset poset = build_fc_poset(n, limits);
  for (const auto& e : poset.edges()) {
    rec.count();
    const auto edge = poset.cover(e);
    const auto pv = rsk(edge.lower).p;
    const auto pw = rsk(edge.upper).p;
    rec.expect(subset_of(pv.row(2), pw.row(2)) && subset_of(pw.row(1), pv.row(1)), edge.upper,
               "row containment fails along cover by s_" + std::to_string(edge.index));
    if (rec.failed()) break;
  }
  return rec.take();
}

CheckResult check_tableau_change(int n, const Limits& limits) {
  Recorder rec("cor-3.5", n);
  const FcPoset poset = build_fc_poset(n, limits);
  for (const auto& e : poset.edges()) {
    rec.count();
    const auto edge = poset.cover(e);
    const int i = edge.index;
    const auto pv = rsk(edge.lower).p;
    const auto pw = rsk(edge.upper).p;
    const auto all = longest_increasing_subsequences(edge.lower);
    const bool every_uses_both = std::all_of(all.begin(), all.end(), [&](const std::vector<int>& s) {
      return std::binary_search(s.begin(), s.end(), i) && std::binary_search(s.begin(), s.end(), i + 1);
    });
    rec.expect((pv != pw) == every_uses_both, edge.upper,
               "tableau change does not match longest increasing subsequences at s_" + std::to_string(i));
    if (pv != pw) {
      rec.expect(pw.row(2).size() == pv.row(2).size() + 1, edge.upper, "second row did not grow by one");
    }
    if (rec.failed()) break;
  }
  return rec.take();
}

CheckResult check_left_right(int n) {
  Recorder rec("cor-3.6", n);
  const auto fc = fc_permutations(n);
  std::vector<RskResult> tab;
  for (const auto& w : fc) tab.push_back(rsk(w));
  for (std::size_t a = 0; a < fc.size(); ++a) {
    for (std::size_t b = 0; b < fc.size(); ++b) {
      rec.count();
      if (right_weak_leq(fc[a], fc[b])) {
        rec.expect(subset_of(tab[a].p.row(2), tab[b].p.row(2)), fc[b],
                   "Row2(P) not monotone in right weak order from " + format_permutation(fc[a], true));
      }
      if (left_weak_leq(fc[a], fc[b])) {
        rec.expect(subset_of(tab[a].q.row(2), tab[b].q.row(2)), fc[b],
                   "Row2(Q) not monotone in left weak order from " + format_permutation(fc[a], true));
      }
    }
    if (rec.failed()) break;
  }
  return rec.take();
}

CheckResult check_core_tableau(int n) {
  Recorder rec("cor-3.7", n);
  for (const auto& w : fc_permutations(n)) {
    rec.count();
    const auto pc = rsk(boolean_core(w).core).p;
    const auto pw = rsk(w).p;
    rec.expect(subset_of(pc.row(2), pw.row(2)) && subset_of(pw.row(1), pc.row(1)), w,
               "core tableau rows are not nested");
    if (rec.failed()) break;
  }
  return rec.take();
}

CheckResult check_transitions(int n) {
  Recorder rec("thm-4.11", n);
  for (const auto& v : fc_permutations(n)) {
    for (int i = 1; i < n; ++i) {
      if (!is_qualifying_transition(v, i)) continue;
      rec.count();
      const Permutation w = multiply_right(v, SimpleReflection{i});
      try {
        const auto rep = analyze_transition(v, i);
        rec.expect(is_crowded(w), w, "qualifying transition from " + format_permutation(v, true) +
                                         " yields an uncrowded permutation");
        rec.expect(!is_uncrowded_set(rep.witness.window), w, "transition witness is not crowded");
      } catch (const InvariantViolation& ex) {
        rec.expect(false, v, std::string(ex.what()) + " at i=" + std::to_string(i));
      }
    }
    if (rec.failed()) break;
  }
  return rec.take();
}

CheckResult check_core_criterion(int n) {
  Recorder rec("cor-4.12", n);
  for (const auto& w : fc_permutations(n)) {
    rec.count();
    const bool uncrowded = !is_crowded(w);
    const bool same = rsk(boolean_core(w).core).p == rsk(w).p;
    rec.expect(uncrowded == same, w, "uncrowded verdict disagrees with P(core) == P(w)");
    if (rec.failed()) break;
  }
  return rec.take();
}

CheckResult check_ideal_filter(int n, const Limits& limits) {
  Recorder rec("lemma-5.1", n);
  const FcPoset poset = build_fc_poset(n, limits);
  std::vector<bool> crowded;
  for (const auto& w : poset.elements()) crowded.push_back(is_crowded(w));
  for (const auto& e : poset.edges()) {
    rec.count();
    rec.expect(!crowded[static_cast<std::size_t>(e.lower)] || crowded[static_cast<std::size_t>(e.upper)],
               poset.elements()[static_cast<std::size_t>(e.upper)],
               "a crowded element is covered by an uncrowded one");
    if (rec.failed()) break;
  }
  return rec.take();
}

CheckResult check_nonbumping_descent(int n) {
  Recorder rec("lemma-5.2", n);
  for (const auto& w : fc_permutations(n)) {
    const auto r = rsk(w);
    for (int d : descents(w)) {
      const auto& ev = r.trace.events[static_cast<std::size_t>(d)];  // step d+1
      const bool bumps_left_neighbour = !ev.bumps.empty() && ev.bumps.front().bumped == w(d);
      if (bumps_left_neighbour) continue;
      rec.count();
      rec.expect(rsk(multiply_right(w, SimpleReflection{d})).p == r.p, w,
                 "non-bumping descent " + std::to_string(d) + " changes P");
    }
    if (rec.failed()) break;
  }
  return rec.take();
}

CheckResult check_small_neighbour(int n) {
  Recorder rec("lemma-5.4", n);
  for (const auto& w : fc_permutations(n)) {
    const auto p = rsk(w).p;
    for (int d : descents(w)) {
      if (d + 2 > n || w(d + 2) >= w(d)) continue;
      rec.count();
      const Permutation ws = multiply_right(w, SimpleReflection{d});
      const auto nbrs = knuth_neighbors(w);
      rec.expect(std::binary_search(nbrs.begin(), nbrs.end(), ws), w,
                 "w s_d is not a Knuth neighbour at d=" + std::to_string(d));
      rec.expect(rsk(ws).p == p, w, "descent " + std::to_string(d) + " with small right neighbour changes P");
    }
    if (rec.failed()) break;
  }
  return rec.take();
}

CheckResult check_minimal_characterization(int n, const Limits& limits) {
  Recorder rec("thm-5.10", n);
  const auto frontier = uncrowded_frontier(n, limits);
  for (const auto& w : fc_permutations(n)) {
    rec.count();
    const bool direct = is_minimal_crowded_direct(w).minimal();
    const bool oracle = is_minimal_crowded_poset(w);
    const bool in_frontier = std::binary_search(frontier.minimal_crowded.begin(),
                                                frontier.minimal_crowded.end(), w);
    rec.expect(direct == oracle && oracle == in_frontier, w,
               std::string("five-condition test says ") + (direct ? "minimal" : "not minimal") +
                   ", cover oracle says " + (oracle ? "minimal" : "not minimal"));
    if (rec.failed()) break;
  }
  return rec.take();
}

CheckResult check_boolean_tableaux(int n) {
  Recorder rec("prop-2.14", n);
  std::set<std::vector<std::vector<int>>> from_boolean;
  for_each_permutation(n, [&](const Permutation& w) {
    if (is_boolean(w)) from_boolean.insert(rsk(w).p.rows);
  });
  std::set<std::vector<std::vector<int>>> uncrowded;
  for (const auto& t : two_row_standard_tableaux(n)) {
    rec.count();
    if (is_uncrowded_set(t.row(2))) uncrowded.insert(t.rows);
  }
  for (const auto& rows : from_boolean) {
    if (!uncrowded.count(rows)) {
      rec.expect(false, format_tableau(Tableau{rows}), "boolean insertion tableau is crowded");
      break;
    }
  }
  for (const auto& rows : uncrowded) {
    if (!from_boolean.count(rows)) {
      rec.expect(false, format_tableau(Tableau{rows}), "uncrowded tableau has no boolean preimage");
      break;
    }
  }
  return rec.take();
}

// Shared setup for the checks about minimal crowded permutations.
template <typename Body>
CheckResult over_minimal_crowded(std::string_view id, int n, const Limits& limits, Body&& body) {
  Recorder rec(id, n);
  for (const auto& w : uncrowded_frontier(n, limits).minimal_crowded) {
    rec.count();
    const auto r = rsk(w);
    std::vector<int> zs = r.p.row(2);
    std::vector<int> bs;
    for (int z : zs) bs.push_back(row1_bumper(r, z));
    body(rec, w, zs, bs);
    if (rec.failed()) break;
  }
  return rec.take();
}

CheckResult check_adjacent_bumps(int n, const Limits& limits) {
  return over_minimal_crowded("cor-5.5", n, limits,
                              [&](Recorder& rec, const Permutation& w, const std::vector<int>& zs,
                                  const std::vector<int>& bs) {
    const auto r = rsk(w);
    for (int d = 1; d < n; ++d) {
      const auto& ev = r.trace.events[static_cast<std::size_t>(d)];
      const bool bumps = !ev.bumps.empty() && ev.bumps.front().bumped == w(d);
      rec.expect((w(d) > w(d + 1)) == bumps, w, "descent at " + std::to_string(d) + " vs adjacent bump");
    }
    const Permutation wi = inverse(w);
    for (std::size_t k = 0; k < zs.size(); ++k) {
      rec.expect(wi(bs[k]) == wi(zs[k]) + 1, w, std::to_string(zs[k]) + " not bumped by its right neighbour");
    }
  });
}

CheckResult check_fixed_ends(int n, const Limits& limits) {
  return over_minimal_crowded("cor-5.6", n, limits,
                              [&](Recorder& rec, const Permutation& w, const std::vector<int>&,
                                  const std::vector<int>&) {
    const auto des = descents(w);
    for (int p = 1; p <= n; ++p) {
      if (p < des.front() || p > des.back() + 1) {
        rec.expect(w(p) == p, w, "position " + std::to_string(p) + " outside the descent span is not fixed");
      }
    }
  });
}

CheckResult check_interleaving(int n, const Limits& limits) {
  return over_minimal_crowded("lemma-5.7", n, limits,
                              [&](Recorder& rec, const Permutation& w, const std::vector<int>& zs,
                                  const std::vector<int>& bs) {
    const Permutation wi = inverse(w);
    const int start = wi(zs.front());
    for (std::size_t k = 0; k < zs.size(); ++k) {
      rec.expect(wi(zs[k]) == start + 2 * static_cast<int>(k) && wi(bs[k]) == start + 2 * static_cast<int>(k) + 1,
                 w, "z_1 b_1 ... z_t b_t is not a consecutive factor");
    }
  });
}

CheckResult check_bumper_gap(int n, const Limits& limits) {
  return over_minimal_crowded("lemma-5.8", n, limits,
                              [&](Recorder& rec, const Permutation& w, const std::vector<int>& zs,
                                  const std::vector<int>& bs) {
    for (std::size_t k = 0; k + 3 < zs.size(); ++k) {
      rec.expect(zs[k] < bs[k + 3], w, "z_i < b_{i+3} fails at i=" + std::to_string(k + 1));
    }
  });
}

CheckResult check_unique_minimal_subset(int n, const Limits& limits) {
  return over_minimal_crowded("cor-5.9", n, limits,
                              [&](Recorder& rec, const Permutation& w, const std::vector<int>& zs,
                                  const std::vector<int>&) {
    const std::size_t t = zs.size();
    std::vector<std::vector<int>> crowded_subsets;
    for (unsigned mask = 1; mask < (1u << t); ++mask) {
      std::vector<int> sub;
      for (std::size_t k = 0; k < t; ++k) {
        if (mask & (1u << k)) sub.push_back(zs[k]);
      }
      if (is_uncrowded_set(sub)) continue;
      rec.expect(sub.back() == zs.back(), w, "a crowded subset of Row2 misses its maximum");
      crowded_subsets.push_back(std::move(sub));
    }
    std::vector<std::vector<int>> minimal;
    for (const auto& s : crowded_subsets) {
      const bool has_smaller = std::any_of(crowded_subsets.begin(), crowded_subsets.end(),
                                           [&](const std::vector<int>& o) {
                                             return o != s && subset_of(o, s);
                                           });
      if (!has_smaller) minimal.push_back(s);
    }
    rec.expect(minimal.size() == 1, w, "Row2 has " + std::to_string(minimal.size()) +
                                           " inclusion-minimal crowded subsets");
    if (minimal.size() == 1) {
      rec.expect(minimal_crowded_subset(zs).elements == minimal.front(), w,
                 "minimal_crowded_subset disagrees with subset enumeration");
    }
  });
}

CheckResult check_fc_closure(int n) {
  Recorder rec("fc-closure", n);
  for (const auto& w : fc_permutations(n)) {
    for (int d : descents(w)) {
      rec.count();
      rec.expect(is_fully_commutative(multiply_right(w, SimpleReflection{d})), w,
                 "down-cover by s_" + std::to_string(d) + " is not fully commutative");
    }
    if (rec.failed()) break;
  }
  return rec.take();
}

CheckResult check_knuth_classes(int n) {
  Recorder rec("knuth", n);
  std::vector<Permutation> all;
  for_each_permutation(n, [&](const Permutation& w) { all.push_back(w); });
  std::unordered_map<Permutation, std::size_t> index;
  for (std::size_t k = 0; k < all.size(); ++k) index.emplace(all[k], k);
  std::vector<std::size_t> parent(all.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t k = 0; k < all.size(); ++k) {
    for (const auto& nb : knuth_neighbors(all[k])) {
      const auto a = find(k);
      const auto b = find(index.at(nb));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<std::vector<std::vector<int>>, std::size_t> component_of_p;
  for (std::size_t k = 0; k < all.size(); ++k) {
    rec.count();
    const auto rows = rsk(all[k]).p.rows;
    auto [it, inserted] = component_of_p.emplace(rows, find(k));
    rec.expect(inserted || it->second == find(k), all[k], "P-fibre splits across Knuth classes");
  }
  std::set<std::size_t> roots;
  for (std::size_t k = 0; k < all.size(); ++k) roots.insert(find(k));
  rec.expect(roots.size() == component_of_p.size(), "S_" + std::to_string(n),
             "Knuth classes are coarser than P-fibres");
  return rec.take();
}

struct Entry {
  CheckInfo info;
  std::function<CheckResult(int, const Limits&)> run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> e;
    auto add = [&](const char* id, const char* summary, int default_n, auto fn) {
      e.push_back({{id, summary, default_n}, fn});
    };
    auto plain = [](CheckResult (*fn)(int)) {
      return [fn](int n, const Limits&) { return fn(n); };
    };
    add("lemma-2.1", "support via prefix sets, M and m statistics", 7, plain(check_support));
    add("prop-2.2", "FC <=> 321-avoiding <=> one commutation class <=> no braid factor", 6, check_fc_tfae);
    add("prop-2.3", "boolean <=> avoids 321 and 3412 <=> distinct letters in some/every word", 6,
        check_boolean_tfae);
    add("lemma-2.5", "heap covers differ by one; FC heaps independent of the word", 7, check_heap_covers);
    add("prop-2.7", "heap linear extensions = commutation class", 6, check_extensions_are_classes);
    add("prop-2.9", "P(w^-1) = Q(w)", 7, plain(check_inverse_symmetry));
    add("thm-2.10", "row 1 / column 1 of P = longest increasing / decreasing subsequence", 7,
        plain(check_schensted));
    add("lemma-2.11", "bumped value is larger; a row-1 bump comes from its right", 7, plain(check_bump_direction));
    add("lemma-2.12", "first-insertion column = LIS ending at the value", 7, plain(check_column_is_lis));
    add("cor-lis", "a value alone in its column lies on every longest increasing subsequence", 6,
        plain(check_lonely_column));
    add("lemma-row2", "second-row structure of FC insertion (parts a-d)", 7, plain(check_row2_structure));
    add("prop-2.14", "boolean insertion tableaux = uncrowded two-row tableaux", 7,
        [](int n, const Limits&) { return check_boolean_tableaux(n); });
    add("lemma-3.1", "repeated heap letters are separated by both neighbours", 7,
        plain(check_repeated_letters));
    add("thm-3.2", "boolean core: boolean, same support, length additive, unique", 7, check_boolean_core);
    add("thm-3.4", "Row2(P) grows along FC covers", 8, check_row_containment);
    add("cor-3.5", "P changes iff every longest increasing subsequence uses both swapped entries", 7,
        check_tableau_change);
    add("cor-3.6", "Row2(P) monotone in right order, Row2(Q) in left order", 6, plain(check_left_right));
    add("cor-3.7", "core tableau rows nest inside the permutation's", 8, plain(check_core_tableau));
    add("thm-4.11", "support-preserving tableau-changing FC covers land on crowded elements", 7,
        plain(check_transitions));
    add("cor-4.12", "uncrowded <=> P(core) = P(w)", 8, plain(check_core_criterion));
    add("fc-closure", "down-covers of FC permutations are FC", 8, plain(check_fc_closure));
    add("lemma-5.1", "uncrowded ideal, crowded filter", 8, check_ideal_filter);
    add("lemma-5.2", "descent without adjacent bump keeps P", 7, plain(check_nonbumping_descent));
    add("lemma-5.4", "descent with smaller right neighbour keeps P (Knuth move)", 7,
        plain(check_small_neighbour));
    add("knuth", "Knuth classes = P-fibres", 6, plain(check_knuth_classes));
    add("cor-5.5", "minimal crowded: descents are exactly adjacent bumps", 8, check_adjacent_bumps);
    add("cor-5.6", "minimal crowded: fixed outside the descent span", 8, check_fixed_ends);
    add("lemma-5.7", "minimal crowded: z_1 b_1 ... z_t b_t consecutive", 8, check_interleaving);
    add("lemma-5.8", "minimal crowded: z_i < b_{i+3}", 9, check_bumper_gap);
    add("cor-5.9", "minimal crowded: unique minimal crowded subset, containing max Row2", 8,
        check_unique_minimal_subset);
    add("thm-5.10", "five-condition test = minimality by covers", 8, check_minimal_characterization);
    return e;
  }();
  return entries;
}

void collect_lis(const Permutation& w, int target, std::vector<int>& chosen, int from,
                 const std::vector<int>& ending, std::vector<std::vector<int>>& out) {
  // Extend left to right; `ending[p]` bounds how long a chain through p can get.
  if (static_cast<int>(chosen.size()) == target) {
    out.push_back(chosen);
    return;
  }
  const int need = target - static_cast<int>(chosen.size());
  for (int p = from; p <= w.degree(); ++p) {
    if (!chosen.empty() && w(p) < w(chosen.back())) continue;
    if (ending[static_cast<std::size_t>(p)] < need) continue;
    chosen.push_back(p);
    collect_lis(w, target, chosen, p + 1, ending, out);
    chosen.pop_back();
  }
}

}  // namespace

const std::vector<CheckInfo>& available_checks() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

CheckResult run_check(std::string_view id, int n, const Limits& limits) {
  if (n < 1) throw PreconditionError("degree must be >= 1");
  if (n > limits.max_degree) throw LimitExceeded("verification degree", n, limits.max_degree);
  for (const auto& e : registry()) {
    if (e.info.id == id) return e.run(n, limits);
  }
  throw PreconditionError("unknown check '" + std::string(id) + "'");
}

std::vector<std::vector<int>> longest_increasing_subsequences(const Permutation& w) {
  const int n = w.degree();
  // starting[p]: longest increasing subsequence starting at position p.
  std::vector<int> starting(static_cast<std::size_t>(n) + 1, 1);
  for (int p = n; p >= 1; --p) {
    for (int q = p + 1; q <= n; ++q) {
      if (w(q) > w(p)) {
        starting[static_cast<std::size_t>(p)] =
            std::max(starting[static_cast<std::size_t>(p)], starting[static_cast<std::size_t>(q)] + 1);
      }
    }
  }
  const int target = *std::max_element(starting.begin() + 1, starting.end());
  std::vector<std::vector<int>> out;
  std::vector<int> chosen;
  collect_lis(w, target, chosen, 1, starting, out);
  return out;
}

std::vector<Tableau> two_row_standard_tableaux(int n) {
  std::vector<Tableau> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Tableau t;
    t.rows.emplace_back();
    std::vector<int> second;
    for (int v = 1; v <= n; ++v) {
      if (mask & (1u << (v - 1))) {
        second.push_back(v);
      } else {
        t.rows[0].push_back(v);
      }
    }
    if (!second.empty()) t.rows.push_back(std::move(second));
    if (t.rows[0].empty()) continue;
    if (t.is_standard()) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace fcperm
