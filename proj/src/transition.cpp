#include <algorithm>
#include <iterator>
#include <optional>
#include <string>

#include "fcperm/crowding.hpp"
#include "fcperm/errors.hpp"
#include "fcperm/patterns.hpp"

namespace fcperm {

namespace {

// Returns an empty string when (v, i) qualifies, otherwise the failed hypothesis.
std::string failed_hypothesis(const Permutation& v, int i) {
  if (i < 1 || i > v.degree() - 1) return "reflection index out of range";
  if (!is_fully_commutative(v)) return "v is not fully commutative";
  if (v(i) > v(i + 1)) return "v s_i is shorter than v (i is a descent)";
  const Permutation w = multiply_right(v, SimpleReflection{i});
  if (!is_fully_commutative(w)) return "w = v s_i is not fully commutative";
  const auto st = support_stats(v, i);
  if (st.max_prefix <= st.min_suffix) return "i is not in the support of v";
  if (rsk(v).p == rsk(w).p) return "P(v) equals P(w)";
  return {};
}

void check(bool ok, const char* property) {
  if (!ok) throw InvariantViolation(std::string("transition analysis: ") + property);
}

bool in_sorted(const std::vector<int>& s, int x) { return std::binary_search(s.begin(), s.end(), x); }

}  // namespace

bool is_qualifying_transition(const Permutation& v, int i) { return failed_hypothesis(v, i).empty(); }

TransitionReport analyze_transition(const Permutation& v, int i) {
  if (auto why = failed_hypothesis(v, i); !why.empty()) {
    throw PreconditionError("analyze_transition: " + why);
  }
  const int n = v.degree();
  const Permutation w = multiply_right(v, SimpleReflection{i});
  const Permutation v_inv = inverse(v);
  const auto position = [&](int value) { return v_inv(value); };

  TransitionReport rep{.v = v, .w = w, .i = i};
  const auto st = support_stats(v, i);
  const int big = st.max_prefix;
  const int small = st.min_suffix;
  rep.max_prefix = big;
  rep.min_suffix = small;

  // M v(i) v(i+1) m is a 3142.
  const int pos_big = position(big);
  const int pos_small = position(small);
  rep.pattern3142 = {pos_big, i, i + 1, pos_small};
  check(pos_big < i && pos_small > i + 1, "M and m sit strictly outside positions i, i+1");
  check(v(i) < small && small < big && big < v(i + 1), "M v(i) v(i+1) m forms a 3142 pattern");

  // Increasing runs a_1 < ... < a_h < v(i) and v(i+1) < e_1 < ... < e_j.
  for (int p = pos_big + 1; p < i; ++p) rep.a_run.push_back(v(p));
  for (int p = i + 2; p < pos_small; ++p) rep.e_run.push_back(v(p));
  check(!rep.a_run.empty() && !rep.e_run.empty(), "both increasing runs are nonempty");
  check(std::is_sorted(rep.a_run.begin(), rep.a_run.end()) && rep.a_run.back() < v(i),
        "a-run increases below v(i)");
  check(std::is_sorted(rep.e_run.begin(), rep.e_run.end()) && rep.e_run.front() > v(i + 1),
        "e-run increases above v(i+1)");

  const RskResult rv = rsk(v);
  const RskResult rw = rsk(w);
  const auto row1_v = rv.p.row(1);
  rep.row2_v = rv.p.row(2);
  rep.row2_w = rw.p.row(2);
  check(rv.p.row_count() <= 2 && rw.p.row_count() <= 2, "both tableaux have at most two rows");

  // M is pushed to row 2 by one of the a's, in both tableaux.
  for (const auto* trace : {&rv.trace, &rw.trace}) {
    const auto bumper = trace->row1_bumper_of(big);
    check(bumper && std::find(rep.a_run.begin(), rep.a_run.end(), *bumper) != rep.a_run.end(),
          "M is bumped by an element of the a-run");
  }
  // m pushes v(i+1) out of row 1 of P(v).
  check(rv.trace.row1_bumper_of(v(i + 1)) == small, "m bumps v(i+1) in P(v)");

  // The unique new second-row value.
  std::vector<int> fresh;
  std::set_intersection(row1_v.begin(), row1_v.end(), rep.row2_w.begin(), rep.row2_w.end(),
                        std::back_inserter(fresh));
  check(fresh.size() == 1, "Row1(P(v)) and Row2(P(w)) share exactly one value");
  rep.e = fresh.front();
  check(position(rep.e) > i + 1, "e occurs after v(i+1)");
  check(rv.trace.events[static_cast<std::size_t>(position(rep.e) - 1)].bumps.empty(),
        "e bumps nothing in P(v)");

  // e_k: the run elements, then the first value entering column c(e_0) + k.
  const int base_column = rv.trace.column_of(v(i + 1));
  const auto next_e = [&](int k) -> std::optional<int> {
    if (k <= static_cast<int>(rep.e_run.size())) {
      const int value = rep.e_run[static_cast<std::size_t>(k - 1)];
      check(rv.trace.column_of(value) == base_column + k, "e-run enters consecutive columns");
      return value;
    }
    for (int p = 1; p <= n; ++p) {
      if (rv.trace.column_of(v(p)) == base_column + k) return v(p);
    }
    return std::nullopt;
  };
  rep.e_seq.push_back(v(i + 1));
  int r = 0;
  std::optional<int> following = next_e(1);
  while (following && in_sorted(rep.row2_v, *following)) {
    rep.e_seq.push_back(*following);
    ++r;
    following = next_e(r + 1);
  }
  rep.r = r;
  check(following.has_value(), "e_{r+1} exists");
  rep.e_seq.push_back(*following);

  for (int k = 0; k <= r; ++k) {
    const auto bumper = rv.trace.row1_bumper_of(rep.e_seq[static_cast<std::size_t>(k)]);
    check(bumper.has_value(), "every e_k with k <= r is bumped in P(v)");
    rep.t_seq.push_back(*bumper);
  }
  check(rep.t_seq.front() == small, "t_0 = m");
  for (int k = 1; k <= r; ++k) {
    const int prev = rep.t_seq[static_cast<std::size_t>(k - 1)];
    const int cur = rep.t_seq[static_cast<std::size_t>(k)];
    check(prev < cur && position(prev) < position(cur), "t-sequence increases left to right");
  }
  for (int t : rep.t_seq) {
    check(rv.trace.column_of(t) == rw.trace.column_of(t), "each t_k enters the same column in P(v) and P(w)");
  }

  const int e_next = rep.e_seq.back();
  const int e_r = rep.e_seq[static_cast<std::size_t>(r)];
  check(in_sorted(rep.row2_w, e_next) && e_next == rep.e, "e_{r+1} lands in Row2(P(w)) and equals e");
  check(rep.e == e_r + 1, "e = e_r + 1");
  check(e_r - big <= 2 * r + 1, "e_r - M <= 2r + 1");
  check(in_sorted(rep.row2_v, big), "M lies in Row2(P(v))");
  for (int k = 0; k <= r; ++k) {
    check(in_sorted(rep.row2_v, rep.e_seq[static_cast<std::size_t>(k)]), "e_0..e_r lie in Row2(P(v))");
  }
  check(std::includes(rep.row2_w.begin(), rep.row2_w.end(), rep.row2_v.begin(), rep.row2_v.end()),
        "Row2(P(v)) is contained in Row2(P(w))");

  rep.interval_low = big;
  rep.interval_high = rep.e;
  check(rep.e - big + 1 <= 2 * r + 3, "|[M, e]| <= 2r + 3");
  for (int z : rep.row2_w) {
    if (z >= big && z <= rep.e) rep.interval_row2_w.push_back(z);
  }
  check(static_cast<int>(rep.interval_row2_w.size()) >= r + 3, "[M, e] holds r + 3 values of Row2(P(w))");

  // x = r + 1, y = M gives a window of 2r + 3 integers covering [M, e].
  std::vector<int> window;
  for (int z : rep.row2_w) {
    if (z >= big && z <= big + 2 * (r + 1)) window.push_back(z);
  }
  rep.witness = CrowdedWitness{r + 1, big, std::move(window)};
  check(static_cast<int>(rep.witness.window.size()) > r + 2, "witness window violates the bound");
  return rep;
}

}  // namespace fcperm
