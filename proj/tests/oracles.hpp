#pragma once

// Slow, obviously-correct reference implementations used only by tests.
// None of these call into the library beyond Permutation itself.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "fcperm/permutation.hpp"

namespace oracle {

using fcperm::Permutation;

inline std::vector<int> values(const Permutation& w) {
  return {w.one_line().begin(), w.one_line().end()};
}

inline int inversions(const Permutation& w) {
  int k = 0;
  for (int a = 1; a <= w.degree(); ++a)
    for (int b = a + 1; b <= w.degree(); ++b) k += w(a) > w(b);
  return k;
}

inline bool has_321(const Permutation& w) {
  const int n = w.degree();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        if (w(a) > w(b) && w(b) > w(c)) return true;
  return false;
}

inline bool has_3412(const Permutation& w) {
  const int n = w.degree();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d)
          if (w(c) < w(d) && w(d) < w(a) && w(a) < w(b)) return true;
  return false;
}

// Longest monotone subsequence by checking every position subset (n <= 12).
inline int longest_by_subsets(const Permutation& w, bool increasing) {
  const int n = w.degree();
  int best = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    int prev = -1;
    int len = 0;
    bool ok = true;
    for (int p = 1; p <= n && ok; ++p) {
      if (!(mask & (1u << (p - 1)))) continue;
      if (prev != -1) ok = increasing ? w(p) > prev : w(p) < prev;
      prev = w(p);
      ++len;
    }
    if (ok) best = std::max(best, len);
  }
  return best;
}

// Longest increasing subsequence of w ending at value q, by subsets.
inline int lis_ending_at(const Permutation& w, int q) {
  const int n = w.degree();
  int end = 1;
  while (w(end) != q) ++end;
  int best = 0;
  for (unsigned mask = 0; mask < (1u << (end - 1)); ++mask) {
    int prev = 0;
    int len = 0;
    bool ok = true;
    for (int p = 1; p < end && ok; ++p) {
      if (!(mask & (1u << (p - 1)))) continue;
      ok = w(p) > prev;
      prev = w(p);
      ++len;
    }
    if (ok && prev < q) best = std::max(best, len + 1);
  }
  (void)n;
  return best;
}

inline Permutation swap_positions(const Permutation& w, int i) {
  auto v = values(w);
  std::swap(v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(i)]);
  return Permutation(v);
}

// |R(w)| = sum over descents d of |R(w s_d)|, memoized.
inline long long count_reduced_words(const Permutation& w, std::map<std::vector<int>, long long>& memo) {
  const auto key = values(w);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  long long total = 0;
  bool any = false;
  for (int d = 1; d < w.degree(); ++d) {
    if (w(d) > w(d + 1)) {
      any = true;
      total += count_reduced_words(swap_positions(w, d), memo);
    }
  }
  if (!any) total = 1;
  memo[key] = total;
  return total;
}

// Every window [y, y+2x] with x up to the span and y over a generous range.
inline bool uncrowded_unbounded(const std::vector<int>& set) {
  if (set.empty()) return true;
  const int lo = set.front() - 5;
  const int hi = set.back() + 5;
  for (int x = 1; x <= hi - lo; ++x) {
    for (int y = lo - 2 * x; y <= hi; ++y) {
      long long inside = std::count_if(set.begin(), set.end(), [&](int v) { return v >= y && v <= y + 2 * x; });
      if (inside > x + 1) return false;
    }
  }
  return true;
}

// Elements below w in right weak order by breadth-first descent peeling.
inline std::set<std::vector<int>> ideal_by_peeling(const Permutation& w) {
  std::set<std::vector<int>> seen{values(w)};
  std::vector<Permutation> frontier{w};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& u : frontier) {
      for (int d = 1; d < u.degree(); ++d) {
        if (u(d) < u(d + 1)) continue;
        const auto v = swap_positions(u, d);
        if (seen.insert(values(v)).second) next.push_back(v);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace oracle
