#include "fcperm/crowding.hpp"

#include <algorithm>

#include "fcperm/errors.hpp"
#include "fcperm/patterns.hpp"
#include "fcperm/words.hpp"

namespace fcperm {

namespace {

std::vector<int> sorted_unique(std::span<const int> set) {
  std::vector<int> out(set.begin(), set.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> window_of(const std::vector<int>& sorted, int lo, int hi) {
  auto first = std::lower_bound(sorted.begin(), sorted.end(), lo);
  auto last = std::upper_bound(sorted.begin(), sorted.end(), hi);
  return {first, last};
}

void require_fc(const Permutation& w, const char* what) {
  if (!is_fully_commutative(w)) {
    throw PreconditionError(std::string(what) + " requires a fully commutative permutation");
  }
}

const Permutation& pattern_415263() {
  static const Permutation p({4, 1, 5, 2, 6, 3});
  return p;
}

const Permutation& pattern_315264() {
  static const Permutation p({3, 1, 5, 2, 6, 4});
  return p;
}

}  // namespace

std::optional<CrowdedWitness> find_crowded_window(std::span<const int> set) {
  const auto sorted = sorted_unique(set);
  if (sorted.size() < 3) return std::nullopt;
  const int lo = sorted.front();
  const int hi = sorted.back();
  for (int x = 1; lo + 2 * x <= hi; ++x) {
    for (int y = lo; y + 2 * x <= hi; ++y) {
      auto window = window_of(sorted, y, y + 2 * x);
      if (static_cast<int>(window.size()) > x + 1) {
        return CrowdedWitness{x, y, std::move(window)};
      }
    }
  }
  return std::nullopt;
}

bool is_uncrowded_set(std::span<const int> set) { return !find_crowded_window(set).has_value(); }

std::vector<int> minimal_crowded_shape(int x, int y) {
  if (x < 1) throw PreconditionError("S_{x,y} needs x >= 1");
  if (x == 1) return {y, y + 1, y + 2};
  std::vector<int> out{y, y + 1};
  for (int k = 3; k <= 2 * x - 1; k += 2) out.push_back(y + k);
  out.push_back(y + 2 * x);
  return out;
}

MinimalCrowdedSet minimal_crowded_subset(std::span<const int> set) {
  const auto sorted = sorted_unique(set);
  if (!find_crowded_window(sorted)) {
    throw PreconditionError("set is uncrowded; it has no crowded subset");
  }
  const auto contains = [&](int v) { return std::binary_search(sorted.begin(), sorted.end(), v); };
  for (auto y_it = sorted.rbegin(); y_it != sorted.rend(); ++y_it) {
    const int y = *y_it;
    for (int x = 1; y + 2 * x <= sorted.back(); ++x) {
      auto shape = minimal_crowded_shape(x, y);
      if (std::all_of(shape.begin(), shape.end(), contains)) {
        return MinimalCrowdedSet{x, y, std::move(shape)};
      }
    }
  }
  throw InvariantViolation("crowded set contains no S_{x,y}");
}

Classification classify(const Permutation& w) {
  require_fc(w, "classify");
  Classification out;
  out.row2 = row2(w);
  out.witness = find_crowded_window(out.row2);
  out.crowded = out.witness.has_value();
  return out;
}

bool is_crowded(const Permutation& w) { return classify(w).crowded; }

bool uncrowded_iff_core(const Permutation& w) {
  require_fc(w, "uncrowded_iff_core");
  const bool uncrowded = !classify(w).crowded;
  const bool same_tableau = rsk(boolean_core(w).core).p == rsk(w).p;
  if (uncrowded != same_tableau) {
    throw InvariantViolation("uncrowded verdict disagrees with P(core) == P(w)");
  }
  return uncrowded;
}

MinimalityReport is_minimal_crowded_direct(const Permutation& w) {
  require_fc(w, "is_minimal_crowded_direct");
  const int n = w.degree();
  MinimalityReport rep;
  rep.row2 = row2(w);

  // (d) does not depend on the descent structure.
  const auto occurrences = all_occurrences(w, pattern_415263());
  rep.pattern_415263_consecutive =
      !occurrences.empty() &&
      std::all_of(occurrences.begin(), occurrences.end(),
                  [](const PatternOccurrence& o) { return o.is_consecutive(); });

  const auto des = descents(w);
  if (des.empty()) return rep;
  rep.d = des.front();
  for (std::size_t j = 1; j < des.size(); ++j) {
    if (des[j] != des[j - 1] + 2) return rep;  // not of the form d, d+2, ...
  }
  const int d = rep.d;
  const int k = static_cast<int>(des.size()) - 1;
  rep.k = k;
  rep.descents_alternate = k >= 2;

  std::vector<int> peaks;
  for (int j = 0; j <= k; ++j) peaks.push_back(w(d + 2 * j));
  rep.peaks_crowded = find_crowded_window(peaks).has_value();

  rep.fixes_outside = true;
  for (int p = 1; p <= n; ++p) {
    if ((p < d || p > d + 2 * k + 1) && w(p) != p) rep.fixes_outside = false;
  }

  rep.windows_match = true;
  const auto line = w.one_line();
  for (int j = 0; j <= k - 2; ++j) {
    const int start = d + 2 * j;
    if (start + 5 > n) {
      rep.windows_match = false;
      break;
    }
    const auto window = line.subspan(static_cast<std::size_t>(start - 1), 6);
    if (!order_isomorphic(window, pattern_415263()) &&
        !order_isomorphic(window, pattern_315264())) {
      rep.windows_match = false;
      break;
    }
  }
  return rep;
}

}  // namespace fcperm
