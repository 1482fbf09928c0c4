#include "fcperm/patterns.hpp"

#include <string>

#include "fcperm/errors.hpp"

namespace fcperm {

namespace {

const Permutation& pattern_3412() {
  static const Permutation p({3, 4, 1, 2});
  return p;
}

// Depth-first search over positions in increasing order. The first complete
// match found is therefore the lexicographically least one.
class Matcher {
 public:
  Matcher(const Permutation& host, const Permutation& pattern)
      : host_(host), pattern_(pattern), chosen_(static_cast<std::size_t>(pattern.degree())) {}

  template <typename Sink>
  bool run(Sink&& sink) {
    return extend(0, 1, sink);
  }

  const std::vector<int>& positions() const { return chosen_; }

 private:
  // Returns true to stop the search.
  template <typename Sink>
  bool extend(int depth, int first_position, Sink& sink) {
    const int k = pattern_.degree();
    if (depth == k) return sink(chosen_);
    const int n = host_.degree();
    for (int pos = first_position; pos <= n - (k - depth - 1); ++pos) {
      if (!consistent(depth, pos)) continue;
      chosen_[static_cast<std::size_t>(depth)] = pos;
      if (extend(depth + 1, pos + 1, sink)) return true;
    }
    return false;
  }

  bool consistent(int depth, int pos) const {
    const int value = host_(pos);
    const int pattern_value = pattern_(depth + 1);
    for (int j = 0; j < depth; ++j) {
      const bool host_less = host_(chosen_[static_cast<std::size_t>(j)]) < value;
      const bool pattern_less = pattern_(j + 1) < pattern_value;
      if (host_less != pattern_less) return false;
    }
    return true;
  }

  const Permutation& host_;
  const Permutation& pattern_;
  std::vector<int> chosen_;
};

}  // namespace

bool PatternOccurrence::is_consecutive() const {
  for (std::size_t j = 1; j < positions.size(); ++j) {
    if (positions[j] != positions[j - 1] + 1) return false;
  }
  return true;
}

bool order_isomorphic(std::span<const int> values, const Permutation& p) {
  if (static_cast<int>(values.size()) != p.degree()) return false;
  for (int a = 0; a < p.degree(); ++a) {
    for (int b = a + 1; b < p.degree(); ++b) {
      const bool host_less = values[static_cast<std::size_t>(a)] < values[static_cast<std::size_t>(b)];
      if (host_less != (p(a + 1) < p(b + 1))) return false;
    }
  }
  return true;
}

std::optional<PatternOccurrence> contains_pattern(const Permutation& w, const Permutation& p) {
  if (p.degree() > w.degree()) {
    throw PreconditionError("pattern of degree " + std::to_string(p.degree()) +
                            " is longer than host of degree " + std::to_string(w.degree()));
  }
  Matcher matcher(w, p);
  std::optional<PatternOccurrence> found;
  matcher.run([&](const std::vector<int>& positions) {
    found = PatternOccurrence{positions, p};
    return true;
  });
  return found;
}

std::vector<PatternOccurrence> all_occurrences(const Permutation& w, const Permutation& p) {
  std::vector<PatternOccurrence> out;
  if (p.degree() > w.degree()) return out;
  Matcher matcher(w, p);
  matcher.run([&](const std::vector<int>& positions) {
    out.push_back(PatternOccurrence{positions, p});
    return false;
  });
  return out;
}

bool avoids(const Permutation& w, const Permutation& p) {
  if (p.degree() > w.degree()) return true;
  return !contains_pattern(w, p).has_value();
}

std::vector<PatternOccurrence> consecutive_occurrences(const Permutation& w,
                                                       const Permutation& p) {
  std::vector<PatternOccurrence> out;
  const int k = p.degree();
  const auto line = w.one_line();
  for (int start = 1; start + k - 1 <= w.degree(); ++start) {
    if (order_isomorphic(line.subspan(static_cast<std::size_t>(start - 1), static_cast<std::size_t>(k)), p)) {
      std::vector<int> positions(static_cast<std::size_t>(k));
      for (int j = 0; j < k; ++j) positions[static_cast<std::size_t>(j)] = start + j;
      out.push_back(PatternOccurrence{std::move(positions), p});
    }
  }
  return out;
}

bool is_fully_commutative(const Permutation& w) {
  // A 321 exists iff some middle entry has a larger entry to its left and a
  // smaller one to its right.
  const int n = w.degree();
  std::vector<int> suffix_min(static_cast<std::size_t>(n) + 2, n + 1);
  for (int j = n; j >= 1; --j) {
    suffix_min[static_cast<std::size_t>(j)] =
        std::min(suffix_min[static_cast<std::size_t>(j) + 1], w(j));
  }
  int prefix_max = 0;
  for (int j = 1; j <= n; ++j) {
    if (prefix_max > w(j) && suffix_min[static_cast<std::size_t>(j) + 1] < w(j)) return false;
    prefix_max = std::max(prefix_max, w(j));
  }
  return true;
}

bool is_boolean(const Permutation& w) {
  return is_fully_commutative(w) && avoids(w, pattern_3412());
}

}  // namespace fcperm
