#include "fcperm/weak_order.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

#include "fcperm/crowding.hpp"
#include "fcperm/errors.hpp"
#include "fcperm/patterns.hpp"

namespace fcperm {

std::vector<CoverEdge> up_covers(const Permutation& w) {
  std::vector<CoverEdge> out;
  for (int i = 1; i < w.degree(); ++i) {
    if (w(i) < w(i + 1)) out.push_back(CoverEdge{w, multiply_right(w, SimpleReflection{i}), i});
  }
  return out;
}

std::vector<CoverEdge> down_covers(const Permutation& w) {
  std::vector<CoverEdge> out;
  for (int d = 1; d < w.degree(); ++d) {
    if (w(d) > w(d + 1)) out.push_back(CoverEdge{multiply_right(w, SimpleReflection{d}), w, d});
  }
  return out;
}

bool right_weak_leq(const Permutation& v, const Permutation& w) {
  if (v.degree() != w.degree()) {
    throw PreconditionError("weak order comparison across degrees " + std::to_string(v.degree()) +
                            " and " + std::to_string(w.degree()));
  }
  // Each right cover adds exactly one pair of values to the set
  // {(a, b) : a < b, b left of a}; the order is containment of these sets.
  const Permutation vi = inverse(v);
  const Permutation wi = inverse(w);
  for (int a = 1; a <= v.degree(); ++a) {
    for (int b = a + 1; b <= v.degree(); ++b) {
      if (vi(b) < vi(a) && wi(b) > wi(a)) return false;
    }
  }
  return true;
}

bool left_weak_leq(const Permutation& v, const Permutation& w) {
  if (v.degree() != w.degree()) {
    throw PreconditionError("weak order comparison across degrees " + std::to_string(v.degree()) +
                            " and " + std::to_string(w.degree()));
  }
  return right_weak_leq(inverse(v), inverse(w));
}

std::vector<Permutation> principal_ideal(const Permutation& w, const Limits& limits) {
  const int len = length(w);
  if (len > limits.max_ideal_length) {
    throw LimitExceeded("principal ideal", len, limits.max_ideal_length);
  }
  std::unordered_set<Permutation> seen{w};
  std::deque<Permutation> frontier{w};
  while (!frontier.empty()) {
    Permutation cur = std::move(frontier.front());
    frontier.pop_front();
    for (auto& edge : down_covers(cur)) {
      if (seen.insert(edge.lower).second) frontier.push_back(std::move(edge.lower));
    }
  }
  std::vector<Permutation> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

int FcPoset::find(const Permutation& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? -1 : it->second;
}

CoverEdge FcPoset::cover(const Edge& e) const {
  return CoverEdge{elements_[static_cast<std::size_t>(e.lower)],
                   elements_[static_cast<std::size_t>(e.upper)], e.index};
}

FcPoset build_fc_poset(int n, const Limits& limits) {
  if (n < 1) throw PreconditionError("degree must be >= 1");
  if (n > limits.max_degree) throw LimitExceeded("FC poset", n, limits.max_degree);
  FcPoset poset;
  poset.n_ = n;
  for_each_permutation(n, [&](const Permutation& w) {
    if (is_fully_commutative(w)) poset.elements_.push_back(w);
  });
  for (std::size_t k = 0; k < poset.elements_.size(); ++k) {
    poset.index_.emplace(poset.elements_[k], static_cast<int>(k));
  }
  poset.up_.resize(poset.elements_.size());
  poset.down_.resize(poset.elements_.size());
  for (std::size_t k = 0; k < poset.elements_.size(); ++k) {
    for (const auto& edge : up_covers(poset.elements_[k])) {
      const int upper = poset.find(edge.upper);
      if (upper < 0) continue;
      const int id = static_cast<int>(poset.edges_.size());
      poset.edges_.push_back({static_cast<int>(k), upper, edge.index});
      poset.up_[k].push_back(id);
      poset.down_[static_cast<std::size_t>(upper)].push_back(id);
    }
  }
  return poset;
}

Frontier uncrowded_frontier(const FcPoset& poset) {
  const auto& elements = poset.elements();
  std::vector<bool> crowded(elements.size());
  for (std::size_t k = 0; k < elements.size(); ++k) crowded[k] = is_crowded(elements[k]);

  Frontier out;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    const int id = static_cast<int>(k);
    if (crowded[k]) {
      const auto& below = poset.down_edges(id);
      if (std::none_of(below.begin(), below.end(), [&](int e) {
            return crowded[static_cast<std::size_t>(poset.edges()[static_cast<std::size_t>(e)].lower)];
          })) {
        out.minimal_crowded.push_back(elements[k]);
      }
    } else {
      const auto& above = poset.up_edges(id);
      if (std::none_of(above.begin(), above.end(), [&](int e) {
            return !crowded[static_cast<std::size_t>(poset.edges()[static_cast<std::size_t>(e)].upper)];
          })) {
        out.maximal_uncrowded.push_back(elements[k]);
      }
    }
  }
  return out;
}

Frontier uncrowded_frontier(int n, const Limits& limits) {
  return uncrowded_frontier(build_fc_poset(n, limits));
}

bool is_minimal_crowded_by_covers(const Permutation& w) {
  if (!is_crowded(w)) return false;
  for (const auto& edge : down_covers(w)) {
    if (is_crowded(edge.lower)) return false;
  }
  return true;
}

std::vector<Permutation> knuth_neighbors(const Permutation& w) {
  std::vector<Permutation> out;
  const auto line = w.one_line();
  for (int j = 1; j + 2 <= w.degree(); ++j) {
    const int a = w(j), b = w(j + 1), c = w(j + 2);
    int swap_at = 0;
    // 312 <-> 132: swap the first two when the last letter lies between them.
    if ((b < c && c < a) || (a < c && c < b)) swap_at = j;
    // 231 <-> 213: swap the last two when the first letter lies between them.
    if ((c < a && a < b) || (b < a && a < c)) swap_at = j + 1;
    if (swap_at == 0) continue;
    std::vector<int> image(line.begin(), line.end());
    std::swap(image[static_cast<std::size_t>(swap_at - 1)], image[static_cast<std::size_t>(swap_at)]);
    out.push_back(make_unchecked(std::move(image)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace fcperm
