#pragma once

#include <unordered_map>
#include <vector>

#include "fcperm/limits.hpp"
#include "fcperm/permutation.hpp"

namespace fcperm {

/// upper = lower * s_index, one longer than lower.
struct CoverEdge {
  Permutation lower;
  Permutation upper;
  int index;
  friend bool operator==(const CoverEdge&, const CoverEdge&) = default;
};

/// Ascents of w, as edges w -> w s_i, in increasing i.
std::vector<CoverEdge> up_covers(const Permutation& w);
/// Descents of w, as edges w s_d -> w, in increasing d.
std::vector<CoverEdge> down_covers(const Permutation& w);

/// v <= w in right weak order: the value-inversion set of v is contained in
/// that of w. Throws PreconditionError on degree mismatch.
bool right_weak_leq(const Permutation& v, const Permutation& w);

/// v <= w in left weak order, decided as inverse(v) <= inverse(w) on the right.
bool left_weak_leq(const Permutation& v, const Permutation& w);

/// Every v <= w in right weak order, by downward search, sorted.
/// Throws LimitExceeded if length(w) > limits.max_ideal_length.
std::vector<Permutation> principal_ideal(const Permutation& w, const Limits& limits = {});

/// The fully commutative elements of S_n under right weak order, with all
/// covers between them. Elements are in lexicographic one-line order;
/// edges are indices into `elements`.
class FcPoset {
 public:
  struct Edge {
    int lower;
    int upper;
    int index;  // reflection index
  };

  int degree() const noexcept { return n_; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Index of w in elements(), or -1 if w is not an element.
  int find(const Permutation& w) const;

  /// Edge indices out of / into element k.
  const std::vector<int>& up_edges(int k) const { return up_[static_cast<std::size_t>(k)]; }
  const std::vector<int>& down_edges(int k) const { return down_[static_cast<std::size_t>(k)]; }

  CoverEdge cover(const Edge& e) const;

 private:
  friend FcPoset build_fc_poset(int n, const Limits& limits);

  int n_ = 0;
  std::vector<Permutation> elements_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> up_;
  std::vector<std::vector<int>> down_;
  std::unordered_map<Permutation, int> index_;
};

/// Throws LimitExceeded if n > limits.max_degree.
FcPoset build_fc_poset(int n, const Limits& limits = {});

struct Frontier {
  std::vector<Permutation> maximal_uncrowded;
  std::vector<Permutation> minimal_crowded;
};

/// Maximal elements of the uncrowded ideal and minimal elements of the
/// crowded filter of the FC poset.
Frontier uncrowded_frontier(const FcPoset& poset);
Frontier uncrowded_frontier(int n, const Limits& limits = {});

/// Crowded, and every down-cover (all FC) is uncrowded. FC input only.
bool is_minimal_crowded_by_covers(const Permutation& w);

/// Permutations one Knuth relation away (consecutive 312 <-> 132 or
/// 231 <-> 213), sorted and distinct.
std::vector<Permutation> knuth_neighbors(const Permutation& w);

}  // namespace fcperm
