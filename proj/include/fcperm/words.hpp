#pragma once

#include <compare>
#include <span>
#include <utility>
#include <vector>

#include "fcperm/limits.hpp"
#include "fcperm/permutation.hpp"

namespace fcperm {

/// A sequence of simple-reflection indices. Reducedness is a property of the
/// letters alone (it does not depend on the ambient degree), so the word
/// carries no degree; operations that need one check it.
struct ReducedWord {
  std::vector<int> letters;

  int size() const noexcept { return static_cast<int>(letters.size()); }
  friend auto operator<=>(const ReducedWord&, const ReducedWord&) = default;
};

/// The product s_{a1} s_{a2} ... s_{ak} in S_n. No reducedness requirement.
/// Throws PreconditionError for letters outside 1..n-1.
Permutation evaluate_word(std::span<const int> letters, int n);

/// True iff the product of `letters` has length equal to the word length.
bool is_reduced(std::span<const int> letters, int n);

/// R(w), sorted lexicographically. Throws LimitExceeded when
/// length(w) > limits.max_word_length.
std::vector<ReducedWord> all_reduced_words(const Permutation& w, const Limits& limits = {});

/// Lexicographically least reduced word (greedy smallest left descent).
ReducedWord canonical_word(const Permutation& w);

/// Reduced word obtained by repeatedly peeling the smallest (right) descent.
ReducedWord peeled_word(const Permutation& w);

/// Partition of R(w) into commutation classes. Each class is sorted; classes
/// are ordered by their least word.
std::vector<std::vector<ReducedWord>> commutation_classes(const Permutation& w,
                                                          const Limits& limits = {});

/// Heap of a reduced word: the poset on elements 1..l generated by x < y
/// whenever x < y as positions and |u_x - u_y| <= 1, with u_x as labels.
class Heap {
 public:
  int size() const noexcept { return static_cast<int>(labels_.size()); }
  int label(int x) const { return labels_[static_cast<std::size_t>(x - 1)]; }
  const std::vector<int>& labels() const noexcept { return labels_; }

  /// x <= y in the heap order (reflexive).
  bool leq(int x, int y) const;
  /// x < y strictly.
  bool less(int x, int y) const { return x != y && leq(x, y); }

  /// Cover pairs (x, y), meaning y covers x, sorted.
  const std::vector<std::pair<int, int>>& covers() const noexcept { return covers_; }

  /// Elements with no element below them, in increasing order.
  std::vector<int> minimal_elements() const;

  /// Label-preserving canonical form. Elements sharing a label form a chain,
  /// so each element is named (label, rank within its label chain); the
  /// result is the sorted cover list in those names. Two heaps are
  /// isomorphic as labeled posets iff their canonical forms are equal.
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> canonical_form() const;

 private:
  friend Heap build_heap(const ReducedWord& word);

  std::vector<int> labels_;
  std::vector<std::vector<bool>> below_;  // below_[y][x]: x < y strictly (0-based)
  std::vector<std::pair<int, int>> covers_;
};

/// Throws PreconditionError if the word is not reduced.
Heap build_heap(const ReducedWord& word);

/// Words read off the linear extensions of h, sorted. Throws LimitExceeded
/// when h.size() > limits.max_heap_size.
std::vector<ReducedWord> labeled_linear_extensions(const Heap& h, const Limits& limits = {});

/// w = core * remainder with lengths adding, core boolean, same support.
struct CoreDecomposition {
  Permutation core;
  Permutation remainder;
  ReducedWord core_word;
  ReducedWord remainder_word;
};

/// The boolean core of a fully commutative permutation. Throws
/// PreconditionError for non-FC input.
CoreDecomposition boolean_core(const Permutation& w);

}  // namespace fcperm
