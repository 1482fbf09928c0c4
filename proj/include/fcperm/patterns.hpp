#pragma once

#include <optional>
#include <vector>

#include "fcperm/permutation.hpp"

namespace fcperm {

/// An occurrence of `pattern` in a host permutation: the host values at
/// `positions` (strictly increasing, 1-indexed) are order-isomorphic to it.
struct PatternOccurrence {
  std::vector<int> positions;
  Permutation pattern;

  bool is_consecutive() const;
  friend bool operator==(const PatternOccurrence&, const PatternOccurrence&) = default;
};

/// Lexicographically least occurrence of p in w, or nullopt.
/// Throws PreconditionError if p is longer than w.
std::optional<PatternOccurrence> contains_pattern(const Permutation& w, const Permutation& p);

/// Every occurrence of p in w, in lexicographic order of positions.
/// Empty (not an error) when p is longer than w.
std::vector<PatternOccurrence> all_occurrences(const Permutation& w, const Permutation& p);

bool avoids(const Permutation& w, const Permutation& p);

/// Windows [i, i+|p|-1] of w order-isomorphic to p, in increasing i.
/// Empty when p is longer than w.
std::vector<PatternOccurrence> consecutive_occurrences(const Permutation& w,
                                                       const Permutation& p);

/// 321-avoidance. Linear-time scan; agrees with avoids(w, 321).
bool is_fully_commutative(const Permutation& w);

/// Avoids both 321 and 3412.
bool is_boolean(const Permutation& w);

/// True when the values a[0..k) are in the same relative order as p.
bool order_isomorphic(std::span<const int> values, const Permutation& p);

}  // namespace fcperm
