#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <type_traits>
#include <vector>

namespace fcperm {

/// A permutation of {1..n} in one-line notation w(1) w(2) ... w(n).
///
/// Positions and values are 1-indexed at the interface. Instances are
/// immutable once constructed and always hold a bijection of degree n >= 1.
/// Ordering is lexicographic on the one-line notation (shorter degree first).
class Permutation {
 public:
  /// Validates that `image` is a rearrangement of 1..n with n >= 1.
  /// Throws PreconditionError naming the offending entry otherwise.
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);
  /// The long element n (n-1) ... 2 1.
  static Permutation longest(int n);

  int degree() const noexcept { return static_cast<int>(image_.size()); }

  /// w(i) for 1 <= i <= n. Unchecked.
  int operator()(int i) const noexcept { return image_[static_cast<std::size_t>(i - 1)]; }
  /// w(i) with a range check.
  int at(int i) const;

  std::span<const int> one_line() const noexcept { return image_; }

  bool is_identity() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b);

 private:
  struct Unchecked {};
  Permutation(std::vector<int> image, Unchecked) : image_(std::move(image)) {}

  std::vector<int> image_;

  friend Permutation make_unchecked(std::vector<int> image);
};

/// Builds a permutation from an already-validated image. Internal fast path
/// for enumeration loops; callers guarantee the bijection invariant.
Permutation make_unchecked(std::vector<int> image);

/// Checked construction; same as the constructor, provided as a free function.
Permutation make_permutation(std::vector<int> image);

struct SimpleReflection {
  int index;  // s_i swaps positions i and i+1 under right multiplication
};

/// Support statistics for reflection index i (i is in supp(v) iff M > m):
/// M = max{v(j) : j <= i}, m = min{v(j) : j >= i+1}.
struct SupportStats {
  int i;
  int max_prefix;  // M
  int min_suffix;  // m
};

/// Number of inversions, i.e. the Coxeter length.
int length(const Permutation& w);

/// w * s_i: positions i and i+1 swapped. Throws PreconditionError if
/// i is not in [1, n-1].
Permutation multiply_right(const Permutation& w, SimpleReflection s);

/// s_i * w: values i and i+1 swapped.
Permutation multiply_left(SimpleReflection s, const Permutation& w);

/// Composition (u * v)(j) = u(v(j)). Degrees must match.
Permutation compose(const Permutation& u, const Permutation& v);

Permutation inverse(const Permutation& w);

/// Sorted positions d with w(d) > w(d+1).
std::vector<int> descents(const Permutation& w);

/// Sorted indices i with {w(1)..w(i)} != {1..i}. Equals the letter set of
/// any reduced word of w.
std::vector<int> support(const Permutation& w);

/// Throws PreconditionError unless 1 <= i <= n-1.
SupportStats support_stats(const Permutation& v, int i);

/// Pads w with fixed points n+1..new_degree. new_degree must be >= n.
Permutation embed(const Permutation& w, int new_degree);

/// Calls `fn` for every permutation of degree n in lexicographic order.
/// `fn` may return false to stop early.
template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) image[static_cast<std::size_t>(j)] = j + 1;
  do {
    if constexpr (std::is_same_v<std::invoke_result_t<Fn&, const Permutation&>, bool>) {
      if (!fn(make_unchecked(image))) return;
    } else {
      fn(make_unchecked(image));
    }
  } while (std::next_permutation(image.begin(), image.end()));
}

}  // namespace fcperm

template <>
struct std::hash<fcperm::Permutation> {
  std::size_t operator()(const fcperm::Permutation& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : w.one_line()) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};
