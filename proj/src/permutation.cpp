#include "fcperm/permutation.hpp"

#include <string>

#include "fcperm/errors.hpp"

namespace fcperm {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = degree();
  if (n == 0) throw PreconditionError("permutation must have degree >= 1");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int j = 0; j < n; ++j) {
    const int v = image_[static_cast<std::size_t>(j)];
    if (v < 1 || v > n) {
      throw PreconditionError("value " + std::to_string(v) + " at position " +
                              std::to_string(j + 1) + " is outside 1.." +
                              std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw PreconditionError("value " + std::to_string(v) + " repeated at position " +
                              std::to_string(j + 1));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation make_unchecked(std::vector<int> image) {
  return Permutation(std::move(image), Permutation::Unchecked{});
}

Permutation make_permutation(std::vector<int> image) { return Permutation(std::move(image)); }

Permutation Permutation::identity(int n) {
  if (n < 1) throw PreconditionError("degree must be >= 1");
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) image[static_cast<std::size_t>(j)] = j + 1;
  return make_unchecked(std::move(image));
}

Permutation Permutation::longest(int n) {
  if (n < 1) throw PreconditionError("degree must be >= 1");
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) image[static_cast<std::size_t>(j)] = n - j;
  return make_unchecked(std::move(image));
}

int Permutation::at(int i) const {
  if (i < 1 || i > degree()) {
    throw PreconditionError("position " + std::to_string(i) + " outside 1.." +
                            std::to_string(degree()));
  }
  return (*this)(i);
}

bool Permutation::is_identity() const noexcept {
  for (int j = 1; j <= degree(); ++j) {
    if ((*this)(j) != j) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.image_.begin(), a.image_.end(),
                                                b.image_.begin(), b.image_.end());
}

int length(const Permutation& w) {
  const int n = w.degree();
  int inversions = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (w(i) > w(j)) ++inversions;
    }
  }
  return inversions;
}

namespace {

void check_reflection(int n, int i) {
  if (i < 1 || i > n - 1) {
    throw PreconditionError("reflection index " + std::to_string(i) + " outside 1.." +
                            std::to_string(n - 1));
  }
}

}  // namespace

Permutation multiply_right(const Permutation& w, SimpleReflection s) {
  check_reflection(w.degree(), s.index);
  std::vector<int> image(w.one_line().begin(), w.one_line().end());
  std::swap(image[static_cast<std::size_t>(s.index - 1)],
            image[static_cast<std::size_t>(s.index)]);
  return make_unchecked(std::move(image));
}

Permutation multiply_left(SimpleReflection s, const Permutation& w) {
  check_reflection(w.degree(), s.index);
  std::vector<int> image(w.one_line().begin(), w.one_line().end());
  for (int& v : image) {
    if (v == s.index) {
      v = s.index + 1;
    } else if (v == s.index + 1) {
      v = s.index;
    }
  }
  return make_unchecked(std::move(image));
}

Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.degree() != v.degree()) {
    throw PreconditionError("cannot compose permutations of degree " +
                            std::to_string(u.degree()) + " and " + std::to_string(v.degree()));
  }
  std::vector<int> image(static_cast<std::size_t>(u.degree()));
  for (int j = 1; j <= u.degree(); ++j) image[static_cast<std::size_t>(j - 1)] = u(v(j));
  return make_unchecked(std::move(image));
}

Permutation inverse(const Permutation& w) {
  std::vector<int> image(static_cast<std::size_t>(w.degree()));
  for (int j = 1; j <= w.degree(); ++j) image[static_cast<std::size_t>(w(j) - 1)] = j;
  return make_unchecked(std::move(image));
}

std::vector<int> descents(const Permutation& w) {
  std::vector<int> out;
  for (int d = 1; d < w.degree(); ++d) {
    if (w(d) > w(d + 1)) out.push_back(d);
  }
  return out;
}

std::vector<int> support(const Permutation& w) {
  // i is in the support iff the prefix w(1..i) is not {1..i}, i.e. its max exceeds i.
  std::vector<int> out;
  int prefix_max = 0;
  for (int i = 1; i < w.degree(); ++i) {
    prefix_max = std::max(prefix_max, w(i));
    if (prefix_max > i) out.push_back(i);
  }
  return out;
}

SupportStats support_stats(const Permutation& v, int i) {
  check_reflection(v.degree(), i);
  int max_prefix = 0;
  for (int j = 1; j <= i; ++j) max_prefix = std::max(max_prefix, v(j));
  int min_suffix = v.degree() + 1;
  for (int j = i + 1; j <= v.degree(); ++j) min_suffix = std::min(min_suffix, v(j));
  return {i, max_prefix, min_suffix};
}

Permutation embed(const Permutation& w, int new_degree) {
  if (new_degree < w.degree()) {
    throw PreconditionError("cannot embed degree " + std::to_string(w.degree()) +
                            " into degree " + std::to_string(new_degree));
  }
  std::vector<int> image(w.one_line().begin(), w.one_line().end());
  for (int j = w.degree() + 1; j <= new_degree; ++j) image.push_back(j);
  return make_unchecked(std::move(image));
}

}  // namespace fcperm
