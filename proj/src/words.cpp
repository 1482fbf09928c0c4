#include "fcperm/words.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "fcperm/errors.hpp"
#include "fcperm/patterns.hpp"

namespace fcperm {

namespace {

void check_letters(std::span<const int> letters, int n) {
  for (std::size_t j = 0; j < letters.size(); ++j) {
    if (letters[j] < 1 || letters[j] > n - 1) {
      throw PreconditionError("letter " + std::to_string(letters[j]) + " at index " +
                              std::to_string(j + 1) + " outside 1.." + std::to_string(n - 1));
    }
  }
}

int degree_for(const std::vector<int>& letters) {
  int top = 0;
  for (int a : letters) top = std::max(top, a);
  return top + 1;
}

// Peels right descents recursively; `suffix` holds the letters chosen so far,
// last letter first.
void collect_words(std::vector<int>& image, std::vector<int>& suffix, int remaining,
                   std::vector<ReducedWord>& out) {
  if (remaining == 0) {
    out.push_back(ReducedWord{std::vector<int>(suffix.rbegin(), suffix.rend())});
    return;
  }
  const int n = static_cast<int>(image.size());
  for (int d = 1; d < n; ++d) {
    auto& left = image[static_cast<std::size_t>(d - 1)];
    auto& right = image[static_cast<std::size_t>(d)];
    if (left < right) continue;
    std::swap(left, right);
    suffix.push_back(d);
    collect_words(image, suffix, remaining - 1, out);
    suffix.pop_back();
    std::swap(left, right);
  }
}

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  std::vector<std::size_t> parent;
};

}  // namespace

Permutation evaluate_word(std::span<const int> letters, int n) {
  check_letters(letters, n);
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  for (int a : letters) {
    std::swap(image[static_cast<std::size_t>(a - 1)], image[static_cast<std::size_t>(a)]);
  }
  return make_unchecked(std::move(image));
}

bool is_reduced(std::span<const int> letters, int n) {
  return length(evaluate_word(letters, n)) == static_cast<int>(letters.size());
}

std::vector<ReducedWord> all_reduced_words(const Permutation& w, const Limits& limits) {
  const int len = length(w);
  if (len > limits.max_word_length) {
    throw LimitExceeded("reduced-word enumeration", len, limits.max_word_length);
  }
  std::vector<int> image(w.one_line().begin(), w.one_line().end());
  std::vector<int> suffix;
  std::vector<ReducedWord> out;
  collect_words(image, suffix, len, out);
  std::sort(out.begin(), out.end());
  return out;
}

ReducedWord canonical_word(const Permutation& w) {
  // s_i w < w iff value i+1 sits left of value i. Taking the smallest such i
  // at every step gives the lexicographically least word.
  std::vector<int> where(static_cast<std::size_t>(w.degree()) + 1);
  for (int j = 1; j <= w.degree(); ++j) where[static_cast<std::size_t>(w(j))] = j;
  ReducedWord word;
  for (;;) {
    int chosen = 0;
    for (int i = 1; i < w.degree(); ++i) {
      if (where[static_cast<std::size_t>(i + 1)] < where[static_cast<std::size_t>(i)]) {
        chosen = i;
        break;
      }
    }
    if (chosen == 0) break;
    std::swap(where[static_cast<std::size_t>(chosen)], where[static_cast<std::size_t>(chosen + 1)]);
    word.letters.push_back(chosen);
  }
  return word;
}

ReducedWord peeled_word(const Permutation& w) {
  std::vector<int> image(w.one_line().begin(), w.one_line().end());
  std::vector<int> reversed;
  for (;;) {
    int chosen = 0;
    for (std::size_t j = 0; j + 1 < image.size(); ++j) {
      if (image[j] > image[j + 1]) {
        chosen = static_cast<int>(j) + 1;
        break;
      }
    }
    if (chosen == 0) break;
    std::swap(image[static_cast<std::size_t>(chosen - 1)], image[static_cast<std::size_t>(chosen)]);
    reversed.push_back(chosen);
  }
  return ReducedWord{std::vector<int>(reversed.rbegin(), reversed.rend())};
}

std::vector<std::vector<ReducedWord>> commutation_classes(const Permutation& w,
                                                          const Limits& limits) {
  const auto words = all_reduced_words(w, limits);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t k = 0; k < words.size(); ++k) index.emplace(words[k].letters, k);

  DisjointSets sets(words.size());
  std::vector<int> moved;
  for (std::size_t k = 0; k < words.size(); ++k) {
    const auto& letters = words[k].letters;
    for (std::size_t j = 0; j + 1 < letters.size(); ++j) {
      if (std::abs(letters[j] - letters[j + 1]) <= 1) continue;
      moved = letters;
      std::swap(moved[j], moved[j + 1]);
      sets.unite(k, index.at(moved));
    }
  }

  // Roots are the least index of each class; words are already sorted, so
  // iterating in order yields sorted classes ordered by their least word.
  std::map<std::size_t, std::size_t> slot;
  std::vector<std::vector<ReducedWord>> classes;
  for (std::size_t k = 0; k < words.size(); ++k) {
    const auto root = sets.find(k);
    auto [it, inserted] = slot.emplace(root, classes.size());
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(words[k]);
  }
  return classes;
}

bool Heap::leq(int x, int y) const {
  if (x == y) return true;
  return below_[static_cast<std::size_t>(y - 1)][static_cast<std::size_t>(x - 1)];
}

std::vector<int> Heap::minimal_elements() const {
  std::vector<int> out;
  for (int y = 1; y <= size(); ++y) {
    const auto& row = below_[static_cast<std::size_t>(y - 1)];
    if (std::none_of(row.begin(), row.end(), [](bool b) { return b; })) out.push_back(y);
  }
  return out;
}

std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> Heap::canonical_form() const {
  // Within one label the chain order agrees with position order.
  std::vector<std::pair<int, int>> name(labels_.size());
  std::map<int, int> seen;
  for (std::size_t x = 0; x < labels_.size(); ++x) {
    name[x] = {labels_[x], seen[labels_[x]]++};
  }
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> form;
  form.reserve(covers_.size());
  for (auto [x, y] : covers_) {
    form.emplace_back(name[static_cast<std::size_t>(x - 1)], name[static_cast<std::size_t>(y - 1)]);
  }
  std::sort(form.begin(), form.end());
  return form;
}

Heap build_heap(const ReducedWord& word) {
  const int n = degree_for(word.letters);
  if (!is_reduced(word.letters, n)) {
    throw PreconditionError("cannot build a heap from a non-reduced word");
  }
  const auto len = word.letters.size();
  Heap heap;
  heap.labels_ = word.letters;
  heap.below_.assign(len, std::vector<bool>(len, false));
  for (std::size_t y = 0; y < len; ++y) {
    for (std::size_t x = 0; x < y; ++x) {
      if (std::abs(word.letters[x] - word.letters[y]) > 1) continue;
      heap.below_[y][x] = true;
      for (std::size_t z = 0; z < x; ++z) {
        if (heap.below_[x][z]) heap.below_[y][z] = true;
      }
    }
  }
  for (std::size_t y = 0; y < len; ++y) {
    for (std::size_t x = 0; x < y; ++x) {
      if (!heap.below_[y][x]) continue;
      bool covered = true;
      for (std::size_t z = x + 1; z < y && covered; ++z) {
        if (heap.below_[z][x] && heap.below_[y][z]) covered = false;
      }
      if (!covered) continue;
      if (std::abs(word.letters[x] - word.letters[y]) != 1) {
        throw InvariantViolation("heap cover with labels " + std::to_string(word.letters[x]) +
                                 " and " + std::to_string(word.letters[y]) +
                                 " that do not differ by one");
      }
      heap.covers_.emplace_back(static_cast<int>(x) + 1, static_cast<int>(y) + 1);
    }
  }
  std::sort(heap.covers_.begin(), heap.covers_.end());
  return heap;
}

namespace {

void extend_linearly(const Heap& h, std::vector<int>& pending_below, std::vector<bool>& used,
                     std::vector<int>& word, std::vector<ReducedWord>& out) {
  const int size = h.size();
  if (static_cast<int>(word.size()) == size) {
    out.push_back(ReducedWord{word});
    return;
  }
  for (int x = 1; x <= size; ++x) {
    const auto ix = static_cast<std::size_t>(x - 1);
    if (used[ix] || pending_below[ix] != 0) continue;
    used[ix] = true;
    word.push_back(h.label(x));
    for (auto [lo, hi] : h.covers()) {
      if (lo == x) --pending_below[static_cast<std::size_t>(hi - 1)];
    }
    extend_linearly(h, pending_below, used, word, out);
    for (auto [lo, hi] : h.covers()) {
      if (lo == x) ++pending_below[static_cast<std::size_t>(hi - 1)];
    }
    word.pop_back();
    used[ix] = false;
  }
}

}  // namespace

std::vector<ReducedWord> labeled_linear_extensions(const Heap& h, const Limits& limits) {
  if (h.size() > limits.max_heap_size) {
    throw LimitExceeded("linear-extension enumeration", h.size(), limits.max_heap_size);
  }
  std::vector<int> pending_below(static_cast<std::size_t>(h.size()), 0);
  for (auto [lo, hi] : h.covers()) ++pending_below[static_cast<std::size_t>(hi - 1)];
  std::vector<bool> used(static_cast<std::size_t>(h.size()), false);
  std::vector<int> word;
  std::vector<ReducedWord> out;
  extend_linearly(h, pending_below, used, word, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CoreDecomposition boolean_core(const Permutation& w) {
  if (!is_fully_commutative(w)) {
    throw PreconditionError("boolean core requires a fully commutative permutation");
  }
  const int n = w.degree();
  const ReducedWord word = peeled_word(w);
  const Heap heap = build_heap(word);

  // The heap-least element of each label forms an order ideal; listing it
  // first (in word order) and the rest after is a linear extension.
  std::vector<bool> in_core(word.letters.size(), false);
  std::vector<bool> label_taken(static_cast<std::size_t>(n), false);
  for (std::size_t x = 0; x < word.letters.size(); ++x) {
    const auto a = static_cast<std::size_t>(word.letters[x]);
    if (!label_taken[a]) {
      label_taken[a] = true;
      in_core[x] = true;
    }
  }
  for (const auto& [lo, hi] : heap.covers()) {
    if (in_core[static_cast<std::size_t>(hi - 1)] && !in_core[static_cast<std::size_t>(lo - 1)]) {
      throw InvariantViolation("least elements per label do not form an order ideal");
    }
  }

  ReducedWord core_word;
  ReducedWord remainder_word;
  for (std::size_t x = 0; x < word.letters.size(); ++x) {
    (in_core[x] ? core_word : remainder_word).letters.push_back(word.letters[x]);
  }
  Permutation core = evaluate_word(core_word.letters, n);
  Permutation remainder = evaluate_word(remainder_word.letters, n);
  if (compose(core, remainder) != w ||
      length(core) + length(remainder) != length(w)) {
    throw InvariantViolation("boolean core factorization is not length additive");
  }
  return CoreDecomposition{std::move(core), std::move(remainder), std::move(core_word),
                           std::move(remainder_word)};
}

}  // namespace fcperm
