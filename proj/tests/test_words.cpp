#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "fcperm/errors.hpp"
#include "fcperm/patterns.hpp"
#include "fcperm/text.hpp"
#include "fcperm/words.hpp"
#include "oracles.hpp"

using namespace fcperm;

namespace {

ReducedWord word(std::string_view text) { return ReducedWord{parse_letters(text)}; }

}  // namespace

TEST_CASE("evaluating words") {
  CHECK(format_permutation(evaluate_word(std::vector<int>{3, 2, 1, 5, 4, 6, 7}, 8), true) == "41263785");
  CHECK(format_permutation(evaluate_word(std::vector<int>{3, 2, 1, 5, 4, 6, 7, 3, 5}, 8), true) == "41627385");
  CHECK(format_permutation(evaluate_word(parse_letters("423241"), 5), true) == "51342");
  CHECK(is_reduced(parse_letters("423241"), 5));
  CHECK_FALSE(is_reduced(parse_letters("11"), 3));
}

TEST_CASE("reduced word counts match the memoized recursion") {
  std::map<std::vector<int>, long long> memo;
  CHECK(all_reduced_words(parse_permutation("4321")).size() == 16);
  for_each_permutation(5, [&](const Permutation& w) {
    const auto words = all_reduced_words(w);
    CHECK(static_cast<long long>(words.size()) == oracle::count_reduced_words(w, memo));
    CHECK(std::is_sorted(words.begin(), words.end()));
    for (const auto& u : words) {
      CHECK(u.size() == length(w));
      CHECK(evaluate_word(u.letters, 5) == w);
    }
  });
}

TEST_CASE("word enumeration respects the length guard") {
  CHECK_THROWS_AS(all_reduced_words(Permutation::longest(6)), LimitExceeded);
  Limits roomy;
  roomy.max_word_length = 15;
  std::map<std::vector<int>, long long> memo;
  CHECK(static_cast<long long>(all_reduced_words(Permutation::longest(6), roomy).size()) ==
        oracle::count_reduced_words(Permutation::longest(6), memo));
}

TEST_CASE("canonical and peeled words") {
  const auto w = parse_permutation("51342");
  const auto words = all_reduced_words(w);
  CHECK(canonical_word(w) == words.front());
  CHECK(evaluate_word(peeled_word(w).letters, 5) == w);
  CHECK(canonical_word(Permutation::identity(3)).letters.empty());
}

TEST_CASE("commutation classes") {
  CHECK(commutation_classes(parse_permutation("321")).size() == 2);
  CHECK(commutation_classes(parse_permutation("41627385")).size() == 1);
  CHECK(commutation_classes(parse_permutation("2143")).size() == 1);
  CHECK(commutation_classes(parse_permutation("2143")).front().size() == 2);
  // 51342 contains 321 (values 5, 3, 2), so it splits.
  CHECK(oracle::has_321(parse_permutation("51342")));
  CHECK(commutation_classes(parse_permutation("51342")).size() > 1);
  for_each_permutation(5, [](const Permutation& w) {
    CHECK((commutation_classes(w).size() == 1) == is_fully_commutative(w));
  });
}

TEST_CASE("heap of 345619278") {
  const auto w = parse_permutation("345619278");
  const auto words = all_reduced_words(w);
  const Heap h = build_heap(words.front());
  CHECK(h.size() == 11);

  const auto ext = labeled_linear_extensions(h);
  CHECK(ext == words);
  CHECK(std::binary_search(ext.begin(), ext.end(), word("87234561234")));
  CHECK(std::binary_search(ext.begin(), ext.end(), word("23451234876")));

  // Expected covers, naming each element (label, copy index from the bottom).
  using Name = std::pair<int, int>;
  std::vector<std::pair<Name, Name>> expected{
      {{2, 0}, {1, 0}}, {{2, 0}, {3, 0}}, {{3, 0}, {4, 0}}, {{4, 0}, {5, 0}}, {{5, 0}, {6, 0}},
      {{7, 0}, {6, 0}}, {{8, 0}, {7, 0}}, {{1, 0}, {2, 1}}, {{2, 1}, {3, 1}}, {{3, 1}, {4, 1}},
      {{3, 0}, {2, 1}}, {{4, 0}, {3, 1}}, {{5, 0}, {4, 1}}};
  std::sort(expected.begin(), expected.end());
  for (const auto& u : {word("87234561234"), word("23451234876")}) {
    CHECK(build_heap(u).canonical_form() == expected);
  }
}

TEST_CASE("heap order against the definition") {
  const Heap h = build_heap(word("21324354876"));
  for (int x = 1; x <= h.size(); ++x) {
    for (int y = 1; y <= h.size(); ++y) {
      if (x < y && std::abs(h.label(x) - h.label(y)) <= 1) CHECK(h.less(x, y));
      if (h.less(x, y)) CHECK(x < y);
    }
  }
  CHECK(h.minimal_elements() == std::vector<int>{1, 9});
}

TEST_CASE("linear extension count matches brute force over orderings") {
  for (const auto* text : {"2132", "13243", "214365", "1"}) {
    const auto u = word(text);
    const Heap h = build_heap(u);
    std::vector<int> order(static_cast<std::size_t>(h.size()));
    for (int x = 0; x < h.size(); ++x) order[static_cast<std::size_t>(x)] = x + 1;
    std::set<std::vector<int>> brute;
    do {
      bool ok = true;
      for (std::size_t a = 0; a < order.size() && ok; ++a)
        for (std::size_t b = a + 1; b < order.size() && ok; ++b) ok = !h.less(order[b], order[a]);
      if (!ok) continue;
      std::vector<int> letters;
      for (int x : order) letters.push_back(h.label(x));
      brute.insert(letters);
    } while (std::next_permutation(order.begin(), order.end()));
    CHECK(labeled_linear_extensions(h).size() == brute.size());
  }
}

TEST_CASE("heaps need reduced words; extensions obey the size guard") {
  CHECK_THROWS_AS(build_heap(word("11")), PreconditionError);
  Limits tight;
  tight.max_heap_size = 3;
  CHECK_THROWS_AS(labeled_linear_extensions(build_heap(word("1324")), tight), LimitExceeded);
}

TEST_CASE("boolean cores") {
  const auto a = boolean_core(parse_permutation("345619278"));
  CHECK(format_permutation(a.core, true) == "314569278");
  CHECK(format_permutation(boolean_core(parse_permutation("41623785")).core, true) == "41263785");
  CHECK(format_permutation(boolean_core(parse_permutation("41627385")).core, true) == "41263785");
  CHECK(boolean_core(parse_permutation("315264")).core == parse_permutation("315264"));
  CHECK(boolean_core(Permutation::identity(4)).core.is_identity());
  CHECK_THROWS_AS(boolean_core(parse_permutation("321")), PreconditionError);
}

TEST_CASE("word examples") {
  const auto words = all_reduced_words(parse_permutation("51342"));
  CHECK(std::binary_search(words.begin(), words.end(), word("423241")));
  CHECK(all_reduced_words(parse_permutation("12435")) == std::vector<ReducedWord>{word("3")});
  CHECK(evaluate_word(std::vector<int>{}, 5).is_identity());
  const auto cls = commutation_classes(parse_permutation("321"));
  REQUIRE(cls.size() == 2);
  CHECK(cls[0] == std::vector<ReducedWord>{word("121")});
  CHECK(cls[1] == std::vector<ReducedWord>{word("212")});
  CHECK(commutation_classes(parse_permutation("2143")).front() == std::vector<ReducedWord>{word("13"), word("31")});
  const Heap h = build_heap(word("87234561234"));
  // Copies of 2 are comparable; the 2s and the 8 are not.
  std::vector<int> twos;
  int eight = 0;
  for (int x = 1; x <= h.size(); ++x) {
    if (h.label(x) == 2) twos.push_back(x);
    if (h.label(x) == 8) eight = x;
  }
  REQUIRE(twos.size() == 2);
  CHECK(h.less(twos[0], twos[1]));
  for (int t : twos) CHECK((!h.leq(t, eight) && !h.leq(eight, t)));
  const Heap single = build_heap(word("4"));
  CHECK(single.covers().empty());
  CHECK(labeled_linear_extensions(single) == std::vector<ReducedWord>{word("4")});
}
