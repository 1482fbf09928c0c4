#include <algorithm>

#include "doctest.h"
#include "fcperm/crowding.hpp"
#include "fcperm/errors.hpp"
#include "fcperm/patterns.hpp"
#include "fcperm/rsk.hpp"
#include "fcperm/text.hpp"
#include "fcperm/words.hpp"
#include "oracles.hpp"

using namespace fcperm;

namespace {

std::vector<int> subset_of_mask(unsigned mask, int universe) {
  std::vector<int> out;
  for (int v = 1; v <= universe; ++v) {
    if (mask & (1u << (v - 1))) out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("window scan on the example sets") {
  const auto wit = find_crowded_window(std::vector<int>{4, 6, 7, 8});
  REQUIRE(wit);
  CHECK(wit->x == 1);
  CHECK(wit->y == 6);
  CHECK(wit->window == std::vector<int>{6, 7, 8});
  CHECK(is_uncrowded_set(std::vector<int>{4, 6, 7}));
  CHECK(is_uncrowded_set(std::vector<int>{3, 5, 6}));
  CHECK_FALSE(is_uncrowded_set(std::vector<int>{4, 5, 6}));
  CHECK(is_uncrowded_set(std::vector<int>{}));
}

TEST_CASE("window scan agrees with an unbounded scan on all subsets of 1..10") {
  for (unsigned mask = 0; mask < (1u << 10); ++mask) {
    const auto set = subset_of_mask(mask, 10);
    const bool fast = is_uncrowded_set(set);
    CHECK(fast == oracle::uncrowded_unbounded(set));
    if (auto wit = find_crowded_window(set)) {
      const long long inside = std::count_if(set.begin(), set.end(), [&](int v) {
        return v >= wit->y && v <= wit->y + 2 * wit->x;
      });
      CHECK(inside > wit->x + 1);
      CHECK(static_cast<long long>(wit->window.size()) == inside);
    }
  }
}

TEST_CASE("minimal crowded shapes") {
  CHECK(minimal_crowded_shape(1, 6) == std::vector<int>{6, 7, 8});
  CHECK(minimal_crowded_shape(2, 4) == std::vector<int>{4, 5, 7, 8});
  CHECK(minimal_crowded_shape(3, 1) == std::vector<int>{1, 2, 4, 6, 7});
  for (int x = 1; x <= 4; ++x) {
    const auto s = minimal_crowded_shape(x, 2);
    CHECK_FALSE(is_uncrowded_set(s));
    for (std::size_t k = 0; k < s.size(); ++k) {
      auto smaller = s;
      smaller.erase(smaller.begin() + static_cast<long>(k));
      CHECK(is_uncrowded_set(smaller));
    }
  }
}

TEST_CASE("minimal crowded subsets are minimal under removal") {
  for (unsigned mask = 0; mask < (1u << 10); ++mask) {
    const auto set = subset_of_mask(mask, 10);
    if (is_uncrowded_set(set)) {
      CHECK_THROWS_AS(minimal_crowded_subset(set), PreconditionError);
      continue;
    }
    const auto m = minimal_crowded_subset(set);
    CHECK(std::includes(set.begin(), set.end(), m.elements.begin(), m.elements.end()));
    CHECK(m.elements == minimal_crowded_shape(m.x, m.y));
    CHECK_FALSE(is_uncrowded_set(m.elements));
    for (std::size_t k = 0; k < m.elements.size(); ++k) {
      auto smaller = m.elements;
      smaller.erase(smaller.begin() + static_cast<long>(k));
      CHECK(is_uncrowded_set(smaller));
    }
  }
}

TEST_CASE("classification of the examples") {
  const auto c = classify(parse_permutation("41627385"));
  CHECK(c.crowded);
  REQUIRE(c.witness);
  CHECK(c.witness->window == std::vector<int>{6, 7, 8});
  CHECK_FALSE(classify(parse_permutation("41623785")).crowded);
  CHECK_FALSE(is_crowded(Permutation::identity(1)));
  CHECK_THROWS_AS(classify(parse_permutation("321")), PreconditionError);
  CHECK(uncrowded_iff_core(parse_permutation("41623785")));
  CHECK_FALSE(uncrowded_iff_core(parse_permutation("41627385")));
}

TEST_CASE("no crowded FC permutations below degree 6") {
  for (int n = 1; n <= 5; ++n) {
    for_each_permutation(n, [](const Permutation& w) {
      if (is_fully_commutative(w)) CHECK_FALSE(is_crowded(w));
    });
  }
}

TEST_CASE("transition 41623785 -> 41627385") {
  const auto v = parse_permutation("41623785");
  REQUIRE(is_qualifying_transition(v, 5));
  const auto rep = analyze_transition(v, 5);
  CHECK(format_permutation(rep.w, true) == "41627385");
  CHECK(rep.max_prefix == 6);
  CHECK(rep.min_suffix == 5);
  std::vector<int> vals;
  for (int p : rep.pattern3142) vals.push_back(v(p));
  CHECK(vals == std::vector<int>{6, 3, 7, 5});
  CHECK(rep.e == 8);
  CHECK(rep.r == 0);
  CHECK(rep.e_seq == std::vector<int>{7, 8});
  CHECK(rep.t_seq == std::vector<int>{5});
  CHECK(rep.interval_low == 6);
  CHECK(rep.interval_high == 8);
  CHECK(rep.interval_row2_w.size() == 3);
  CHECK(rep.witness.x == 1);
  CHECK(rep.witness.y == 6);
  CHECK_FALSE(is_uncrowded_set(rep.witness.window));
}

TEST_CASE("transition hypotheses are named") {
  auto reason = [](const char* perm, int i) {
    try {
      analyze_transition(parse_permutation(perm), i);
    } catch (const PreconditionError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(reason("321", 1).find("fully commutative") != std::string::npos);
  CHECK_FALSE(reason("41623785", 4).empty());   // 4 is a descent of v
  CHECK_FALSE(reason("41623785", 9).empty());   // out of range
  CHECK_FALSE(reason("12345", 2).empty());      // 2 is outside the support
  CHECK_FALSE(is_qualifying_transition(parse_permutation("12345"), 2));
}

TEST_CASE("five-condition report for 41627385") {
  const auto m = is_minimal_crowded_direct(parse_permutation("41627385"));
  CHECK(m.descents_alternate);
  CHECK(m.peaks_crowded);
  CHECK(m.fixes_outside);
  CHECK(m.pattern_415263_consecutive);
  CHECK(m.windows_match);
  CHECK(m.minimal());
  CHECK(m.d == 1);
  CHECK(m.k == 3);
  CHECK_FALSE(is_minimal_crowded_direct(parse_permutation("41623785")).minimal());
  CHECK(is_minimal_crowded_direct(embed(parse_permutation("415263"), 8)).minimal());
  CHECK_FALSE(is_minimal_crowded_direct(embed(parse_permutation("315264"), 8)).minimal());
}

TEST_CASE("small set examples") {
  const auto wit = find_crowded_window(std::vector<int>{4, 5, 6});
  REQUIRE(wit);
  CHECK(wit->x == 1);
  CHECK(wit->y == 4);
  const auto m = minimal_crowded_subset(std::vector<int>{4, 6, 7, 8});
  CHECK(m.x == 1);
  CHECK(m.y == 6);
  CHECK(m.elements == std::vector<int>{6, 7, 8});
  CHECK(minimal_crowded_subset(std::vector<int>{4, 5, 6}).elements == std::vector<int>{4, 5, 6});
  CHECK_THROWS_AS(analyze_transition(Permutation::identity(5), 2), PreconditionError);
}

TEST_CASE("uncrowded permutations are never reported minimal") {
  // (b) alone can hold: 13627485 has crowded peaks {6,7,8} but is not fixed
  // outside its descent span, so its second row is not the peak set.
  CHECK(is_minimal_crowded_direct(parse_permutation("13627485")).peaks_crowded);
  CHECK_FALSE(is_crowded(parse_permutation("13627485")));
  for_each_permutation(8, [](const Permutation& w) {
    if (!is_fully_commutative(w) || is_crowded(w)) return;
    const auto m = is_minimal_crowded_direct(w);
    if (m.descents_alternate && m.fixes_outside) CHECK_FALSE(m.peaks_crowded);
    CHECK_FALSE(m.minimal());
  });
}

TEST_CASE("boolean permutations are their own cores and uncrowded") {
  for_each_permutation(7, [](const Permutation& w) {
    if (!is_boolean(w)) return;
    const auto d = boolean_core(w);
    CHECK(d.core == w);
    CHECK(d.remainder.is_identity());
    CHECK(uncrowded_iff_core(w));
  });
}
