#include <algorithm>
#include <set>

#include "doctest.h"
#include "fcperm/errors.hpp"
#include "fcperm/permutation.hpp"
#include "fcperm/text.hpp"
#include "oracles.hpp"

using namespace fcperm;

TEST_CASE("construction rejects non-permutations") {
  CHECK_THROWS_AS(Permutation({1, 1, 3}), PreconditionError);
  CHECK_THROWS_AS(Permutation({0, 1}), PreconditionError);
  CHECK_THROWS_AS(Permutation({}), PreconditionError);
  CHECK(Permutation({2, 1}).degree() == 2);
  CHECK(Permutation::identity(4).is_identity());
  CHECK(format_permutation(Permutation::longest(4), true) == "4321");
}

TEST_CASE("51342 has length 6 and inverse 25341") {
  const auto w = parse_permutation("51342");
  CHECK(length(w) == 6);
  CHECK(format_permutation(inverse(w), true) == "25341");
  CHECK(compose(w, inverse(w)).is_identity());
  CHECK(descents(w) == std::vector<int>{1, 4});
}

TEST_CASE("length is the inversion count") {
  for_each_permutation(6, [](const Permutation& w) { CHECK(length(w) == oracle::inversions(w)); });
}

TEST_CASE("right multiplication swaps positions, left multiplication swaps values") {
  const auto w = parse_permutation("41623785");
  CHECK(format_permutation(multiply_right(w, {5}), true) == "41627385");
  CHECK(format_permutation(multiply_left({5}, w), true) == "41523786");
  for_each_permutation(5, [](const Permutation& u) {
    const auto s = Permutation({1, 3, 2, 4, 5});
    CHECK(multiply_right(u, {2}) == compose(u, s));
    CHECK(multiply_left({2}, u) == compose(s, u));
    CHECK(compose(u, inverse(u)).is_identity());
  });
}

TEST_CASE("support and the prefix statistics") {
  const auto v = parse_permutation("41623785");
  CHECK(support(v) == std::vector<int>{1, 2, 3, 4, 5, 6, 7});
  const auto st = support_stats(v, 5);
  CHECK(st.max_prefix == 6);
  CHECK(st.min_suffix == 5);
  CHECK(support(parse_permutation("2134")) == std::vector<int>{1});
  CHECK(support(Permutation::identity(5)).empty());
}

TEST_CASE("enumeration is lexicographic and complete") {
  std::vector<Permutation> seen;
  for_each_permutation(5, [&](const Permutation& w) { seen.push_back(w); });
  CHECK(seen.size() == 120);
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  CHECK(std::set<Permutation>(seen.begin(), seen.end()).size() == 120);

  int visited = 0;
  for_each_permutation(5, [&](const Permutation&) { return ++visited < 7; });
  CHECK(visited == 7);
}

TEST_CASE("embedding appends fixed points") {
  CHECK(format_permutation(embed(parse_permutation("312"), 5), true) == "31245");
  CHECK_THROWS_AS(embed(parse_permutation("312"), 2), PreconditionError);
}

TEST_CASE("text formats") {
  CHECK(parse_permutation("4,1,6,2,7,3,8,5") == parse_permutation("41627385"));
  CHECK(format_permutation(parse_permutation("3,1,2")) == "3,1,2");
  const auto big = parse_permutation("10,1,2,3,4,5,6,7,8,9");
  CHECK(big.degree() == 10);
  CHECK(format_permutation(big, true) == "10,1,2,3,4,5,6,7,8,9");

  try {
    parse_permutation("41a2");
    FAIL("expected a parse error");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("'a'") != std::string::npos);
  }
  try {
    parse_permutation("3,x,1");
    FAIL("expected a parse error");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("'x'") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_permutation(""), PreconditionError);
  CHECK_THROWS_AS(parse_permutation("1123"), PreconditionError);

  CHECK(parse_letters("e").empty());
  CHECK(parse_letters("423241") == std::vector<int>{4, 2, 3, 2, 4, 1});
  CHECK(format_letters({10, 9}) == "10,9");
  CHECK(format_int_set({4, 6, 7}) == "{4,6,7}");
}
