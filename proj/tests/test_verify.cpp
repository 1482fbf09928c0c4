#include <algorithm>
#include <set>

#include "doctest.h"
#include "fcperm/crowding.hpp"
#include "fcperm/enumerate.hpp"
#include "fcperm/errors.hpp"
#include "fcperm/patterns.hpp"
#include "fcperm/rsk.hpp"
#include "fcperm/text.hpp"
#include "fcperm/verify.hpp"
#include "oracles.hpp"

using namespace fcperm;

TEST_CASE("every registered check passes at small degree") {
  for (const auto& c : available_checks()) {
    for (int n = 1; n <= 6; ++n) {
      if (n > c.default_n) break;
      const auto r = run_check(c.id, n);
      INFO(c.id, " n=", n, " ", r.counterexample, " ", r.detail);
      CHECK(r.passed);
    }
  }
}

TEST_CASE("unknown ids and oversized degrees are rejected") {
  CHECK_THROWS_AS(run_check("thm-9.99", 4), PreconditionError);
  CHECK_THROWS_AS(run_check("thm-2.10", 10), LimitExceeded);
  CHECK_THROWS_AS(run_check("thm-2.10", 0), PreconditionError);
}

TEST_CASE("qualifying transitions counted independently") {
  // Support membership via prefix sets, FC via 321 triples, P via rsk.
  for (int n = 3; n <= 7; ++n) {
    long long brute = 0;
    for_each_permutation(n, [&](const Permutation& v) {
      if (oracle::has_321(v)) return;
      for (int i = 1; i < n; ++i) {
        if (v(i) > v(i + 1)) continue;
        const auto w = oracle::swap_positions(v, i);
        if (oracle::has_321(w)) continue;
        std::vector<int> prefix(v.one_line().begin(), v.one_line().begin() + i);
        if (*std::max_element(prefix.begin(), prefix.end()) == i) continue;
        if (rsk(v).p == rsk(w).p) continue;
        ++brute;
      }
    });
    CHECK(run_check("thm-4.11", n).cases == brute);
  }
}

TEST_CASE("longest increasing subsequences by brute force") {
  for_each_permutation(6, [](const Permutation& w) {
    const int target = oracle::longest_by_subsets(w, true);
    std::set<std::vector<int>> brute;
    for (unsigned mask = 1; mask < 64u; ++mask) {
      std::vector<int> pos;
      for (int p = 1; p <= 6; ++p)
        if (mask & (1u << (p - 1))) pos.push_back(p);
      if (static_cast<int>(pos.size()) != target) continue;
      bool ok = true;
      for (std::size_t k = 1; k < pos.size(); ++k) ok = ok && w(pos[k - 1]) < w(pos[k]);
      if (ok) brute.insert(pos);
    }
    const auto found = longest_increasing_subsequences(w);
    CHECK(std::set<std::vector<int>>(found.begin(), found.end()) == brute);
    CHECK(found.size() == brute.size());
  });
}

TEST_CASE("two-row standard tableaux are counted by central binomials") {
  const std::vector<std::size_t> expected{1, 2, 3, 6, 10, 20, 35, 70};
  for (int n = 1; n <= 8; ++n) CHECK(two_row_standard_tableaux(n).size() == expected[static_cast<std::size_t>(n - 1)]);
}

TEST_CASE("enumeration filters") {
  CHECK(count_matching(5, Filter::fc) == 42);
  CHECK(count_matching(3, Filter::crowded) == 0);
  CHECK(count_matching(4, Filter::all) == 24);
  long long boolean = 0;
  for_each_permutation(6, [&](const Permutation& w) { boolean += !oracle::has_321(w) && !oracle::has_3412(w); });
  CHECK(count_matching(6, Filter::boolean) == boolean);
  CHECK(count_matching(6, Filter::uncrowded) + count_matching(6, Filter::crowded) == 132);
  const auto minimal = collect_matching(8, Filter::minimal_crowded);
  CHECK(std::binary_search(minimal.begin(), minimal.end(), parse_permutation("41627385")));
  CHECK(parse_filter("minimal-crowded") == Filter::minimal_crowded);
  CHECK(filter_name(Filter::fc) == "fc");
  CHECK_THROWS_AS(parse_filter("odd"), PreconditionError);
  CHECK_THROWS_AS(count_matching(10, Filter::all), LimitExceeded);
}
