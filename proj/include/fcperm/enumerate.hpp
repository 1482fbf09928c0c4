#pragma once

#include <string_view>
#include <vector>

#include "fcperm/limits.hpp"
#include "fcperm/permutation.hpp"

namespace fcperm {

enum class Filter { all, fc, boolean, uncrowded, crowded, minimal_crowded };

/// Accepts all, fc, boolean, uncrowded, crowded, minimal-crowded.
Filter parse_filter(std::string_view name);
std::string_view filter_name(Filter f);

bool matches(const Permutation& w, Filter f);

/// Streams S_n in lexicographic order, calling fn on each match. Throws
/// LimitExceeded when n > limits.max_degree.
template <typename Fn>
void enumerate(int n, Filter f, const Limits& limits, Fn&& fn);

long long count_matching(int n, Filter f, const Limits& limits = {});
std::vector<Permutation> collect_matching(int n, Filter f, const Limits& limits = {});

void check_degree(int n, const Limits& limits);

template <typename Fn>
void enumerate(int n, Filter f, const Limits& limits, Fn&& fn) {
  check_degree(n, limits);
  for_each_permutation(n, [&](const Permutation& w) {
    if (matches(w, f)) fn(w);
  });
}

}  // namespace fcperm
