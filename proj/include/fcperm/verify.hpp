#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fcperm/limits.hpp"
#include "fcperm/permutation.hpp"
#include "fcperm/rsk.hpp"

namespace fcperm {

/// Outcome of one exhaustive check at one degree.
struct CheckResult {
  std::string id;
  int n = 0;
  bool passed = true;
  long long cases = 0;          // objects examined (permutations, pairs, ...)
  std::string counterexample;   // first failing object, if any
  std::string detail;           // what failed about it
};

struct CheckInfo {
  std::string id;
  std::string summary;
  int default_n;
};

/// Registered checks in a stable order.
const std::vector<CheckInfo>& available_checks();

/// Runs check `id` over degree n. Throws PreconditionError for an unknown id
/// and LimitExceeded when n exceeds limits.max_degree.
CheckResult run_check(std::string_view id, int n, const Limits& limits = {});

/// Position sets (1-indexed) of every longest increasing subsequence of w.
std::vector<std::vector<int>> longest_increasing_subsequences(const Permutation& w);

/// Every standard tableau of size n with at most two rows.
std::vector<Tableau> two_row_standard_tableaux(int n);

}  // namespace fcperm
