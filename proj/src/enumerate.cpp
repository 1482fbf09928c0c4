#include "fcperm/enumerate.hpp"

#include <array>
#include <string>

#include "fcperm/crowding.hpp"
#include "fcperm/errors.hpp"
#include "fcperm/patterns.hpp"

namespace fcperm {

namespace {

constexpr std::array<std::string_view, 6> kNames = {"all",       "fc",      "boolean",
                                                    "uncrowded", "crowded", "minimal-crowded"};

}  // namespace

Filter parse_filter(std::string_view name) {
  for (std::size_t k = 0; k < kNames.size(); ++k) {
    if (kNames[k] == name) return static_cast<Filter>(k);
  }
  throw PreconditionError("unknown filter '" + std::string(name) + "'");
}

std::string_view filter_name(Filter f) { return kNames[static_cast<std::size_t>(f)]; }

bool matches(const Permutation& w, Filter f) {
  switch (f) {
    case Filter::all:
      return true;
    case Filter::fc:
      return is_fully_commutative(w);
    case Filter::boolean:
      return is_boolean(w);
    case Filter::uncrowded:
      return is_fully_commutative(w) && !is_crowded(w);
    case Filter::crowded:
      return is_fully_commutative(w) && is_crowded(w);
    case Filter::minimal_crowded:
      return is_fully_commutative(w) && is_minimal_crowded_direct(w).minimal();
  }
  return false;
}

void check_degree(int n, const Limits& limits) {
  if (n < 1) throw PreconditionError("degree must be >= 1, got " + std::to_string(n));
  if (n > limits.max_degree) throw LimitExceeded("degree", n, limits.max_degree);
}

long long count_matching(int n, Filter f, const Limits& limits) {
  long long total = 0;
  enumerate(n, f, limits, [&](const Permutation&) { ++total; });
  return total;
}

std::vector<Permutation> collect_matching(int n, Filter f, const Limits& limits) {
  std::vector<Permutation> out;
  enumerate(n, f, limits, [&](const Permutation& w) { out.push_back(w); });
  return out;
}

}  // namespace fcperm
