#include "fcperm/rsk.hpp"

#include <algorithm>
#include <string>

#include "fcperm/errors.hpp"
#include "fcperm/patterns.hpp"

namespace fcperm {

int Tableau::size() const noexcept {
  int total = 0;
  for (const auto& r : rows) total += static_cast<int>(r.size());
  return total;
}

std::vector<int> Tableau::shape() const {
  std::vector<int> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(static_cast<int>(r.size()));
  return out;
}

std::vector<int> Tableau::row(int r) const {
  if (r < 1 || r > row_count()) return {};
  return rows[static_cast<std::size_t>(r - 1)];
}

bool Tableau::is_valid() const {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) return false;
    if (!std::is_sorted(rows[r].begin(), rows[r].end()) ||
        std::adjacent_find(rows[r].begin(), rows[r].end()) != rows[r].end()) {
      return false;
    }
    if (r == 0) continue;
    if (rows[r].size() > rows[r - 1].size()) return false;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (rows[r][c] <= rows[r - 1][c]) return false;
    }
  }
  return true;
}

bool Tableau::is_standard() const {
  if (!is_valid()) return false;
  std::vector<int> all;
  for (const auto& r : rows) all.insert(all.end(), r.begin(), r.end());
  std::sort(all.begin(), all.end());
  for (std::size_t j = 0; j < all.size(); ++j) {
    if (all[j] != static_cast<int>(j) + 1) return false;
  }
  return true;
}

std::optional<int> BumpTrace::row1_bumper_of(int q) const {
  for (const auto& ev : events) {
    if (!ev.bumps.empty() && ev.bumps.front().bumped == q) return ev.bumps.front().bumper;
  }
  return std::nullopt;
}

namespace {

// Inserts `value` into `p`, recording the cascade. Returns the event with
// step left for the caller.
InsertionEvent insert_value(Tableau& p, int value) {
  InsertionEvent ev{};
  ev.value = value;
  int carried = value;
  for (std::size_t r = 0;; ++r) {
    if (r == p.rows.size()) p.rows.emplace_back();
    auto& row = p.rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), carried);
    const int column = static_cast<int>(it - row.begin()) + 1;
    if (r == 0) ev.first_column = column;
    if (it == row.end()) {
      row.push_back(carried);
      ev.final_row = static_cast<int>(r) + 1;
      ev.final_column = column;
      return ev;
    }
    ev.bumps.push_back(Bump{static_cast<int>(r) + 1, carried, *it});
    std::swap(carried, *it);
  }
}

}  // namespace

RskResult rsk(const Permutation& w) {
  RskResult result;
  result.trace.first_column.assign(static_cast<std::size_t>(w.degree()) + 1, 0);
  for (int k = 1; k <= w.degree(); ++k) {
    InsertionEvent ev = insert_value(result.p, w(k));
    ev.step = k;
    result.trace.first_column[static_cast<std::size_t>(ev.value)] = ev.first_column;
    auto& qrows = result.q.rows;
    if (static_cast<int>(qrows.size()) < ev.final_row) qrows.emplace_back();
    qrows[static_cast<std::size_t>(ev.final_row - 1)].push_back(k);
    result.trace.events.push_back(std::move(ev));
  }
  return result;
}

Tableau partial_p(const Permutation& w, int i) {
  if (i < 0 || i > w.degree()) {
    throw PreconditionError("prefix length " + std::to_string(i) + " outside 0.." +
                            std::to_string(w.degree()));
  }
  Tableau p;
  for (int k = 1; k <= i; ++k) insert_value(p, w(k));
  return p;
}

std::vector<int> row2(const Permutation& w) { return rsk(w).p.row(2); }

int lis_ending_at(const Permutation& w, int q) {
  if (q < 1 || q > w.degree()) {
    throw PreconditionError("value " + std::to_string(q) + " outside 1.." +
                            std::to_string(w.degree()));
  }
  // Quadratic DP over positions up to q's position.
  std::vector<int> best(static_cast<std::size_t>(w.degree()) + 1, 1);
  for (int k = 1; k <= w.degree(); ++k) {
    for (int j = 1; j < k; ++j) {
      if (w(j) < w(k)) {
        best[static_cast<std::size_t>(k)] =
            std::max(best[static_cast<std::size_t>(k)], best[static_cast<std::size_t>(j)] + 1);
      }
    }
    if (w(k) == q) return best[static_cast<std::size_t>(k)];
  }
  return 0;  // unreachable for a valid permutation
}

int lis_length(const Permutation& w) {
  std::vector<int> tails;
  for (int v : w.one_line()) {
    auto it = std::lower_bound(tails.begin(), tails.end(), v);
    if (it == tails.end()) {
      tails.push_back(v);
    } else {
      *it = v;
    }
  }
  return static_cast<int>(tails.size());
}

std::vector<std::pair<int, int>> bump_pairs(const Permutation& w) {
  if (!is_fully_commutative(w)) {
    throw PreconditionError("bump pairs are defined for fully commutative permutations only");
  }
  std::vector<std::pair<int, int>> out;
  for (const auto& ev : rsk(w).trace.events) {
    if (!ev.bumps.empty()) out.emplace_back(ev.bumps.front().bumper, ev.bumps.front().bumped);
  }
  return out;
}

}  // namespace fcperm
