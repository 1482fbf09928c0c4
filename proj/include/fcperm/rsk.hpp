#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fcperm/permutation.hpp"

namespace fcperm {

/// Rows top to bottom, each strictly increasing (English convention).
struct Tableau {
  std::vector<std::vector<int>> rows;

  int row_count() const noexcept { return static_cast<int>(rows.size()); }
  int size() const noexcept;
  std::vector<int> shape() const;
  /// Entries of row r (1-indexed); empty if the tableau has fewer rows.
  std::vector<int> row(int r) const;

  /// Row and column strictness, weakly decreasing row lengths.
  bool is_valid() const;
  /// Valid with entries exactly 1..size().
  bool is_standard() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
};

/// One displacement during insertion: `bumper` replaced `bumped` in `row`,
/// pushing `bumped` into row + 1.
struct Bump {
  int row;
  int bumper;
  int bumped;
  friend bool operator==(const Bump&, const Bump&) = default;
};

/// Everything that happened while inserting w(step).
struct InsertionEvent {
  int step;            // position k in the one-line notation
  int value;           // w(k)
  int first_column;    // column of row 1 that w(k) entered (c_w of the value)
  std::vector<Bump> bumps;  // cascade, row 1 first; empty for a plain append
  int final_row;       // row in which a new cell was created
  int final_column;
};

struct BumpTrace {
  std::vector<InsertionEvent> events;
  std::vector<int> first_column;  // indexed by value, [0] unused

  /// Column of row 1 into which value q was first inserted.
  int column_of(int q) const { return first_column[static_cast<std::size_t>(q)]; }
  /// Value that pushed q out of row 1, if any.
  std::optional<int> row1_bumper_of(int q) const;
};

struct RskResult {
  Tableau p;
  Tableau q;
  BumpTrace trace;
};

/// Row insertion of w(1), ..., w(n). Unbounded number of rows.
RskResult rsk(const Permutation& w);

/// Insertion tableau of the prefix w(1..i), 0 <= i <= n.
Tableau partial_p(const Permutation& w, int i);

/// Sorted values of the second row of P(w).
std::vector<int> row2(const Permutation& w);

/// Length of a longest increasing subsequence of w ending in value q.
int lis_ending_at(const Permutation& w, int q);

/// Length of a longest increasing subsequence of w.
int lis_length(const Permutation& w);

/// Row-1 bumps (b, z) in the order they happen. FC input only (throws
/// PreconditionError otherwise).
std::vector<std::pair<int, int>> bump_pairs(const Permutation& w);

}  // namespace fcperm
