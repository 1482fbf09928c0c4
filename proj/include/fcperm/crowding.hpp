#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fcperm/permutation.hpp"
#include "fcperm/rsk.hpp"

namespace fcperm {

/// A window [y, y + 2x] holding more than x + 1 elements of the set.
struct CrowdedWitness {
  int x;
  int y;
  std::vector<int> window;  // [y, y + 2x] intersected with the set, sorted
  friend bool operator==(const CrowdedWitness&, const CrowdedWitness&) = default;
};

/// Scans x = 1, 2, ... and, for each x, y from min(L) upward; returns the
/// first violating window. Only y in [min L, max L] and y + 2x <= max L are
/// examined: any violating window can be shrunk to one with both endpoints
/// in L without losing the violation.
std::optional<CrowdedWitness> find_crowded_window(std::span<const int> set);

bool is_uncrowded_set(std::span<const int> set);

/// The sets S_{x,y}: {y, y+1, y+2} for x = 1, otherwise
/// {y, y+1, y+3, y+5, ..., y+2x-1, y+2x}.
std::vector<int> minimal_crowded_shape(int x, int y);

struct MinimalCrowdedSet {
  int x;
  int y;
  std::vector<int> elements;
  friend bool operator==(const MinimalCrowdedSet&, const MinimalCrowdedSet&) = default;
};

/// An inclusion-minimal crowded subset of a crowded set, of S_{x,y} shape.
/// Among candidates the one with largest y wins (then smallest x).
/// Throws PreconditionError if the set is uncrowded.
MinimalCrowdedSet minimal_crowded_subset(std::span<const int> set);

struct Classification {
  bool crowded = false;
  std::optional<CrowdedWitness> witness;
  std::vector<int> row2;
};

/// Crowdedness of the second row of P(w). FC input only.
Classification classify(const Permutation& w);

bool is_crowded(const Permutation& w);

/// Uncrowded iff P(core) = P(w). Both sides are computed; a disagreement
/// raises InvariantViolation. FC input only.
bool uncrowded_iff_core(const Permutation& w);

/// Witness data for a covering step v -> w = v s_i in the FC world that keeps
/// the support and changes the insertion tableau.
struct TransitionReport {
  Permutation v;
  Permutation w;
  int i = 0;
  int max_prefix = 0;  // M
  int min_suffix = 0;  // m
  /// Positions of M, v(i), v(i+1), m in v; their values form a 3142.
  std::vector<int> pattern3142{};
  /// Increasing run strictly between M and v(i), and between v(i+1) and m.
  std::vector<int> a_run{};
  std::vector<int> e_run{};
  /// The unique value of Row1(P(v)) that lands in Row2(P(w)).
  int e = 0;
  /// e_0 = v(i+1), e_1, ..., e_{r+1}; e_{r+1} == e.
  std::vector<int> e_seq{};
  /// t_0 = m, t_1, ..., t_r; t_k pushes e_k out of row 1 of P(v).
  std::vector<int> t_seq{};
  int r = 0;
  int interval_low = 0;   // M
  int interval_high = 0;  // e
  std::vector<int> row2_v{};
  std::vector<int> row2_w{};
  /// Row2(P(w)) intersected with [M, e]; has r + 3 elements.
  std::vector<int> interval_row2_w{};
  CrowdedWitness witness{};
};

/// Builds the full report and checks every structural property along the
/// way (InvariantViolation names the first one that fails). Throws
/// PreconditionError naming the failed hypothesis if (v, i) does not qualify.
TransitionReport analyze_transition(const Permutation& v, int i);

/// True when (v, i) meets analyze_transition's hypotheses.
bool is_qualifying_transition(const Permutation& v, int i);

/// The five-condition test for minimal crowded permutations.
struct MinimalityReport {
  bool descents_alternate = false;     // (a) {d, d+2, ..., d+2k}, k >= 2
  bool peaks_crowded = false;          // (b) {w(d), w(d+2), ..., w(d+2k)} crowded
  bool fixes_outside = false;          // (c) fixed points off [d, d+2k+1]
  bool pattern_415263_consecutive = false;  // (d)
  bool windows_match = false;          // (e) 415263 or 315264 windows
  int d = 0;
  int k = -1;
  std::vector<int> row2;

  bool minimal() const {
    return descents_alternate && peaks_crowded && fixes_outside &&
           pattern_415263_consecutive && windows_match;
  }
  friend bool operator==(const MinimalityReport&, const MinimalityReport&) = default;
};

/// FC input only.
MinimalityReport is_minimal_crowded_direct(const Permutation& w);

}  // namespace fcperm
