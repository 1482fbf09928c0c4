#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fcperm/crowding.hpp"
#include "fcperm/rsk.hpp"
#include "fcperm/weak_order.hpp"
#include "fcperm/words.hpp"

namespace fcperm {

/// Everything the library can say about one permutation. FC-only fields
/// are empty for non-FC input.
struct AnalysisReport {
  std::string permutation;
  int length = 0;
  std::vector<int> descents;
  std::vector<int> support;
  bool fully_commutative = false;
  bool boolean = false;
  std::string canonical_word;
  std::optional<std::string> core;
  std::optional<std::string> core_word;
  std::string p_tableau;
  std::string q_tableau;
  std::vector<int> row2;
  std::optional<bool> crowded;
  std::optional<CrowdedWitness> witness;
  std::optional<MinimalityReport> minimality;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

AnalysisReport analyze(const Permutation& w);

/// Human-readable multi-line rendering.
std::string to_text(const AnalysisReport& report);

void to_json(nlohmann::json& j, const CrowdedWitness& w);
void from_json(const nlohmann::json& j, CrowdedWitness& w);
void to_json(nlohmann::json& j, const MinimalityReport& r);
void from_json(const nlohmann::json& j, MinimalityReport& r);
void to_json(nlohmann::json& j, const AnalysisReport& r);
void from_json(const nlohmann::json& j, AnalysisReport& r);
void to_json(nlohmann::json& j, const Tableau& t);
void from_json(const nlohmann::json& j, Tableau& t);

/// {"verdict": ..., "row2": [...], "witness": {...} | null}
nlohmann::json classification_json(const Classification& c);
nlohmann::json transition_json(const TransitionReport& r);

/// Edge-list form of the FC poset.
struct PosetEdgeList {
  int n = 0;
  std::vector<std::string> nodes;
  struct Edge {
    std::string lower;
    std::string upper;
    int index;
    friend bool operator==(const Edge&, const Edge&) = default;
  };
  std::vector<Edge> edges;
  friend bool operator==(const PosetEdgeList&, const PosetEdgeList&) = default;
};

PosetEdgeList edge_list(const FcPoset& poset);
void to_json(nlohmann::json& j, const PosetEdgeList& e);
void from_json(const nlohmann::json& j, PosetEdgeList& e);

/// Graphviz digraph of a heap: nodes "u_x (x)", edges covered -> covering,
/// drawn bottom to top.
std::string heap_dot(const Heap& heap);

/// Graphviz digraph of the FC poset; uncrowded and crowded nodes get
/// different fills and minimal crowded nodes a bold outline.
std::string poset_dot(const FcPoset& poset);

}  // namespace fcperm
