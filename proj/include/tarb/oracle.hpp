#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "tarb/digraph.hpp"
#include "tarb/fixed_root.hpp"

namespace tarb::oracle {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

// Every time-respecting arborescence of d over all roots, in canonical order.
// Throws BudgetExceeded when, for some root, the product of non-root in-degrees
// exceeds `budget_per_root`.
std::vector<Arborescence> enumerate_all(const TemporalDigraph& d, std::uint64_t budget_per_root = kDefaultBudget);

class ReconfigurationGraph {
 public:
  ReconfigurationGraph() = default;
  ReconfigurationGraph(const TemporalDigraph& d, std::vector<Arborescence> nodes);

  const std::vector<Arborescence>& nodes() const { return nodes_; }
  const std::vector<std::vector<int>>& adjacency() const { return adjacency_; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  std::size_t edge_count() const;
  std::optional<int> index_of(const Arborescence& t) const;

  // Connected component id per node; ids follow the smallest node index.
  std::vector<int> components() const;
  // Hop distance from `source` to every node; -1 when unreachable.
  std::vector<int> distances(int source) const;

 private:
  struct Hash {
    std::size_t operator()(const std::vector<ArcId>& v) const;
  };
  std::vector<Arborescence> nodes_;
  std::vector<std::vector<int>> adjacency_;
  std::unordered_map<std::vector<ArcId>, int, Hash> index_;
};

ReconfigurationGraph build_reconfiguration_graph(const TemporalDigraph& d,
                                                 std::uint64_t budget_per_root = kDefaultBudget);

struct ShortestResult {
  int length;
  ReconfSequence sequence;
};

// Exact minimum-length sequence by BFS; nullopt when the two lie in
// different components. Ties follow canonical node order.
std::optional<ShortestResult> bfs_shortest(const TemporalDigraph& d, const ReconfigurationGraph& g, int from, int to);
std::optional<ShortestResult> bfs_shortest(const TemporalDigraph& d, const Arborescence& t1, const Arborescence& t2,
                                           std::uint64_t budget_per_root = kDefaultBudget);

// Minimum label over arcs into v lying on a time-respecting simple path from
// r, by exhaustive path enumeration. d(r) = 0; nullopt when v is unreachable.
std::optional<Label> oracle_d(const TemporalDigraph& d, VertexId r, VertexId v);
std::vector<std::optional<Label>> oracle_d_all(const TemporalDigraph& d, VertexId r);

}  // namespace tarb::oracle
