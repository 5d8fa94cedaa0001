#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tarb/digraph.hpp"
#include "tarb/fixed_root.hpp"

namespace tarb {

enum class AdjacencyKind { CondI, CondII, CondIIIPrime };

const char* to_string(AdjacencyKind kind);

// Evidence that roots `from` and `to` are adjacent at the root level.
//  CondI:        arc = f = (to, from); support = time-respecting from-arborescence
//                whose out-arcs at `from` (except those into `to`) carry labels >= λ(f).
//  CondII:       arc = e = (from, to); support = time-respecting to-arborescence,
//                mirror image of CondI.
//  CondIIIPrime: `component` is the strongly connected component of D_t holding
//                both roots, and it is t-labeled extendible.
struct AdjacencyWitness {
  AdjacencyKind kind;
  VertexId from;
  VertexId to;
  ArcId arc = kNoArc;
  std::optional<Arborescence> support;
  LabelRank t = -1;
  std::vector<VertexId> component;
};

std::optional<AdjacencyWitness> check_cond_i(const TemporalDigraph& d, VertexId r1, VertexId r2);
std::optional<AdjacencyWitness> check_cond_ii(const TemporalDigraph& d, VertexId r1, VertexId r2);
std::optional<AdjacencyWitness> check_cond_iii_prime(const TemporalDigraph& d, VertexId r1, VertexId r2);

// Re-runs the condition a witness claims and reports whether it still holds.
bool revalidate(const TemporalDigraph& d, const AdjacencyWitness& w);

// True iff contracting `component` and dropping arcs with rank < t leaves a
// time-respecting arborescence rooted at the contracted vertex. Labels
// inside the component are not inspected.
bool is_extendible(const TemporalDigraph& d, std::span<const VertexId> component, LabelRank t);

struct RootAdjacencyGraph {
  std::vector<VertexId> feasible_roots;  // ascending
  // Keyed by (smaller root, larger root); the witness is oriented the same way.
  std::map<std::pair<VertexId, VertexId>, AdjacencyWitness> edges;

  bool is_feasible(VertexId r) const;
  std::vector<VertexId> neighbours(VertexId r) const;
  const AdjacencyWitness* witness(VertexId a, VertexId b) const;
  // Shortest root path (BFS, smaller neighbours first); empty when disconnected.
  std::vector<VertexId> root_path(VertexId from, VertexId to) const;
};

RootAdjacencyGraph build_root_adjacency_graph(const TemporalDigraph& d);

// Decides reconfigurability of t1 into t2. Throws std::invalid_argument on
// invalid arborescences.
bool reachable(const TemporalDigraph& d, const Arborescence& t1, const Arborescence& t2);
bool reachable(const RootAdjacencyGraph& g, VertexId r1, VertexId r2);

// A verified sequence from t1 to t2, or nullopt when none exists. No length
// guarantee when the roots differ.
std::optional<ReconfSequence> construct_sequence(const TemporalDigraph& d, const Arborescence& t1,
                                                 const Arborescence& t2);
std::optional<ReconfSequence> construct_sequence(const TemporalDigraph& d, const RootAdjacencyGraph& g,
                                                 const Arborescence& t1, const Arborescence& t2);

// An adjacent pair (A rooted at `from`, B rooted at `to`, B = A - e + f).
struct RootChange {
  Arborescence before;
  Arborescence after;
  ReconfStep step;
};

// Realizes one root-level edge as explicit one-swap root changes. CondI/CondII
// give a single change; CondIIIPrime expands into one change per arc of a
// shortest from->to path inside the component.
std::vector<RootChange> realize_edge(const TemporalDigraph& d, const AdjacencyWitness& w, VertexId from, VertexId to);

}  // namespace tarb
