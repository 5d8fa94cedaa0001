#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tarb/label.hpp"

namespace tarb {

using VertexId = int;
using ArcId = int;
// Position of a label in the digraph's sorted table of distinct labels.
// Ranks from one table compare exactly like the labels they stand for.
using LabelRank = int;

inline constexpr ArcId kNoArc = -1;

struct Arc {
  ArcId id;
  VertexId tail;
  VertexId head;
  LabelRank rank;
};

struct ArcSpec {
  VertexId tail;
  VertexId head;
  Label label;
};

struct SubgraphResult;

// Multigraph on vertices 0..n-1 with exact labels. Immutable once built.
// Digraphs derived from one another (subgraphs, quotients) share the label
// table, so ranks stay comparable across them.
class TemporalDigraph {
 public:
  TemporalDigraph() : TemporalDigraph(0, std::span<const ArcSpec>{}) {}
  // Throws std::invalid_argument on self-loops or out-of-range endpoints.
  TemporalDigraph(int vertex_count, std::span<const ArcSpec> arcs);
  TemporalDigraph(int vertex_count, const std::vector<ArcSpec>& arcs)
      : TemporalDigraph(vertex_count, std::span<const ArcSpec>(arcs)) {}

  int vertex_count() const { return vertex_count_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  std::span<const Arc> arcs() const { return arcs_; }
  const Arc& arc(ArcId id) const { return arcs_.at(static_cast<std::size_t>(id)); }
  VertexId tail(ArcId id) const { return arc(id).tail; }
  VertexId head(ArcId id) const { return arc(id).head; }
  LabelRank rank(ArcId id) const { return arc(id).rank; }
  const Label& label(ArcId id) const { return (*labels_)[static_cast<std::size_t>(rank(id))]; }
  const Label& label_of_rank(LabelRank r) const { return (*labels_)[static_cast<std::size_t>(r)]; }
  // Rank of `t` in the shared table, or nullopt when no arc ever carried it.
  std::optional<LabelRank> find_rank(const Label& t) const;

  std::span<const ArcId> in_arcs(VertexId v) const { return in_[static_cast<std::size_t>(v)]; }
  std::span<const ArcId> out_arcs(VertexId v) const { return out_[static_cast<std::size_t>(v)]; }

  // Ascending ranks of labels carried by at least one arc.
  std::vector<LabelRank> present_ranks() const;

  // Optional display names; empty when the input named nothing.
  const std::vector<std::string>& names() const { return names_; }
  std::string vertex_name(VertexId v) const;
  void set_names(std::vector<std::string> names);

  // Same vertex set, keeping exactly the arcs in `keep` (renumbered in order).
  SubgraphResult arc_subgraph(std::span<const ArcId> keep) const;

 private:
  friend struct DigraphAccess;
  TemporalDigraph(int vertex_count, std::vector<Arc> arcs, std::shared_ptr<const std::vector<Label>> labels);
  void index();

  int vertex_count_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<ArcId>> in_;
  std::vector<std::vector<ArcId>> out_;
  std::shared_ptr<const std::vector<Label>> labels_;
  std::vector<std::string> names_;
};

struct SubgraphResult {
  TemporalDigraph digraph;
  std::vector<ArcId> arc_origin;  // derived arc id -> original arc id
};

struct ContractionResult {
  TemporalDigraph quotient;
  VertexId contracted_vertex;       // r_H, always the last quotient vertex
  std::vector<VertexId> vertex_map;  // original vertex -> quotient vertex
  std::vector<ArcId> arc_origin;     // quotient arc id -> original arc id
};

// A root plus one incoming arc per non-root vertex. Shape only; use
// is_arborescence / is_time_respecting for the structural checks.
class Arborescence {
 public:
  Arborescence() = default;
  // in_arc[root] must be kNoArc.
  Arborescence(VertexId root, std::vector<ArcId> in_arc);

  VertexId root() const { return root_; }
  int vertex_count() const { return static_cast<int>(in_arc_.size()); }
  ArcId in_arc(VertexId v) const { return in_arc_[static_cast<std::size_t>(v)]; }
  const std::vector<ArcId>& in_arcs() const { return in_arc_; }
  // Sorted arc ids; this is the canonical identity.
  std::vector<ArcId> arc_ids() const;
  bool contains(const TemporalDigraph& d, ArcId id) const { return in_arc(d.head(id)) == id; }

  friend bool operator==(const Arborescence&, const Arborescence&) = default;

 private:
  VertexId root_ = 0;
  std::vector<ArcId> in_arc_;
};

// Canonical ordering: lexicographic on sorted arc-id vectors.
bool canonical_less(const Arborescence& a, const Arborescence& b);

std::vector<ArcId> delta_out(const TemporalDigraph& d, std::span<const VertexId> vertices);

bool is_arborescence(const TemporalDigraph& d, std::span<const ArcId> arcs, VertexId root);
// Builds the Arborescence when is_arborescence holds.
std::optional<Arborescence> make_arborescence(const TemporalDigraph& d, std::span<const ArcId> arcs, VertexId root);

bool is_time_respecting(const TemporalDigraph& d, const Arborescence& t);

// A parent/child arc pair (in_arc(v), child arc) with decreasing labels.
struct TimeViolation {
  ArcId parent;
  ArcId child;
};
std::optional<TimeViolation> find_time_violation(const TemporalDigraph& d, const Arborescence& t);

ContractionResult contract(const TemporalDigraph& d, std::span<const VertexId> vertices);

// Maximal strongly connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<VertexId>> scc_decompose(const TemporalDigraph& d);

SubgraphResult restrict_to_label(const TemporalDigraph& d, const Label& t);
SubgraphResult restrict_to_rank(const TemporalDigraph& d, LabelRank t);

}  // namespace tarb
