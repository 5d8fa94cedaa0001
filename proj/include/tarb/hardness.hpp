#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tarb/digraph.hpp"
#include "tarb/fixed_root.hpp"

namespace tarb::hardness {

struct VertexCoverInstance {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, no repeats
  int k = 0;

  // Throws std::invalid_argument on loops, repeated edges, bad endpoints or
  // k outside [0, vertex_count].
  void validate() const;
};

enum class LabelVariant { Standard, ThreeLabel, Perturbed };

const char* to_string(LabelVariant v);
LabelVariant parse_variant(const std::string& text);

// Vertex and arc roles of the reduced digraph.
//   vertices: r1 = 0, r2 = 1, w_v = 2 + v, w_e = 2 + |V| + e
//   arc classes 1..5 follow the construction order A1..A5.
struct Roles {
  VertexId r1 = 0;
  VertexId r2 = 1;
  std::vector<VertexId> w_vertex;
  std::vector<VertexId> w_edge;
  std::vector<ArcId> r1_to_edge;  // A1, (r1, w_e)
  std::vector<ArcId> r2_to_edge;  // A1, (r2, w_e)
  ArcId r1_to_r2 = kNoArc;        // A2
  ArcId r2_to_r1 = kNoArc;        // A2
  std::vector<ArcId> a;           // A3, a_v = (r2, w_v)
  std::vector<std::pair<ArcId, ArcId>> incidence;  // A4, ((w_u, w_e), (w_v, w_e)) for e = {u, v}, u < v
  std::vector<ArcId> a_prime;     // A5, a'_v = (r2, w_v)
  std::vector<int> arc_class;     // per arc, 1..5
};

struct HardnessInstance {
  VertexCoverInstance source;
  LabelVariant variant;
  TemporalDigraph digraph;
  Arborescence t1;
  Arborescence t2;
  int ell;
  Roles roles;
};

HardnessInstance reduce_vertex_cover(const VertexCoverInstance& vc, LabelVariant variant);

// Cover read off the root-changing step of a valid t1 -> t2 sequence.
// Throws std::invalid_argument when the sequence does not replay or never
// changes root, std::logic_error when the step's tree still uses an A1 arc.
std::vector<int> extract_vertex_cover(const HardnessInstance& inst, const ReconfSequence& s);

// Smallest endpoint of each edge that lies in `cover`.
std::vector<int> canonical_sigma(const VertexCoverInstance& vc, const std::vector<int>& cover);

// t1 -> t2 in 2(|X| + |E|) + 1 swaps through the cover. Throws
// std::invalid_argument when `cover` is not a vertex cover or sigma is inconsistent.
ReconfSequence build_cover_sequence(const HardnessInstance& inst, const std::vector<int>& cover,
                                    const std::vector<int>& sigma);

bool is_vertex_cover(const VertexCoverInstance& vc, const std::vector<int>& cover);

inline constexpr int kDefaultVertexBudget = 20;

// Exhaustive: some subset of at most k vertices covers every edge. Throws
// BudgetExceeded when the graph has more than `max_vertices` vertices.
bool vc_brute_force(const VertexCoverInstance& vc, int max_vertices = kDefaultVertexBudget);

}  // namespace tarb::hardness
