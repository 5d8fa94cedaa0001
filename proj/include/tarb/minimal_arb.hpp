#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "tarb/digraph.hpp"

namespace tarb {

struct MinimalArbResult {
  Arborescence tree;
  // d'(v) per vertex; d'(root) = 0.
  std::vector<Label> d_prime;
  // Arcs in the order the greedy loop picked them.
  std::vector<ArcId> selection_order;
};

// Called after every greedy iteration with the arcs chosen so far and the
// reached-set membership flags.
using GreedyObserver = std::function<void(std::span<const ArcId> selected, std::span<const char> reached)>;

// Grows R from the root, repeatedly taking the smallest-label arc leaving R
// whose label is at least d'(tail); ties go to the smaller arc id. Returns
// nullopt when no time-respecting root-arborescence exists.
std::optional<MinimalArbResult> minimal_arborescence(const TemporalDigraph& d, VertexId root,
                                                     const GreedyObserver& observer = {});

// True iff every in-arc of `t` carries exactly d(v). Throws
// std::invalid_argument when `t` is not a time-respecting arborescence of `d`.
bool is_minimal(const TemporalDigraph& d, const Arborescence& t);

}  // namespace tarb
