#include "tarb/search.hpp"

#include <algorithm>
#include <numeric>

#include "tarb/free_root.hpp"
#include "tarb/oracle.hpp"

namespace tarb {

TemporalDigraph random_digraph(std::mt19937_64& rng, const RandomDigraphParams& params) {
  const int n = params.vertices;
  std::uniform_int_distribution<int> label(1, params.max_label);
  std::uniform_int_distribution<int> vertex(0, std::max(0, n - 1));
  std::vector<ArcSpec> arcs;
  if (params.plant_spanning && n > 1) {
    std::vector<VertexId> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (int i = 1; i < n && static_cast<int>(arcs.size()) < params.arcs; ++i) {
      std::uniform_int_distribution<int> earlier(0, i - 1);
      arcs.push_back(ArcSpec{order[static_cast<std::size_t>(earlier(rng))], order[static_cast<std::size_t>(i)], Label(label(rng))});
    }
  }
  while (n > 1 && static_cast<int>(arcs.size()) < params.arcs) {
    const VertexId u = vertex(rng);
    const VertexId v = vertex(rng);
    if (u != v) arcs.push_back(ArcSpec{u, v, Label(label(rng))});
  }
  std::shuffle(arcs.begin(), arcs.end(), rng);
  return TemporalDigraph(n, arcs);
}

std::optional<NoInstance> search_no_instance(std::uint64_t seed, int max_vertices, int attempts) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(3, std::max(3, max_vertices));
  for (int attempt = 0; attempt < attempts; ++attempt) {
    const int n = size(rng);
    std::uniform_int_distribution<int> arc_count(n, 3 * n);
    auto d = random_digraph(rng, {n, arc_count(rng), 4, true});
    const auto g = oracle::build_reconfiguration_graph(d);
    const auto comp = g.components();
    const auto roots = build_root_adjacency_graph(d);
    const auto& nodes = g.nodes();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      for (std::size_t j = i + 1; j < nodes.size(); ++j) {
        if (nodes[i].root() == nodes[j].root() || comp[i] == comp[j]) continue;
        if (reachable(roots, nodes[i].root(), nodes[j].root())) continue;
        return NoInstance{std::move(d), nodes[i], nodes[j]};
      }
    }
  }
  return std::nullopt;
}

}  // namespace tarb
