#include "tarb/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <iterator>
#include <limits>
#include <stdexcept>
#include <string>

#include "tarb/errors.hpp"

namespace tarb::oracle {

std::vector<Arborescence> enumerate_all(const TemporalDigraph& d, std::uint64_t budget_per_root) {
  const int n = d.vertex_count();
  std::vector<Arborescence> found;
  for (VertexId root = 0; root < n; ++root) {
    std::uint64_t space = 1;
    for (VertexId v = 0; v < n && space != 0; ++v) {
      if (v == root) continue;
      const auto deg = static_cast<std::uint64_t>(d.in_arcs(v).size());
      if (deg != 0 && space > budget_per_root / deg) {
        throw BudgetExceeded("enumeration space for root " + std::to_string(root) + " exceeds budget " +
                                 std::to_string(budget_per_root),
                             root);
      }
      space *= deg;
    }
    if (space == 0) continue;

    // One in-arc choice per non-root vertex, odometer style, then filter.
    std::vector<VertexId> free;
    for (VertexId v = 0; v < n; ++v) {
      if (v != root) free.push_back(v);
    }
    std::vector<std::size_t> choice(free.size(), 0);
    std::vector<ArcId> arcs(free.size());
    while (true) {
      for (std::size_t i = 0; i < free.size(); ++i) arcs[i] = d.in_arcs(free[i])[choice[i]];
      if (auto t = make_arborescence(d, arcs, root); t && is_time_respecting(d, *t)) found.push_back(std::move(*t));
      std::size_t i = 0;
      while (i < free.size() && ++choice[i] == d.in_arcs(free[i]).size()) choice[i++] = 0;
      if (i == free.size()) break;
    }
  }
  std::sort(found.begin(), found.end(), canonical_less);
  return found;
}

std::size_t ReconfigurationGraph::Hash::operator()(const std::vector<ArcId>& v) const {
  std::size_t h = 1469598103934665603ull;
  for (ArcId a : v) h = (h ^ static_cast<std::size_t>(a + 1)) * 1099511628211ull;
  return h;
}

ReconfigurationGraph::ReconfigurationGraph(const TemporalDigraph& d, std::vector<Arborescence> nodes)
    : nodes_(std::move(nodes)), adjacency_(nodes_.size()) {
  for (std::size_t i = 0; i < nodes_.size(); ++i) index_.emplace(nodes_[i].in_arcs(), static_cast<int>(i));
  const int n = d.vertex_count();
  // T - e + f keeps the root when head(e) = head(f); otherwise f enters the
  // old root and head(e) becomes the new one. Enumerate both shapes.
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const auto& t = nodes_[i];
    std::vector<ArcId> probe = t.in_arcs();
    const auto try_probe = [&] {
      if (const auto it = index_.find(probe); it != index_.end()) adjacency_[i].push_back(it->second);
    };
    for (VertexId v = 0; v < n; ++v) {
      if (v == t.root()) continue;
      const ArcId own = t.in_arc(v);
      for (ArcId f : d.in_arcs(v)) {
        if (f == own) continue;
        probe[static_cast<std::size_t>(v)] = f;
        try_probe();
      }
      probe[static_cast<std::size_t>(v)] = own;
    }
    for (ArcId f : d.in_arcs(t.root())) {
      probe[static_cast<std::size_t>(t.root())] = f;
      for (VertexId v = 0; v < n; ++v) {
        if (v == t.root()) continue;
        const ArcId own = t.in_arc(v);
        probe[static_cast<std::size_t>(v)] = kNoArc;
        try_probe();
        probe[static_cast<std::size_t>(v)] = own;
      }
      probe[static_cast<std::size_t>(t.root())] = kNoArc;
    }
    std::sort(adjacency_[i].begin(), adjacency_[i].end());
  }
}

std::size_t ReconfigurationGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& list : adjacency_) total += list.size();
  return total / 2;
}

std::optional<int> ReconfigurationGraph::index_of(const Arborescence& t) const {
  const auto it = index_.find(t.in_arcs());
  if (it == index_.end() || nodes_[static_cast<std::size_t>(it->second)].root() != t.root()) return std::nullopt;
  return it->second;
}

std::vector<int> ReconfigurationGraph::components() const {
  std::vector<int> comp(nodes_.size(), -1);
  int next = 0;
  for (std::size_t s = 0; s < nodes_.size(); ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> stack{static_cast<int>(s)};
    comp[s] = next;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adjacency_[static_cast<std::size_t>(v)]) {
        if (comp[static_cast<std::size_t>(w)] == -1) {
          comp[static_cast<std::size_t>(w)] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

std::vector<int> ReconfigurationGraph::distances(int source) const {
  std::vector<int> dist(nodes_.size(), -1);
  std::deque<int> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : adjacency_[static_cast<std::size_t>(v)]) {
      if (dist[static_cast<std::size_t>(w)] == -1) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

ReconfigurationGraph build_reconfiguration_graph(const TemporalDigraph& d, std::uint64_t budget_per_root) {
  return ReconfigurationGraph(d, enumerate_all(d, budget_per_root));
}

std::optional<ShortestResult> bfs_shortest(const TemporalDigraph& d, const ReconfigurationGraph& g, int from, int to) {
  const auto& adj = g.adjacency();
  std::vector<int> parent(static_cast<std::size_t>(g.node_count()), -1);
  std::deque<int> queue{from};
  parent[static_cast<std::size_t>(from)] = from;
  while (!queue.empty() && parent[static_cast<std::size_t>(to)] == -1) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (parent[static_cast<std::size_t>(w)] == -1) {
        parent[static_cast<std::size_t>(w)] = v;
        queue.push_back(w);
      }
    }
  }
  if (parent[static_cast<std::size_t>(to)] == -1) return std::nullopt;
  std::vector<int> path{to};
  while (path.back() != from) path.push_back(parent[static_cast<std::size_t>(path.back())]);
  std::reverse(path.begin(), path.end());

  const auto& nodes = g.nodes();
  ShortestResult result{static_cast<int>(path.size()) - 1, ReconfSequence{nodes[static_cast<std::size_t>(from)], {}}};
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const auto a = nodes[static_cast<std::size_t>(path[i])].arc_ids();
    const auto b = nodes[static_cast<std::size_t>(path[i + 1])].arc_ids();
    std::vector<ArcId> removed, added;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(removed));
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(added));
    if (removed.size() != 1 || added.size() != 1) throw std::logic_error("reconfiguration graph edge is not a swap");
    result.sequence.steps.push_back(ReconfStep{removed.front(), added.front()});
  }
  (void)d;
  return result;
}

std::optional<ShortestResult> bfs_shortest(const TemporalDigraph& d, const Arborescence& t1, const Arborescence& t2,
                                           std::uint64_t budget_per_root) {
  const auto g = build_reconfiguration_graph(d, budget_per_root);
  const auto a = g.index_of(t1);
  const auto b = g.index_of(t2);
  if (!a || !b) throw std::invalid_argument("bfs_shortest: endpoint is not a time-respecting arborescence");
  return bfs_shortest(d, g, *a, *b);
}

std::vector<std::optional<Label>> oracle_d_all(const TemporalDigraph& d, VertexId r) {
  const int n = d.vertex_count();
  std::vector<std::optional<LabelRank>> best(static_cast<std::size_t>(n));
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  // Depth-first over simple paths whose labels never decrease.
  std::function<void(VertexId, LabelRank)> extend = [&](VertexId v, LabelRank last) {
    on_path[static_cast<std::size_t>(v)] = 1;
    for (ArcId id : d.out_arcs(v)) {
      const VertexId w = d.head(id);
      const LabelRank rank = d.rank(id);
      if (on_path[static_cast<std::size_t>(w)] || rank < last) continue;
      auto& slot = best[static_cast<std::size_t>(w)];
      if (!slot || rank < *slot) slot = rank;
      extend(w, rank);
    }
    on_path[static_cast<std::size_t>(v)] = 0;
  };
  extend(r, std::numeric_limits<LabelRank>::min());

  std::vector<std::optional<Label>> out(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) {
    if (v == r) {
      out[static_cast<std::size_t>(v)] = Label(0);
    } else if (const auto& slot = best[static_cast<std::size_t>(v)]) {
      out[static_cast<std::size_t>(v)] = d.label_of_rank(*slot);
    }
  }
  return out;
}

std::optional<Label> oracle_d(const TemporalDigraph& d, VertexId r, VertexId v) {
  return oracle_d_all(d, r).at(static_cast<std::size_t>(v));
}

}  // namespace tarb::oracle
