#include "tarb/minimal_arb.hpp"

#include <queue>
#include <stdexcept>
#include <utility>

namespace tarb {

std::optional<MinimalArbResult> minimal_arborescence(const TemporalDigraph& d, VertexId root,
                                                     const GreedyObserver& observer) {
  const int n = d.vertex_count();
  if (root < 0 || root >= n) throw std::invalid_argument("root out of range");

  std::vector<char> reached(static_cast<std::size_t>(n), 0);
  std::vector<LabelRank> d_rank(static_cast<std::size_t>(n), -1);
  std::vector<ArcId> in_arc(static_cast<std::size_t>(n), kNoArc);
  std::vector<ArcId> order;
  order.reserve(static_cast<std::size_t>(n > 0 ? n - 1 : 0));

  // Eligibility of an arc depends only on d'(tail), which is fixed once the
  // tail joins R, so arcs are filtered when pushed and heads re-checked when popped.
  using Key = std::pair<LabelRank, ArcId>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> queue;
  const auto reach = [&](VertexId v, LabelRank at) {
    reached[static_cast<std::size_t>(v)] = 1;
    d_rank[static_cast<std::size_t>(v)] = at;
    for (ArcId id : d.out_arcs(v)) {
      if (at < 0 || d.rank(id) >= at) queue.emplace(d.rank(id), id);
    }
  };
  reach(root, -1);  // d'(root) = 0 admits every label.

  int count = 1;
  while (count < n) {
    while (!queue.empty() && reached[static_cast<std::size_t>(d.head(queue.top().second))]) queue.pop();
    if (queue.empty()) return std::nullopt;
    const auto [rank, id] = queue.top();
    queue.pop();
    const VertexId h = d.head(id);
    in_arc[static_cast<std::size_t>(h)] = id;
    order.push_back(id);
    reach(h, rank);
    ++count;
    if (observer) observer(order, reached);
  }

  MinimalArbResult result{Arborescence(root, std::move(in_arc)), {}, std::move(order)};
  result.d_prime.reserve(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) {
    result.d_prime.push_back(v == root ? Label(0) : d.label_of_rank(d_rank[static_cast<std::size_t>(v)]));
  }
  return result;
}

bool is_minimal(const TemporalDigraph& d, const Arborescence& t) {
  if (t.vertex_count() != d.vertex_count() || !is_arborescence(d, t.arc_ids(), t.root())) {
    throw std::invalid_argument("is_minimal: not an arborescence of the digraph");
  }
  if (!is_time_respecting(d, t)) throw std::invalid_argument("is_minimal: arborescence is not time-respecting");
  const auto best = minimal_arborescence(d, t.root());
  if (!best) throw std::logic_error("is_minimal: greedy failed on a feasible root");
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    if (v == t.root()) continue;
    if (d.label(t.in_arc(v)) != best->d_prime[static_cast<std::size_t>(v)]) return false;
  }
  return true;
}

}  // namespace tarb
