#include "tarb/free_root.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "tarb/minimal_arb.hpp"

namespace tarb {

const char* to_string(AdjacencyKind kind) {
  switch (kind) {
    case AdjacencyKind::CondI: return "cond-i";
    case AdjacencyKind::CondII: return "cond-ii";
    case AdjacencyKind::CondIIIPrime: return "cond-iii-prime";
  }
  return "?";
}

namespace {

std::optional<ArcId> cheapest_arc(const TemporalDigraph& d, VertexId tail, VertexId head) {
  std::optional<ArcId> best;
  for (ArcId id : d.out_arcs(tail)) {
    if (d.head(id) != head) continue;
    if (!best || d.rank(id) < d.rank(*best)) best = id;
  }
  return best;
}

Arborescence lift(const TemporalDigraph& d, const Arborescence& t, const std::vector<ArcId>& origin) {
  std::vector<ArcId> in_arc(static_cast<std::size_t>(d.vertex_count()), kNoArc);
  for (VertexId v = 0; v < t.vertex_count(); ++v) {
    const ArcId a = t.in_arc(v);
    if (a != kNoArc) in_arc[static_cast<std::size_t>(v)] = origin[static_cast<std::size_t>(a)];
  }
  return Arborescence(t.root(), std::move(in_arc));
}

// Time-respecting arborescence of the quotient by `vertices` using only arcs
// of rank >= t, rooted at the contracted vertex; returned as original arc ids.
std::optional<std::vector<ArcId>> extension_arcs(const TemporalDigraph& d, std::span<const VertexId> vertices,
                                                 LabelRank t) {
  const auto c = contract(d, vertices);
  std::vector<ArcId> keep;
  for (const auto& a : c.quotient.arcs()) {
    if (a.rank >= t) keep.push_back(a.id);
  }
  const auto sub = c.quotient.arc_subgraph(keep);
  const auto best = minimal_arborescence(sub.digraph, c.contracted_vertex);
  if (!best) return std::nullopt;
  std::vector<ArcId> arcs;
  for (ArcId a : best->tree.arc_ids()) {
    arcs.push_back(c.arc_origin[static_cast<std::size_t>(sub.arc_origin[static_cast<std::size_t>(a)])]);
  }
  return arcs;
}

// BFS path using only arcs of rank t with both ends in `inside`; arc ids in
// path order. Smaller arc ids are explored first.
std::vector<ArcId> labelled_path(const TemporalDigraph& d, const std::vector<char>& inside, LabelRank t,
                                 VertexId from, VertexId to) {
  std::vector<ArcId> via(static_cast<std::size_t>(d.vertex_count()), kNoArc);
  std::vector<char> seen(static_cast<std::size_t>(d.vertex_count()), 0);
  std::deque<VertexId> queue{from};
  seen[static_cast<std::size_t>(from)] = 1;
  while (!queue.empty() && !seen[static_cast<std::size_t>(to)]) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (ArcId id : d.out_arcs(v)) {
      const VertexId w = d.head(id);
      if (d.rank(id) != t || !inside[static_cast<std::size_t>(w)] || seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      via[static_cast<std::size_t>(w)] = id;
      queue.push_back(w);
    }
  }
  if (!seen[static_cast<std::size_t>(to)]) throw std::logic_error("component is not strongly connected in D_t");
  std::vector<ArcId> path;
  for (VertexId v = to; v != from; v = d.tail(via[static_cast<std::size_t>(v)])) {
    path.push_back(via[static_cast<std::size_t>(v)]);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

Arborescence require_arborescence(const TemporalDigraph& d, const std::vector<ArcId>& arcs, VertexId root) {
  auto t = make_arborescence(d, arcs, root);
  if (!t || !is_time_respecting(d, *t)) throw std::logic_error("constructed arborescence failed validation");
  return std::move(*t);
}

RootChange flipped(const RootChange& c) { return RootChange{c.after, c.before, ReconfStep{c.step.add, c.step.remove}}; }

}  // namespace

bool is_extendible(const TemporalDigraph& d, std::span<const VertexId> component, LabelRank t) {
  return extension_arcs(d, component, t).has_value();
}

std::optional<AdjacencyWitness> check_cond_i(const TemporalDigraph& d, VertexId r1, VertexId r2) {
  if (r1 == r2) throw std::invalid_argument("check_cond_i: roots must differ");
  // The cheapest parallel (r2, r1) imposes the weakest constraint.
  const auto f = cheapest_arc(d, r2, r1);
  if (!f) return std::nullopt;
  std::vector<ArcId> keep;
  for (const auto& a : d.arcs()) {
    if (a.tail == r1 && a.head != r2 && a.rank < d.rank(*f)) continue;
    keep.push_back(a.id);
  }
  const auto sub = d.arc_subgraph(keep);
  const auto best = minimal_arborescence(sub.digraph, r1);
  if (!best) return std::nullopt;
  return AdjacencyWitness{AdjacencyKind::CondI, r1, r2, *f, lift(d, best->tree, sub.arc_origin), -1, {}};
}

std::optional<AdjacencyWitness> check_cond_ii(const TemporalDigraph& d, VertexId r1, VertexId r2) {
  auto w = check_cond_i(d, r2, r1);
  if (!w) return std::nullopt;
  w->kind = AdjacencyKind::CondII;
  w->from = r1;
  w->to = r2;
  return w;
}

std::optional<AdjacencyWitness> check_cond_iii_prime(const TemporalDigraph& d, VertexId r1, VertexId r2) {
  if (r1 == r2) throw std::invalid_argument("check_cond_iii_prime: roots must differ");
  for (LabelRank t : d.present_ranks()) {
    const auto dt = restrict_to_rank(d, t);
    for (auto& h : scc_decompose(dt.digraph)) {
      if (!std::binary_search(h.begin(), h.end(), r1)) continue;
      if (std::binary_search(h.begin(), h.end(), r2) && is_extendible(d, h, t)) {
        return AdjacencyWitness{AdjacencyKind::CondIIIPrime, r1, r2, kNoArc, std::nullopt, t, std::move(h)};
      }
      break;
    }
  }
  return std::nullopt;
}

bool revalidate(const TemporalDigraph& d, const AdjacencyWitness& w) {
  if (w.from == w.to) return false;
  switch (w.kind) {
    case AdjacencyKind::CondI:
    case AdjacencyKind::CondII: {
      const bool first = w.kind == AdjacencyKind::CondI;
      // CondI: f = (to, from) and support rooted at from. CondII mirrors it.
      const VertexId root = first ? w.from : w.to;
      const VertexId other = first ? w.to : w.from;
      if (w.arc < 0 || w.arc >= d.arc_count() || d.tail(w.arc) != other || d.head(w.arc) != root) return false;
      if (!w.support || w.support->root() != root || w.support->vertex_count() != d.vertex_count()) return false;
      if (!is_arborescence(d, w.support->arc_ids(), root) || !is_time_respecting(d, *w.support)) return false;
      for (ArcId a : w.support->arc_ids()) {
        if (d.tail(a) == root && d.head(a) != other && d.rank(a) < d.rank(w.arc)) return false;
      }
      return true;
    }
    case AdjacencyKind::CondIIIPrime: {
      const auto& h = w.component;
      if (!std::binary_search(h.begin(), h.end(), w.from) || !std::binary_search(h.begin(), h.end(), w.to)) {
        return false;
      }
      const auto dt = restrict_to_rank(d, w.t);
      const auto sccs = scc_decompose(dt.digraph);
      if (std::find(sccs.begin(), sccs.end(), h) == sccs.end()) return false;
      return is_extendible(d, h, w.t);
    }
  }
  return false;
}

bool RootAdjacencyGraph::is_feasible(VertexId r) const {
  return std::binary_search(feasible_roots.begin(), feasible_roots.end(), r);
}

std::vector<VertexId> RootAdjacencyGraph::neighbours(VertexId r) const {
  std::vector<VertexId> out;
  for (const auto& [key, w] : edges) {
    if (key.first == r) out.push_back(key.second);
    if (key.second == r) out.push_back(key.first);
  }
  std::sort(out.begin(), out.end());
  return out;
}

const AdjacencyWitness* RootAdjacencyGraph::witness(VertexId a, VertexId b) const {
  const auto it = edges.find({std::min(a, b), std::max(a, b)});
  return it == edges.end() ? nullptr : &it->second;
}

std::vector<VertexId> RootAdjacencyGraph::root_path(VertexId from, VertexId to) const {
  if (!is_feasible(from) || !is_feasible(to)) return {};
  if (from == to) return {from};
  std::map<VertexId, std::vector<VertexId>> adj;
  for (const auto& [key, w] : edges) {
    adj[key.first].push_back(key.second);
    adj[key.second].push_back(key.first);
  }
  for (auto& [v, list] : adj) std::sort(list.begin(), list.end());
  std::map<VertexId, VertexId> parent{{from, from}};
  std::deque<VertexId> queue{from};
  while (!queue.empty() && !parent.contains(to)) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : adj[v]) {
      if (parent.emplace(w, v).second) queue.push_back(w);
    }
  }
  if (!parent.contains(to)) return {};
  std::vector<VertexId> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

RootAdjacencyGraph build_root_adjacency_graph(const TemporalDigraph& d) {
  RootAdjacencyGraph g;
  const int n = d.vertex_count();
  for (VertexId r = 0; r < n; ++r) {
    if (minimal_arborescence(d, r)) g.feasible_roots.push_back(r);
  }

  // Conditions (i)/(ii) need an arc between the two roots.
  std::vector<std::pair<VertexId, VertexId>> linked;
  for (const auto& a : d.arcs()) {
    if (g.is_feasible(a.tail) && g.is_feasible(a.head)) {
      linked.emplace_back(std::min(a.tail, a.head), std::max(a.tail, a.head));
    }
  }
  std::sort(linked.begin(), linked.end());
  linked.erase(std::unique(linked.begin(), linked.end()), linked.end());
  for (const auto& [a, b] : linked) {
    if (auto w = check_cond_i(d, a, b)) {
      g.edges.emplace(std::pair{a, b}, std::move(*w));
    } else if (auto w2 = check_cond_ii(d, a, b)) {
      g.edges.emplace(std::pair{a, b}, std::move(*w2));
    }
  }

  // Condition (iii)': one extendibility test per (t, component) serves every
  // root pair inside it. Ascending t, so each pair keeps its smallest t.
  for (LabelRank t : d.present_ranks()) {
    const auto dt = restrict_to_rank(d, t);
    for (const auto& h : scc_decompose(dt.digraph)) {
      if (h.size() < 2 || !is_extendible(d, h, t)) continue;
      for (std::size_t i = 0; i < h.size(); ++i) {
        for (std::size_t j = i + 1; j < h.size(); ++j) {
          g.edges.try_emplace(std::pair{h[i], h[j]},
                              AdjacencyWitness{AdjacencyKind::CondIIIPrime, h[i], h[j], kNoArc, std::nullopt, t, h});
        }
      }
    }
  }
  return g;
}

bool reachable(const RootAdjacencyGraph& g, VertexId r1, VertexId r2) { return !g.root_path(r1, r2).empty(); }

bool reachable(const TemporalDigraph& d, const Arborescence& t1, const Arborescence& t2) {
  require_time_respecting(d, t1, "first arborescence");
  require_time_respecting(d, t2, "second arborescence");
  if (t1.root() == t2.root()) return true;
  return reachable(build_root_adjacency_graph(d), t1.root(), t2.root());
}

std::vector<RootChange> realize_edge(const TemporalDigraph& d, const AdjacencyWitness& w, VertexId from, VertexId to) {
  const bool forward = from == w.from && to == w.to;
  if (!forward && !(from == w.to && to == w.from)) throw std::invalid_argument("witness does not join these roots");

  std::vector<RootChange> changes;
  switch (w.kind) {
    case AdjacencyKind::CondI: {
      // support at w.from; swapping its arc into w.to for f = (w.to, w.from) moves the root.
      const Arborescence& a = *w.support;
      const ReconfStep step{a.in_arc(w.to), w.arc};
      auto b = apply_step(d, a, step);
      if (!b) throw std::logic_error("cond-i witness does not yield a root change");
      changes.push_back(RootChange{a, std::move(*b), step});
      break;
    }
    case AdjacencyKind::CondII: {
      const Arborescence& b = *w.support;
      const ReconfStep back{b.in_arc(w.from), w.arc};
      auto a = apply_step(d, b, back);
      if (!a) throw std::logic_error("cond-ii witness does not yield a root change");
      changes.push_back(RootChange{std::move(*a), b, ReconfStep{w.arc, back.remove}});
      break;
    }
    case AdjacencyKind::CondIIIPrime: {
      std::vector<char> inside(static_cast<std::size_t>(d.vertex_count()), 0);
      for (VertexId v : w.component) inside[static_cast<std::size_t>(v)] = 1;
      // Walk from -> to directly so no flipping is needed for this kind.
      for (ArcId e : labelled_path(d, inside, w.t, from, to)) {
        const VertexId p = d.tail(e);
        const VertexId q = d.head(e);
        auto cycle = labelled_path(d, inside, w.t, q, p);
        const ArcId f = cycle.back();
        cycle.push_back(e);
        std::vector<VertexId> cycle_vertices;
        for (ArcId a : cycle) cycle_vertices.push_back(d.head(a));
        auto base = extension_arcs(d, cycle_vertices, w.t);
        if (!base) throw std::logic_error("cycle inside an extendible component is not extendible");
        std::vector<ArcId> before_arcs = *base;
        std::vector<ArcId> after_arcs = *base;
        for (ArcId a : cycle) {
          if (a != f) before_arcs.push_back(a);
          if (a != e) after_arcs.push_back(a);
        }
        changes.push_back(RootChange{require_arborescence(d, before_arcs, p), require_arborescence(d, after_arcs, q),
                                     ReconfStep{e, f}});
      }
      return changes;
    }
  }
  if (!forward) {
    for (auto& c : changes) c = flipped(c);
  }
  return changes;
}

std::optional<ReconfSequence> construct_sequence(const TemporalDigraph& d, const RootAdjacencyGraph& g,
                                                 const Arborescence& t1, const Arborescence& t2) {
  require_time_respecting(d, t1, "first arborescence");
  require_time_respecting(d, t2, "second arborescence");
  if (t1.root() == t2.root()) return reconfigure_same_root(d, t1, t2);
  const auto path = g.root_path(t1.root(), t2.root());
  if (path.empty()) return std::nullopt;

  ReconfSequence s{t1, {}};
  Arborescence current = t1;
  const auto append_same_root = [&](const Arborescence& target) {
    const auto part = reconfigure_same_root(d, current, target);
    s.steps.insert(s.steps.end(), part.steps.begin(), part.steps.end());
  };
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const auto* w = g.witness(path[i], path[i + 1]);
    for (const auto& change : realize_edge(d, *w, path[i], path[i + 1])) {
      append_same_root(change.before);
      s.steps.push_back(change.step);
      current = change.after;
    }
  }
  append_same_root(t2);
  if (!verify_sequence(d, s, t2)) throw std::logic_error("constructed sequence failed verification");
  return s;
}

std::optional<ReconfSequence> construct_sequence(const TemporalDigraph& d, const Arborescence& t1,
                                                 const Arborescence& t2) {
  require_time_respecting(d, t1, "first arborescence");
  require_time_respecting(d, t2, "second arborescence");
  if (t1.root() == t2.root()) return reconfigure_same_root(d, t1, t2);
  return construct_sequence(d, build_root_adjacency_graph(d), t1, t2);
}

}  // namespace tarb
