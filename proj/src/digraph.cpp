#include "tarb/digraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace tarb {

struct DigraphAccess {
  static TemporalDigraph make(int n, std::vector<Arc> arcs, std::shared_ptr<const std::vector<Label>> labels) {
    return TemporalDigraph(n, std::move(arcs), std::move(labels));
  }
  static const std::shared_ptr<const std::vector<Label>>& labels(const TemporalDigraph& d) { return d.labels_; }
};

TemporalDigraph::TemporalDigraph(int vertex_count, std::span<const ArcSpec> arcs) : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  std::vector<Label> table;
  table.reserve(arcs.size());
  for (const auto& a : arcs) {
    if (a.tail < 0 || a.tail >= vertex_count || a.head < 0 || a.head >= vertex_count) {
      throw std::invalid_argument("arc endpoint out of range");
    }
    if (a.tail == a.head) throw std::invalid_argument("self-loop at vertex " + std::to_string(a.tail));
    table.push_back(a.label);
  }
  std::sort(table.begin(), table.end());
  table.erase(std::unique(table.begin(), table.end()), table.end());
  arcs_.reserve(arcs.size());
  for (const auto& a : arcs) {
    const auto pos = std::lower_bound(table.begin(), table.end(), a.label) - table.begin();
    arcs_.push_back(Arc{static_cast<ArcId>(arcs_.size()), a.tail, a.head, static_cast<LabelRank>(pos)});
  }
  labels_ = std::make_shared<const std::vector<Label>>(std::move(table));
  index();
}

TemporalDigraph::TemporalDigraph(int vertex_count, std::vector<Arc> arcs,
                                 std::shared_ptr<const std::vector<Label>> labels)
    : vertex_count_(vertex_count), arcs_(std::move(arcs)), labels_(std::move(labels)) {
  index();
}

void TemporalDigraph::index() {
  in_.assign(static_cast<std::size_t>(vertex_count_), {});
  out_.assign(static_cast<std::size_t>(vertex_count_), {});
  for (const auto& a : arcs_) {
    in_[static_cast<std::size_t>(a.head)].push_back(a.id);
    out_[static_cast<std::size_t>(a.tail)].push_back(a.id);
  }
}

std::optional<LabelRank> TemporalDigraph::find_rank(const Label& t) const {
  const auto it = std::lower_bound(labels_->begin(), labels_->end(), t);
  if (it == labels_->end() || *it != t) return std::nullopt;
  return static_cast<LabelRank>(it - labels_->begin());
}

std::vector<LabelRank> TemporalDigraph::present_ranks() const {
  std::vector<LabelRank> ranks;
  ranks.reserve(arcs_.size());
  for (const auto& a : arcs_) ranks.push_back(a.rank);
  std::sort(ranks.begin(), ranks.end());
  ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
  return ranks;
}

std::string TemporalDigraph::vertex_name(VertexId v) const {
  const auto i = static_cast<std::size_t>(v);
  if (i < names_.size() && !names_[i].empty()) return names_[i];
  return std::to_string(v);
}

void TemporalDigraph::set_names(std::vector<std::string> names) {
  names.resize(static_cast<std::size_t>(vertex_count_));
  names_ = std::move(names);
}

SubgraphResult TemporalDigraph::arc_subgraph(std::span<const ArcId> keep) const {
  std::vector<Arc> arcs;
  arcs.reserve(keep.size());
  for (ArcId id : keep) {
    Arc a = arc(id);
    a.id = static_cast<ArcId>(arcs.size());
    arcs.push_back(a);
  }
  SubgraphResult result{TemporalDigraph(vertex_count_, std::move(arcs), labels_), {keep.begin(), keep.end()}};
  result.digraph.names_ = names_;
  return result;
}

Arborescence::Arborescence(VertexId root, std::vector<ArcId> in_arc) : root_(root), in_arc_(std::move(in_arc)) {
  if (root < 0 || root >= static_cast<VertexId>(in_arc_.size())) throw std::invalid_argument("root out of range");
  if (in_arc_[static_cast<std::size_t>(root)] != kNoArc) throw std::invalid_argument("root has an incoming arc");
}

std::vector<ArcId> Arborescence::arc_ids() const {
  std::vector<ArcId> ids;
  ids.reserve(in_arc_.size());
  for (ArcId a : in_arc_) {
    if (a != kNoArc) ids.push_back(a);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

bool canonical_less(const Arborescence& a, const Arborescence& b) {
  const auto x = a.arc_ids();
  const auto y = b.arc_ids();
  if (x != y) return x < y;
  return a.root() < b.root();
}

std::vector<ArcId> delta_out(const TemporalDigraph& d, std::span<const VertexId> vertices) {
  std::vector<char> inside(static_cast<std::size_t>(d.vertex_count()), 0);
  for (VertexId v : vertices) inside[static_cast<std::size_t>(v)] = 1;
  std::vector<ArcId> out;
  for (const auto& a : d.arcs()) {
    if (inside[static_cast<std::size_t>(a.tail)] && !inside[static_cast<std::size_t>(a.head)]) out.push_back(a.id);
  }
  return out;
}

namespace {

// Parent arc per vertex when `arcs` has in-degree 0 at root and 1 elsewhere.
std::optional<std::vector<ArcId>> parent_arcs(const TemporalDigraph& d, std::span<const ArcId> arcs, VertexId root) {
  const int n = d.vertex_count();
  if (root < 0 || root >= n) return std::nullopt;
  if (static_cast<int>(arcs.size()) != n - 1) return std::nullopt;
  std::vector<ArcId> parent(static_cast<std::size_t>(n), kNoArc);
  for (ArcId id : arcs) {
    if (id < 0 || id >= d.arc_count()) return std::nullopt;
    const VertexId h = d.head(id);
    if (h == root || parent[static_cast<std::size_t>(h)] != kNoArc) return std::nullopt;
    parent[static_cast<std::size_t>(h)] = id;
  }
  return parent;
}

}  // namespace

bool is_arborescence(const TemporalDigraph& d, std::span<const ArcId> arcs, VertexId root) {
  return make_arborescence(d, arcs, root).has_value();
}

std::optional<Arborescence> make_arborescence(const TemporalDigraph& d, std::span<const ArcId> arcs, VertexId root) {
  auto parent = parent_arcs(d, arcs, root);
  if (!parent) return std::nullopt;
  const int n = d.vertex_count();
  // Reachability from root inside the arc set.
  std::vector<std::vector<VertexId>> children(static_cast<std::size_t>(n));
  for (ArcId id : arcs) children[static_cast<std::size_t>(d.tail(id))].push_back(d.head(id));
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<VertexId> stack{root};
  seen[static_cast<std::size_t>(root)] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : children[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) return std::nullopt;
  return Arborescence(root, std::move(*parent));
}

std::optional<TimeViolation> find_time_violation(const TemporalDigraph& d, const Arborescence& t) {
  // Every root path is a chain of parent/child arcs, so checking each arc
  // against its tail's incoming arc covers all paths.
  for (VertexId v = 0; v < t.vertex_count(); ++v) {
    const ArcId child = t.in_arc(v);
    if (child == kNoArc) continue;
    const ArcId parent = t.in_arc(d.tail(child));
    if (parent != kNoArc && d.rank(parent) > d.rank(child)) return TimeViolation{parent, child};
  }
  return std::nullopt;
}

bool is_time_respecting(const TemporalDigraph& d, const Arborescence& t) { return !find_time_violation(d, t); }

ContractionResult contract(const TemporalDigraph& d, std::span<const VertexId> vertices) {
  if (vertices.empty()) throw std::invalid_argument("contract: empty vertex set");
  const int n = d.vertex_count();
  std::vector<char> inside(static_cast<std::size_t>(n), 0);
  for (VertexId v : vertices) inside[static_cast<std::size_t>(v)] = 1;
  ContractionResult result;
  result.vertex_map.assign(static_cast<std::size_t>(n), -1);
  VertexId next = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (!inside[static_cast<std::size_t>(v)]) result.vertex_map[static_cast<std::size_t>(v)] = next++;
  }
  result.contracted_vertex = next;
  for (VertexId v = 0; v < n; ++v) {
    if (inside[static_cast<std::size_t>(v)]) result.vertex_map[static_cast<std::size_t>(v)] = next;
  }
  std::vector<Arc> arcs;
  for (const auto& a : d.arcs()) {
    const bool t_in = inside[static_cast<std::size_t>(a.tail)];
    const bool h_in = inside[static_cast<std::size_t>(a.head)];
    if (t_in && h_in) continue;
    arcs.push_back(Arc{static_cast<ArcId>(arcs.size()), result.vertex_map[static_cast<std::size_t>(a.tail)],
                       result.vertex_map[static_cast<std::size_t>(a.head)], a.rank});
    result.arc_origin.push_back(a.id);
  }
  result.quotient = DigraphAccess::make(next + 1, std::move(arcs), DigraphAccess::labels(d));
  return result;
}

std::vector<std::vector<VertexId>> scc_decompose(const TemporalDigraph& d) {
  // Iterative Tarjan.
  const int n = d.vertex_count();
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
  std::vector<VertexId> stack;
  std::vector<std::pair<VertexId, std::size_t>> call;
  std::vector<std::vector<VertexId>> components;
  int counter = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (index[static_cast<std::size_t>(s)] != -1) continue;
    call.emplace_back(s, 0);
    while (!call.empty()) {
      auto& [v, next] = call.back();
      const auto vi = static_cast<std::size_t>(v);
      if (next == 0 && index[vi] == -1) {
        index[vi] = low[vi] = counter++;
        stack.push_back(v);
        on_stack[vi] = 1;
      }
      const auto out = d.out_arcs(v);
      if (next < out.size()) {
        const VertexId w = d.head(out[next++]);
        const auto wi = static_cast<std::size_t>(w);
        if (index[wi] == -1) {
          call.emplace_back(w, 0);
        } else if (on_stack[wi]) {
          low[vi] = std::min(low[vi], index[wi]);
        }
        continue;
      }
      if (low[vi] == index[vi]) {
        std::vector<VertexId> comp;
        VertexId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = 0;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
      }
      const int finished_low = low[vi];
      call.pop_back();
      if (!call.empty()) {
        const auto pi = static_cast<std::size_t>(call.back().first);
        low[pi] = std::min(low[pi], finished_low);
      }
    }
  }
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

SubgraphResult restrict_to_rank(const TemporalDigraph& d, LabelRank t) {
  std::vector<ArcId> keep;
  for (const auto& a : d.arcs()) {
    if (a.rank == t) keep.push_back(a.id);
  }
  return d.arc_subgraph(keep);
}

SubgraphResult restrict_to_label(const TemporalDigraph& d, const Label& t) {
  const auto rank = d.find_rank(t);
  if (!rank) return d.arc_subgraph({});
  return restrict_to_rank(d, *rank);
}

}  // namespace tarb
