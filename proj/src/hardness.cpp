#include "tarb/hardness.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "tarb/errors.hpp"

namespace tarb::hardness {

void VertexCoverInstance::validate() const {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  if (k < 0 || k > vertex_count) throw std::invalid_argument("k must lie in [0, |V|]");
  std::set<std::pair<int, int>> seen;
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop in vertex cover graph");
    if (u > v) throw std::invalid_argument("edge endpoints must be ordered u < v");
    if (!seen.emplace(u, v).second) throw std::invalid_argument("repeated edge");
  }
}

const char* to_string(LabelVariant v) {
  switch (v) {
    case LabelVariant::Standard: return "standard";
    case LabelVariant::ThreeLabel: return "three-label";
    case LabelVariant::Perturbed: return "perturbed";
  }
  return "?";
}

LabelVariant parse_variant(const std::string& text) {
  if (text == "standard") return LabelVariant::Standard;
  if (text == "three-label") return LabelVariant::ThreeLabel;
  if (text == "perturbed") return LabelVariant::Perturbed;
  throw std::invalid_argument("unknown label variant '" + text + "'");
}

namespace {

// No time-respecting path ever uses two arcs of the same class back to back,
// so only the order between classes matters. Perturbed keeps classes apart by
// offsets below 1/(2|A|+2) and makes every label distinct.
Label class_label(LabelVariant variant, int cls, int arc_index, int arc_total) {
  switch (variant) {
    case LabelVariant::Standard: return Label(cls);
    case LabelVariant::ThreeLabel: return Label(cls == 1 ? 1 : (cls == 5 ? 3 : 2));
    case LabelVariant::Perturbed: {
      const long den = static_cast<long>(arc_total + 1) * (2L * arc_total + 2);
      return Label(cls * den + arc_index + 1, den);
    }
  }
  throw std::logic_error("unknown label variant");
}

}  // namespace

HardnessInstance reduce_vertex_cover(const VertexCoverInstance& vc, LabelVariant variant) {
  vc.validate();
  const int nv = vc.vertex_count;
  const int ne = static_cast<int>(vc.edges.size());
  Roles roles;
  for (int v = 0; v < nv; ++v) roles.w_vertex.push_back(2 + v);
  for (int e = 0; e < ne; ++e) roles.w_edge.push_back(2 + nv + e);

  struct Pending {
    VertexId tail, head;
    int cls;
  };
  std::vector<Pending> pending;
  const auto add = [&](VertexId tail, VertexId head, int cls) {
    pending.push_back({tail, head, cls});
    return static_cast<ArcId>(pending.size() - 1);
  };
  for (int e = 0; e < ne; ++e) {
    roles.r1_to_edge.push_back(add(roles.r1, roles.w_edge[e], 1));
    roles.r2_to_edge.push_back(add(roles.r2, roles.w_edge[e], 1));
  }
  roles.r1_to_r2 = add(roles.r1, roles.r2, 2);
  roles.r2_to_r1 = add(roles.r2, roles.r1, 2);
  for (int v = 0; v < nv; ++v) roles.a.push_back(add(roles.r2, roles.w_vertex[v], 3));
  for (int e = 0; e < ne; ++e) {
    const auto [u, v] = vc.edges[e];
    const ArcId first = add(roles.w_vertex[u], roles.w_edge[e], 4);
    const ArcId second = add(roles.w_vertex[v], roles.w_edge[e], 4);
    roles.incidence.emplace_back(first, second);
  }
  for (int v = 0; v < nv; ++v) roles.a_prime.push_back(add(roles.r2, roles.w_vertex[v], 5));

  const int total = static_cast<int>(pending.size());
  std::vector<ArcSpec> specs;
  for (int i = 0; i < total; ++i) {
    const auto& p = pending[static_cast<std::size_t>(i)];
    specs.push_back(ArcSpec{p.tail, p.head, class_label(variant, p.cls, i, total)});
    roles.arc_class.push_back(p.cls);
  }
  const int n = 2 + nv + ne;
  TemporalDigraph d(n, specs);

  std::vector<ArcId> t1(static_cast<std::size_t>(n), kNoArc);
  std::vector<ArcId> t2(static_cast<std::size_t>(n), kNoArc);
  t1[static_cast<std::size_t>(roles.r2)] = roles.r1_to_r2;
  t2[static_cast<std::size_t>(roles.r1)] = roles.r2_to_r1;
  for (int e = 0; e < ne; ++e) {
    t1[static_cast<std::size_t>(roles.w_edge[e])] = roles.r1_to_edge[e];
    t2[static_cast<std::size_t>(roles.w_edge[e])] = roles.r2_to_edge[e];
  }
  for (int v = 0; v < nv; ++v) {
    t1[static_cast<std::size_t>(roles.w_vertex[v])] = roles.a_prime[v];
    t2[static_cast<std::size_t>(roles.w_vertex[v])] = roles.a_prime[v];
  }
  HardnessInstance inst{vc,
                        variant,
                        std::move(d),
                        Arborescence(roles.r1, std::move(t1)),
                        Arborescence(roles.r2, std::move(t2)),
                        2 * ne + 2 * vc.k + 1,
                        std::move(roles)};
  require_time_respecting(inst.digraph, inst.t1, "reduced T1");
  require_time_respecting(inst.digraph, inst.t2, "reduced T2");
  return inst;
}

bool is_vertex_cover(const VertexCoverInstance& vc, const std::vector<int>& cover) {
  std::vector<char> in(static_cast<std::size_t>(vc.vertex_count), 0);
  for (int v : cover) {
    if (v < 0 || v >= vc.vertex_count) return false;
    in[static_cast<std::size_t>(v)] = 1;
  }
  return std::all_of(vc.edges.begin(), vc.edges.end(), [&](const auto& e) {
    return in[static_cast<std::size_t>(e.first)] || in[static_cast<std::size_t>(e.second)];
  });
}

std::vector<int> extract_vertex_cover(const HardnessInstance& inst, const ReconfSequence& s) {
  const auto& d = inst.digraph;
  const auto& roles = inst.roles;
  const auto trail = replay(d, s);
  if (!trail) throw std::invalid_argument("sequence does not replay on the instance");
  for (std::size_t i = 0; i + 1 < trail->size(); ++i) {
    const auto& before = (*trail)[i];
    if (before.root() == (*trail)[i + 1].root()) continue;
    const ReconfStep step = s.steps[i];
    if (step.remove != roles.r1_to_r2 || step.add != roles.r2_to_r1) {
      throw std::logic_error("root change is not the (r1,r2) -> (r2,r1) swap");
    }
    std::vector<int> cover;
    for (ArcId a : before.arc_ids()) {
      if (a == roles.r1_to_r2) continue;
      if (roles.arc_class[static_cast<std::size_t>(a)] == 1) throw std::logic_error("root-changing tree uses an A1 arc");
    }
    for (int v = 0; v < inst.source.vertex_count; ++v) {
      if (before.contains(d, roles.a[static_cast<std::size_t>(v)])) cover.push_back(v);
    }
    return cover;
  }
  throw std::invalid_argument("sequence never changes root");
}

std::vector<int> canonical_sigma(const VertexCoverInstance& vc, const std::vector<int>& cover) {
  std::vector<char> in(static_cast<std::size_t>(vc.vertex_count), 0);
  for (int v : cover) in[static_cast<std::size_t>(v)] = 1;
  std::vector<int> sigma;
  for (const auto& [u, v] : vc.edges) {
    if (in[static_cast<std::size_t>(u)]) {
      sigma.push_back(u);
    } else if (in[static_cast<std::size_t>(v)]) {
      sigma.push_back(v);
    } else {
      throw std::invalid_argument("not a vertex cover");
    }
  }
  return sigma;
}

ReconfSequence build_cover_sequence(const HardnessInstance& inst, const std::vector<int>& cover,
                                    const std::vector<int>& sigma) {
  const auto& vc = inst.source;
  const auto& roles = inst.roles;
  if (!is_vertex_cover(vc, cover)) throw std::invalid_argument("not a vertex cover");
  std::vector<int> x = cover;
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  if (sigma.size() != vc.edges.size()) throw std::invalid_argument("sigma must assign every edge");
  for (std::size_t e = 0; e < vc.edges.size(); ++e) {
    const int s = sigma[e];
    if ((s != vc.edges[e].first && s != vc.edges[e].second) || !std::binary_search(x.begin(), x.end(), s)) {
      throw std::invalid_argument("sigma(e) must be an endpoint of e inside the cover");
    }
  }
  const auto incidence_arc = [&](std::size_t e) {
    return sigma[e] == vc.edges[e].first ? roles.incidence[e].first : roles.incidence[e].second;
  };

  ReconfSequence seq{inst.t1, {}};
  for (int v : x) seq.steps.push_back({roles.a_prime[static_cast<std::size_t>(v)], roles.a[static_cast<std::size_t>(v)]});
  for (std::size_t e = 0; e < vc.edges.size(); ++e) seq.steps.push_back({roles.r1_to_edge[e], incidence_arc(e)});
  seq.steps.push_back({roles.r1_to_r2, roles.r2_to_r1});
  // Incidence arcs must leave before a'_v returns: λ(A4) < λ(A5).
  for (std::size_t e = 0; e < vc.edges.size(); ++e) seq.steps.push_back({incidence_arc(e), roles.r2_to_edge[e]});
  for (int v : x) seq.steps.push_back({roles.a[static_cast<std::size_t>(v)], roles.a_prime[static_cast<std::size_t>(v)]});
  return seq;
}

bool vc_brute_force(const VertexCoverInstance& vc, int max_vertices) {
  vc.validate();
  if (vc.vertex_count > max_vertices) {
    throw BudgetExceeded("vertex cover brute force limited to " + std::to_string(max_vertices) + " vertices",
                         vc.vertex_count);
  }
  const std::uint32_t limit = 1u << vc.vertex_count;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (std::popcount(mask) > vc.k) continue;
    const bool covers = std::all_of(vc.edges.begin(), vc.edges.end(), [&](const auto& e) {
      return ((mask >> e.first) & 1u) || ((mask >> e.second) & 1u);
    });
    if (covers) return true;
  }
  return false;
}

}  // namespace tarb::hardness
