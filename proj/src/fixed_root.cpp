#include "tarb/fixed_root.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>

#include "tarb/minimal_arb.hpp"

namespace tarb {

void require_time_respecting(const TemporalDigraph& d, const Arborescence& t, const char* what) {
  if (t.vertex_count() != d.vertex_count() || !is_arborescence(d, t.arc_ids(), t.root())) {
    throw std::invalid_argument(std::string(what) + " is not an arborescence of the digraph");
  }
  if (!is_time_respecting(d, t)) throw std::invalid_argument(std::string(what) + " is not time-respecting");
}

std::optional<Arborescence> apply_step(const TemporalDigraph& d, const Arborescence& t, ReconfStep step) {
  if (step.remove < 0 || step.remove >= d.arc_count() || step.add < 0 || step.add >= d.arc_count()) {
    return std::nullopt;
  }
  if (!t.contains(d, step.remove) || t.contains(d, step.add)) return std::nullopt;
  std::vector<ArcId> in_arc = t.in_arcs();
  in_arc[static_cast<std::size_t>(d.head(step.remove))] = kNoArc;
  if (in_arc[static_cast<std::size_t>(d.head(step.add))] != kNoArc) return std::nullopt;
  in_arc[static_cast<std::size_t>(d.head(step.add))] = step.add;
  const auto root = std::find(in_arc.begin(), in_arc.end(), kNoArc) - in_arc.begin();
  std::vector<ArcId> arcs;
  for (ArcId a : in_arc) {
    if (a != kNoArc) arcs.push_back(a);
  }
  auto next = make_arborescence(d, arcs, static_cast<VertexId>(root));
  if (!next || !is_time_respecting(d, *next)) return std::nullopt;
  return next;
}

std::optional<std::vector<Arborescence>> replay(const TemporalDigraph& d, const ReconfSequence& s) {
  const auto& start = s.start;
  if (start.vertex_count() != d.vertex_count() || !is_arborescence(d, start.arc_ids(), start.root()) ||
      !is_time_respecting(d, start)) {
    return std::nullopt;
  }
  std::vector<Arborescence> trail{start};
  trail.reserve(s.steps.size() + 1);
  for (const auto& step : s.steps) {
    auto next = apply_step(d, trail.back(), step);
    if (!next) return std::nullopt;
    trail.push_back(std::move(*next));
  }
  return trail;
}

bool verify_sequence(const TemporalDigraph& d, const ReconfSequence& s, const Arborescence& target) {
  const auto trail = replay(d, s);
  return trail && trail->back().arc_ids() == target.arc_ids();
}

namespace {

// Swaps turning `from` into the minimal arborescence `best`, following the
// greedy selection order; arcs of `best` already in `from` are skipped.
std::vector<ReconfStep> walk_to_minimal(const TemporalDigraph& d, const Arborescence& from,
                                        const std::vector<ArcId>& selection) {
  std::vector<ReconfStep> steps;
  for (ArcId e : selection) {
    const ArcId f = from.in_arc(d.head(e));
    if (f != e) steps.push_back(ReconfStep{f, e});
  }
  return steps;
}

}  // namespace

ReconfSequence reconfigure_same_root(const TemporalDigraph& d, const Arborescence& t1, const Arborescence& t2) {
  require_time_respecting(d, t1, "first arborescence");
  require_time_respecting(d, t2, "second arborescence");
  if (t1.root() != t2.root()) throw std::invalid_argument("arborescences have different roots");

  const auto ids1 = t1.arc_ids();
  const auto ids2 = t2.arc_ids();
  std::vector<ArcId> both;
  std::set_union(ids1.begin(), ids1.end(), ids2.begin(), ids2.end(), std::back_inserter(both));
  const auto star = d.arc_subgraph(both);
  const auto best = minimal_arborescence(star.digraph, t1.root());
  if (!best) throw std::logic_error("union of two arborescences has no minimal arborescence");

  std::vector<ArcId> selection;
  selection.reserve(best->selection_order.size());
  for (ArcId a : best->selection_order) selection.push_back(star.arc_origin[static_cast<std::size_t>(a)]);

  std::vector<ArcId> star_ids = selection;
  std::sort(star_ids.begin(), star_ids.end());
  std::vector<ArcId> common;
  std::set_intersection(ids1.begin(), ids1.end(), ids2.begin(), ids2.end(), std::back_inserter(common));
  if (!std::includes(star_ids.begin(), star_ids.end(), common.begin(), common.end())) {
    throw std::logic_error("minimal arborescence of the union dropped a shared arc");
  }

  ReconfSequence s{t1, walk_to_minimal(d, t1, selection)};
  auto back = walk_to_minimal(d, t2, selection);
  for (auto it = back.rbegin(); it != back.rend(); ++it) s.steps.push_back(ReconfStep{it->add, it->remove});

  std::vector<ArcId> diff;
  std::set_difference(ids1.begin(), ids1.end(), ids2.begin(), ids2.end(), std::back_inserter(diff));
  if (s.steps.size() != diff.size()) throw std::logic_error("same-root sequence length differs from |A(T1) \\ A(T2)|");
  return s;
}

}  // namespace tarb
