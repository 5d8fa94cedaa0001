// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "support/corpus.hpp"
#include "tarb/fixed_root.hpp"
#include "tarb/free_root.hpp"
#include "tarb/hardness.hpp"
#include "tarb/io.hpp"
#include "tarb/minimal_arb.hpp"
#include "tarb/oracle.hpp"
#include "tarb/search.hpp"

#ifndef TARB_FIXTURE_DIR
#error "TARB_FIXTURE_DIR must point at tests/fixtures"
#endif

using namespace tarb;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::uint64_t kCorpusSeed = 20240501;
constexpr int kCorpusSize = 500;
constexpr std::size_t kPairCap = 200;
constexpr std::uint64_t kSearchSeed = 7;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(const char* id, const char* title, const Outcome& o, double seconds, double limit_seconds) {
  const bool in_time = limit_seconds <= 0 || seconds < limit_seconds;
  const bool ok = o.pass && in_time;
  if (!ok) ++failures;
  std::printf("[%s] %s %s: %s (%.2fs%s)\n", ok ? "PASS" : "FAIL", id, title, o.detail.c_str(), seconds,
              in_time ? "" : ", over time limit");
  std::fflush(stdout);
}

void run(const char* id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  report(id, title, o, std::chrono::duration<double>(Clock::now() - start).count(), limit_seconds);
}

struct CorpusEntry {
  TemporalDigraph digraph;
  oracle::ReconfigurationGraph graph;
  std::vector<int> components;
};

std::vector<CorpusEntry>& corpus() {
  static std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> out;
    for (auto& d : testing::random_corpus(kCorpusSeed, kCorpusSize)) {
      auto g = oracle::build_reconfiguration_graph(d);
      auto comp = g.components();
      out.push_back({std::move(d), std::move(g), std::move(comp)});
    }
    return out;
  }();
  return entries;
}

// Up to kPairCap index pairs (i < j), sampled without replacement when there are more.
std::vector<std::pair<int, int>> capped_pairs(const std::vector<int>& members, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) pairs.emplace_back(members[i], members[j]);
  }
  if (pairs.size() > kPairCap) {
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(kPairCap);
  }
  return pairs;
}

Outcome minimality() {
  long roots = 0, feasible = 0, mismatches = 0;
  for (const auto& e : corpus()) {
    const auto& d = e.digraph;
    for (VertexId r = 0; r < d.vertex_count(); ++r) {
      ++roots;
      const auto res = minimal_arborescence(d, r);
      const bool oracle_feasible =
          std::any_of(e.graph.nodes().begin(), e.graph.nodes().end(), [&](const auto& t) { return t.root() == r; });
      if (res.has_value() != oracle_feasible) {
        ++mismatches;
        continue;
      }
      if (!res) continue;
      ++feasible;
      const auto od = oracle::oracle_d_all(d, r);
      for (VertexId v = 0; v < d.vertex_count(); ++v) {
        if (!od[v] || *od[v] != res->d_prime[v]) ++mismatches;
      }
      if (!is_time_respecting(d, res->tree)) ++mismatches;
    }
  }
  return {mismatches == 0, std::to_string(roots) + " roots, " + std::to_string(feasible) + " feasible, " +
                               std::to_string(mismatches) + " mismatches"};
}

Outcome length_law() {
  std::mt19937_64 rng(kCorpusSeed + 2);
  long pairs = 0, bad = 0;
  for (const auto& e : corpus()) {
    const auto& d = e.digraph;
    const auto& nodes = e.graph.nodes();
    std::map<VertexId, std::vector<int>> by_root;
    for (int i = 0; i < e.graph.node_count(); ++i) by_root[nodes[i].root()].push_back(i);
    std::vector<std::pair<int, int>> all;
    for (const auto& [r, members] : by_root) {
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) all.emplace_back(members[i], members[j]);
      }
    }
    if (all.size() > kPairCap) {
      std::shuffle(all.begin(), all.end(), rng);
      all.resize(kPairCap);
    }
    for (const auto& [i, j] : all) {
      ++pairs;
      const auto s = reconfigure_same_root(d, nodes[i], nodes[j]);
      const auto bfs = oracle::bfs_shortest(d, e.graph, i, j);
      const auto diff = static_cast<int>(testing::diff_size(nodes[i], nodes[j]));
      if (!verify_sequence(d, s, nodes[j]) || s.length() != diff || !bfs || bfs->length != diff) ++bad;
    }
  }
  return {bad == 0 && pairs > 0, std::to_string(pairs) + " same-root pairs, " + std::to_string(bad) + " violations"};
}

Outcome reachability() {
  std::mt19937_64 rng(kCorpusSeed + 3);
  long pairs = 0, cross_root = 0, negatives = 0, mismatches = 0;
  for (const auto& e : corpus()) {
    const auto& d = e.digraph;
    const auto& nodes = e.graph.nodes();
    std::vector<int> members(static_cast<std::size_t>(e.graph.node_count()));
    std::iota(members.begin(), members.end(), 0);
    for (const auto& [i, j] : capped_pairs(members, rng)) {
      ++pairs;
      cross_root += nodes[i].root() != nodes[j].root();
      const bool expect = e.components[i] == e.components[j];
      negatives += !expect;
      if (reachable(d, nodes[i], nodes[j]) != expect) ++mismatches;
    }
  }
  return {mismatches == 0, std::to_string(pairs) + " pairs (" + std::to_string(cross_root) + " cross-root, " +
                               std::to_string(negatives) + " unreachable), " + std::to_string(mismatches) +
                               " mismatches"};
}

Outcome per_root_connectivity() {
  long roots = 0, violations = 0;
  for (const auto& e : corpus()) {
    std::map<VertexId, std::set<int>> comps;
    for (int i = 0; i < e.graph.node_count(); ++i) comps[e.graph.nodes()[i].root()].insert(e.components[i]);
    for (const auto& [r, c] : comps) {
      ++roots;
      violations += c.size() != 1;
    }
  }
  return {violations == 0, std::to_string(roots) + " feasible roots, " + std::to_string(violations) + " violations"};
}

Outcome constant_cycle_labels() {
  long checked = 0, violations = 0;
  for (const auto& e : corpus()) {
    const auto& d = e.digraph;
    const auto& nodes = e.graph.nodes();
    for (int i = 0; i < e.graph.node_count(); ++i) {
      for (int j : e.graph.adjacency()[i]) {
        const VertexId r1 = nodes[i].root();
        const VertexId r2 = nodes[j].root();
        if (r1 == r2) continue;
        const auto x = nodes[i].arc_ids();
        const auto y = nodes[j].arc_ids();
        std::vector<ArcId> removed, added;
        std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(removed));
        std::set_difference(y.begin(), y.end(), x.begin(), x.end(), std::back_inserter(added));
        const ArcId e_arc = removed.at(0);
        const ArcId f_arc = added.at(0);
        if (d.tail(f_arc) == r2 || d.tail(e_arc) == r1) continue;
        ++checked;
        const auto cycle = testing::cycle_with(d, nodes[i], f_arc);
        const bool constant = std::all_of(cycle.begin(), cycle.end(), [&](ArcId a) { return d.label(a) == d.label(cycle[0]); });
        const bool through_e = std::find(cycle.begin(), cycle.end(), e_arc) != cycle.end();
        violations += !(constant && through_e);
      }
    }
  }
  return {violations == 0 && checked > 0,
          std::to_string(checked) + " root-changing swaps via a longer cycle, " + std::to_string(violations) + " violations"};
}

bool is_no_instance(const TemporalDigraph& d, const Arborescence& t1, const Arborescence& t2) {
  if (t1.root() == t2.root()) return false;
  const auto g = oracle::build_reconfiguration_graph(d);
  const auto comp = g.components();
  const auto a = g.index_of(t1);
  const auto b = g.index_of(t2);
  if (!a || !b || comp[*a] == comp[*b]) return false;
  return !reachable(d, t1, t2) && !construct_sequence(d, t1, t2);
}

Outcome no_instance() {
  const std::string dir = TARB_FIXTURE_DIR;
  const auto d = io::parse_digraph(io::read_file(dir + "/no_instance.digraph"));
  const auto t1 = io::resolve_arborescence(d, io::parse_arborescence(io::read_file(dir + "/no_instance.t1")));
  const auto t2 = io::resolve_arborescence(d, io::parse_arborescence(io::read_file(dir + "/no_instance.t2")));
  const bool pinned = d.vertex_count() <= 6 && is_time_respecting(d, t1) && is_time_respecting(d, t2) &&
                      is_no_instance(d, t1, t2);
  const auto found = search_no_instance(kSearchSeed, 6, 2000);
  const bool searched = found && is_no_instance(found->digraph, found->t1, found->t2);
  return {pinned && searched, std::string("pinned fixture (n=") + std::to_string(d.vertex_count()) + ") " +
                                  (pinned ? "confirmed" : "NOT confirmed") + "; seeded search " +
                                  (searched ? "re-found an instance" : "found nothing")};
}

// All labelled simple graphs on 0..4 vertices.
std::vector<hardness::VertexCoverInstance> small_graphs() {
  std::vector<hardness::VertexCoverInstance> out;
  for (int n = 0; n <= 4; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    }
    for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
      hardness::VertexCoverInstance vc{n, {}, 0};
      for (std::size_t i = 0; i < slots.size(); ++i) {
        if (mask >> i & 1u) vc.edges.push_back(slots[i]);
      }
      out.push_back(vc);
    }
  }
  return out;
}

struct ReductionRun {
  long instances = 0;
  long yes = 0;
  long mismatches = 0;
  long cover_violations = 0;
  long cover_checks = 0;
};

ReductionRun& reduction_run() {
  static ReductionRun run;
  return run;
}

Outcome reduction() {
  auto& run = reduction_run();
  const auto graphs = small_graphs();
  for (auto variant : {hardness::LabelVariant::Standard, hardness::LabelVariant::ThreeLabel,
                       hardness::LabelVariant::Perturbed}) {
    for (auto vc : graphs) {
      const auto base = hardness::reduce_vertex_cover(vc, variant);
      const auto g = oracle::build_reconfiguration_graph(base.digraph);
      const auto shortest = oracle::bfs_shortest(base.digraph, g, *g.index_of(base.t1), *g.index_of(base.t2));
      for (int k = 0; k <= vc.vertex_count; ++k) {
        vc.k = k;
        const auto inst = hardness::reduce_vertex_cover(vc, variant);
        ++run.instances;
        const bool has_cover = hardness::vc_brute_force(vc);
        const bool short_enough = shortest && shortest->length <= inst.ell;
        if (has_cover != short_enough) ++run.mismatches;
        if (!has_cover) continue;
        ++run.yes;
        // Cover round-trip.
        ++run.cover_checks;
        const auto x = hardness::extract_vertex_cover(inst, shortest->sequence);
        if (!hardness::is_vertex_cover(vc, x) || static_cast<int>(x.size()) > k) {
          ++run.cover_violations;
          continue;
        }
        const auto s = hardness::build_cover_sequence(inst, x, hardness::canonical_sigma(vc, x));
        const int expect = 2 * (static_cast<int>(x.size()) + static_cast<int>(vc.edges.size())) + 1;
        if (s.length() != expect || !verify_sequence(inst.digraph, s, inst.t2) ||
            hardness::extract_vertex_cover(inst, s) != x) {
          ++run.cover_violations;
        }
      }
    }
  }
  return {run.mismatches == 0, std::to_string(graphs.size()) + " graphs x 3 variants, " +
                                   std::to_string(run.instances) + " (G,k) instances, " + std::to_string(run.yes) +
                                   " yes, " + std::to_string(run.mismatches) + " mismatches"};
}

Outcome cover_round_trip() {
  const auto& run = reduction_run();
  return {run.cover_violations == 0 && run.cover_checks == run.yes && run.yes > 0,
          std::to_string(run.cover_checks) + " yes-instances, " + std::to_string(run.cover_violations) + " violations"};
}

Outcome performance() {
  std::mt19937_64 rng(99);
  const auto big = random_digraph(rng, {2000, 20000, 10, true});
  auto start = Clock::now();
  const auto res = minimal_arborescence(big, 0);
  const double greedy = std::chrono::duration<double>(Clock::now() - start).count();

  const auto mid = random_digraph(rng, {300, 3000, 10, true});
  start = Clock::now();
  const auto g = build_root_adjacency_graph(mid);
  long queries = 0, yes = 0;
  std::vector<Arborescence> trees;
  for (VertexId r : g.feasible_roots) {
    if (trees.size() >= 10) break;
    trees.push_back(minimal_arborescence(mid, r)->tree);
  }
  for (const auto& a : trees) {
    for (const auto& b : trees) {
      ++queries;
      yes += reachable(mid, a, b);
    }
  }
  const double adjacency = std::chrono::duration<double>(Clock::now() - start).count();
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "greedy n=2000 m=20000 %s in %.3fs (<1s); root graph n=300 m=3000: %zu feasible roots, %zu edges, "
                "%ld reachable() calls (%ld yes) in %.2fs (<60s)",
                res ? "feasible" : "infeasible", greedy, g.feasible_roots.size(), g.edges.size(), queries, yes,
                adjacency);
  return {greedy < 1.0 && adjacency < 60.0, buf};
}

}  // namespace

int main() {
  {
    const auto start = Clock::now();
    corpus();
    std::printf("corpus: %d digraphs (seed %llu), oracle graphs built in %.2fs\n", kCorpusSize,
                static_cast<unsigned long long>(kCorpusSeed),
                std::chrono::duration<double>(Clock::now() - start).count());
  }
  run("C1", "minimal arborescence vs oracle", 120, minimality);
  run("C2", "same-root length law", 300, length_law);
  run("C3", "reachability equivalence", 600, reachability);
  run("C4", "per-root connectivity", 0, per_root_connectivity);
  run("C5", "constant cycle labels", 0, constant_cycle_labels);
  run("C6", "no-instance exists", 60, no_instance);
  run("C7", "vertex cover reduction both directions", 900, reduction);
  run("C8", "cover round-trip", 0, cover_round_trip);
  run("C9", "performance sanity", 0, performance);
  std::printf("%s: %d criterion failure(s)\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
