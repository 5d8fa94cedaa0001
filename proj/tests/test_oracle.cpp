#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "support/corpus.hpp"
#include "tarb/errors.hpp"
#include "tarb/oracle.hpp"

using namespace tarb;

namespace {

TemporalDigraph make(int n, std::vector<std::tuple<int, int, int>> arcs) {
  std::vector<ArcSpec> specs;
  for (auto [t, h, l] : arcs) specs.push_back({t, h, Label(l)});
  return TemporalDigraph(n, specs);
}

// Second route: every (n-1)-subset of arcs, every root.
std::set<std::vector<ArcId>> by_subsets(const TemporalDigraph& d) {
  std::set<std::vector<ArcId>> out;
  const int m = d.arc_count();
  const int want = d.vertex_count() - 1;
  std::vector<ArcId> pick;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(pick.size()) == want) {
      for (VertexId r = 0; r < d.vertex_count(); ++r) {
        if (auto t = make_arborescence(d, pick, r); t && is_time_respecting(d, *t)) out.insert(pick);
      }
      return;
    }
    for (int a = next; a < m; ++a) {
      pick.push_back(a);
      rec(a + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace

TEST_CASE("enumerate_all examples") {
  const auto one = oracle::enumerate_all(make(1, {}));
  REQUIRE(one.size() == 1);
  CHECK(one[0].arc_ids().empty());
  CHECK(oracle::enumerate_all(make(3, {{0, 1, 1}, {1, 2, 2}})).size() == 1);
  CHECK(oracle::enumerate_all(make(2, {{0, 1, 1}, {1, 0, 1}})).size() == 2);
}

TEST_CASE("enumeration is sound, complete and canonically ordered") {
  for (const auto& d : testing::random_corpus(51, 150, 5, 10)) {
    const auto all = oracle::enumerate_all(d);
    std::set<std::vector<ArcId>> got;
    for (std::size_t i = 0; i < all.size(); ++i) {
      CHECK(is_arborescence(d, all[i].arc_ids(), all[i].root()));
      CHECK(is_time_respecting(d, all[i]));
      got.insert(all[i].arc_ids());
      if (i > 0) CHECK(canonical_less(all[i - 1], all[i]));
    }
    CHECK(got.size() == all.size());
    CHECK(got == by_subsets(d));
  }
}

TEST_CASE("enumeration budget") {
  std::vector<ArcSpec> specs;
  for (int v = 1; v < 6; ++v) {
    for (int c = 0; c < 4; ++c) specs.push_back({0, v, Label(c + 1)});
  }
  const TemporalDigraph d(6, specs);
  CHECK_THROWS_AS(oracle::enumerate_all(d, 100), BudgetExceeded);
  CHECK(oracle::enumerate_all(d, 1024).size() == 1024);
  try {
    oracle::enumerate_all(d, 10);
  } catch (const BudgetExceeded& e) {
    CHECK(e.subject() == 0);
  }
}

TEST_CASE("reconfiguration graph examples") {
  const auto g1 = oracle::build_reconfiguration_graph(make(3, {{0, 1, 1}, {1, 2, 2}}));
  CHECK(g1.node_count() == 1);
  CHECK(g1.edge_count() == 0);
  const auto g2 = oracle::build_reconfiguration_graph(make(2, {{0, 1, 1}, {1, 0, 1}}));
  CHECK(g2.node_count() == 2);
  CHECK(g2.edge_count() == 1);
}

TEST_CASE("adjacency equals one-arc symmetric difference") {
  for (const auto& d : testing::random_corpus(52, 120)) {
    const auto g = oracle::build_reconfiguration_graph(d);
    const auto& nodes = g.nodes();
    for (int i = 0; i < g.node_count(); ++i) {
      const auto& adj = g.adjacency()[i];
      for (int j = 0; j < g.node_count(); ++j) {
        const bool expect = i != j && testing::diff_size(nodes[i], nodes[j]) == 1;
        CHECK(std::binary_search(adj.begin(), adj.end(), j) == expect);
      }
    }
  }
}

TEST_CASE("each root's arborescences form one component") {
  for (const auto& d : testing::random_corpus(53, 200)) {
    const auto g = oracle::build_reconfiguration_graph(d);
    const auto comp = g.components();
    std::map<VertexId, std::set<int>> per_root;
    for (int i = 0; i < g.node_count(); ++i) per_root[g.nodes()[i].root()].insert(comp[i]);
    for (const auto& [r, comps] : per_root) CHECK(comps.size() == 1);
  }
}

TEST_CASE("bfs distances are symmetric and satisfy the triangle inequality") {
  std::mt19937_64 rng(54);
  for (const auto& d : testing::random_corpus(54, 80)) {
    const auto g = oracle::build_reconfiguration_graph(d);
    const int n = g.node_count();
    if (n == 0) continue;
    std::vector<std::vector<int>> dist;
    for (int i = 0; i < n; ++i) dist.push_back(g.distances(i));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) CHECK(dist[i][j] == dist[j][i]);
    }
    for (int trial = 0; trial < 50; ++trial) {
      const int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n), c = static_cast<int>(rng() % n);
      if (dist[a][b] < 0 || dist[b][c] < 0) continue;
      CHECK(dist[a][c] >= 0);
      CHECK(dist[a][c] <= dist[a][b] + dist[b][c]);
    }
    const auto res = oracle::bfs_shortest(d, g, 0, n - 1);
    CHECK(res.has_value() == (dist[0][n - 1] >= 0));
    if (res) {
      CHECK(res->length == dist[0][n - 1]);
      CHECK(verify_sequence(d, res->sequence, g.nodes()[n - 1]));
    }
  }
}

TEST_CASE("bfs_shortest trivial and same-root lengths") {
  const auto d = make(3, {{0, 1, 1}, {0, 1, 2}, {1, 2, 2}, {0, 2, 3}});
  const auto g = oracle::build_reconfiguration_graph(d);
  for (int i = 0; i < g.node_count(); ++i) {
    const auto self = oracle::bfs_shortest(d, g, i, i);
    REQUIRE(self);
    CHECK(self->length == 0);
    for (int j = 0; j < g.node_count(); ++j) {
      if (g.nodes()[i].root() != g.nodes()[j].root()) continue;
      const auto r = oracle::bfs_shortest(d, g, i, j);
      REQUIRE(r);
      CHECK(static_cast<std::size_t>(r->length) == testing::diff_size(g.nodes()[i], g.nodes()[j]));
    }
  }
}

TEST_CASE("oracle_d examples") {
  const auto d = make(2, {{0, 1, 5}});
  CHECK(*oracle::oracle_d(d, 0, 0) == Label(0));
  CHECK(*oracle::oracle_d(d, 0, 1) == Label(5));
  CHECK_FALSE(oracle::oracle_d(d, 1, 0));
  // Only r -> b -> a -> c respects time, so d(c) comes through a at 2.
  const auto diamond = make(4, {{0, 1, 3}, {0, 2, 1}, {2, 1, 2}, {1, 3, 2}});
  CHECK(*oracle::oracle_d(diamond, 0, 1) == Label(2));
  CHECK(*oracle::oracle_d(diamond, 0, 3) == Label(2));
}
