#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "tarb/digraph.hpp"
#include "tarb/search.hpp"

namespace tarb::testing {

// Random temporal digraphs with n <= max_n, m <= max_m, labels 1..4.
// Half plant a spanning shape so feasible roots are common.
inline std::vector<TemporalDigraph> random_corpus(std::uint64_t seed, int count, int max_n = 7, int max_m = 18) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(1, max_n);
  std::vector<TemporalDigraph> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const int n = size(rng);
    std::uniform_int_distribution<int> arcs(0, n == 1 ? 0 : max_m);
    out.push_back(random_digraph(rng, {n, arcs(rng), 4, i % 2 == 0}));
  }
  return out;
}

inline std::vector<ArcId> arcs_of(const Arborescence& t) { return t.arc_ids(); }

inline std::size_t diff_size(const Arborescence& a, const Arborescence& b) {
  const auto x = a.arc_ids();
  const auto y = b.arc_ids();
  std::vector<ArcId> out;
  std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out.size();
}

// Arcs of the unique cycle in t + f (f enters t's root): the tree path from
// the root to tail(f), followed by f.
inline std::vector<ArcId> cycle_with(const TemporalDigraph& d, const Arborescence& t, ArcId f) {
  std::vector<ArcId> path;
  for (VertexId v = d.tail(f); v != t.root(); v = d.tail(t.in_arc(v))) path.push_back(t.in_arc(v));
  std::reverse(path.begin(), path.end());
  path.push_back(f);
  return path;
}

}  // namespace tarb::testing
