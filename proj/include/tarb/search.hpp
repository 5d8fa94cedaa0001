#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "tarb/digraph.hpp"

namespace tarb {

struct RandomDigraphParams {
  int vertices = 5;
  int arcs = 10;
  int max_label = 4;         // labels drawn uniformly from 1..max_label
  bool plant_spanning = true;  // start from a random spanning arborescence shape
};

TemporalDigraph random_digraph(std::mt19937_64& rng, const RandomDigraphParams& params);

struct NoInstance {
  TemporalDigraph digraph;
  Arborescence t1;
  Arborescence t2;
};

// Seeded search for two time-respecting arborescences with different roots
// that cannot be reconfigured into each other, confirmed by both the
// exhaustive reconfiguration graph and the root adjacency graph.
std::optional<NoInstance> search_no_instance(std::uint64_t seed, int max_vertices, int attempts);

}  // namespace tarb
