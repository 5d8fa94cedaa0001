#pragma once

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "tarb/digraph.hpp"
#include "tarb/fixed_root.hpp"
#include "tarb/hardness.hpp"
#include "tarb/oracle.hpp"

namespace tarb::io {

// Digraph text format:
//   n <count>                 first record
//   arc <tail> <head> <label> label: "p", "p/q" or decimal
//   name <vertex> <text>      optional display name
//   # ...                     comment
// Arc ids follow the order of arc records. Throws ParseError with the line.
TemporalDigraph parse_digraph(std::string_view text);
std::string format_digraph(const TemporalDigraph& d);

// Arborescence text format: "root <v>" then one "use <arc-id>" per arc.
struct ArborescenceSpec {
  VertexId root = -1;
  std::vector<ArcId> arcs;
};
ArborescenceSpec parse_arborescence(std::string_view text);
std::string format_arborescence(const Arborescence& t);
// Throws ParseError when ids fall outside d, std::invalid_argument when the
// arcs do not form an arborescence rooted at spec.root.
Arborescence resolve_arborescence(const TemporalDigraph& d, const ArborescenceSpec& spec);

// Sequence text format: "length <l>" then "swap -<arc-id> +<arc-id>" per step.
std::string format_sequence(const ReconfSequence& s);
std::vector<ReconfStep> parse_sequence(std::string_view text);

// Undirected graph format: "n <count>" then "edge <u> <v>" lines.
hardness::VertexCoverInstance parse_undirected_graph(std::string_view text);

nlohmann::json to_json(const TemporalDigraph& d, const Arborescence& t);
// With `trail`, every intermediate arborescence is included.
nlohmann::json to_json(const TemporalDigraph& d, const ReconfSequence& s, const std::vector<Arborescence>* trail);
nlohmann::json roles_json(const hardness::HardnessInstance& inst);

// Node label = root plus sorted arc ids.
std::string reconfiguration_graph_dot(const oracle::ReconfigurationGraph& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace tarb::io
