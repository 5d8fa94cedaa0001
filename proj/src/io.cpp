#include "tarb/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tarb/errors.hpp"

namespace tarb::io {

namespace {

struct Record {
  int line;
  std::vector<std::string> fields;
};

// Non-empty, non-comment lines split on whitespace.
std::vector<Record> records(std::string_view text) {
  std::vector<Record> out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    const auto line = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    ++line_no;
    std::istringstream in{std::string(line)};
    Record r{line_no, {}};
    for (std::string field; in >> field;) r.fields.push_back(field);
    if (!r.fields.empty() && r.fields.front()[0] != '#') out.push_back(std::move(r));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

long long to_int(const Record& r, std::size_t i, const char* what) {
  if (i >= r.fields.size()) throw ParseError(r.line, std::string("missing ") + what);
  const auto& s = r.fields[i];
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError(r.line, std::string("malformed ") + what + " '" + s + "'");
  return value;
}

void expect_fields(const Record& r, std::size_t count) {
  if (r.fields.size() != count) {
    throw ParseError(r.line, "'" + r.fields.front() + "' expects " + std::to_string(count - 1) + " operand(s)");
  }
}

int read_count(const std::vector<Record>& recs) {
  if (recs.empty()) throw ParseError(0, "missing 'n <count>' record");
  const auto& first = recs.front();
  if (first.fields.front() != "n") throw ParseError(first.line, "first record must be 'n <count>'");
  expect_fields(first, 2);
  const auto n = to_int(first, 1, "vertex count");
  if (n < 0 || n > 100'000'000) throw ParseError(first.line, "vertex count out of range");
  return static_cast<int>(n);
}

VertexId vertex_at(const Record& r, std::size_t i, int n) {
  const auto v = to_int(r, i, "vertex");
  if (v < 0 || v >= n) throw ParseError(r.line, "vertex " + r.fields[i] + " out of range [0, " + std::to_string(n) + ")");
  return static_cast<VertexId>(v);
}

}  // namespace

TemporalDigraph parse_digraph(std::string_view text) {
  const auto recs = records(text);
  const int n = read_count(recs);
  std::vector<ArcSpec> arcs;
  std::vector<std::string> names;
  for (std::size_t i = 1; i < recs.size(); ++i) {
    const auto& r = recs[i];
    const auto& kind = r.fields.front();
    if (kind == "arc") {
      expect_fields(r, 4);
      const VertexId tail = vertex_at(r, 1, n);
      const VertexId head = vertex_at(r, 2, n);
      if (tail == head) throw ParseError(r.line, "self-loop at vertex " + std::to_string(tail));
      try {
        arcs.push_back(ArcSpec{tail, head, Label::parse(r.fields[3])});
      } catch (const std::invalid_argument& e) {
        throw ParseError(r.line, e.what());
      }
    } else if (kind == "name") {
      if (r.fields.size() < 3) throw ParseError(r.line, "'name' expects a vertex and a name");
      const VertexId v = vertex_at(r, 1, n);
      names.resize(static_cast<std::size_t>(n));
      std::string joined = r.fields[2];
      for (std::size_t j = 3; j < r.fields.size(); ++j) joined += " " + r.fields[j];
      names[static_cast<std::size_t>(v)] = joined;
    } else if (kind == "n") {
      throw ParseError(r.line, "duplicate 'n' record");
    } else {
      throw ParseError(r.line, "unknown record '" + kind + "'");
    }
  }
  TemporalDigraph d(n, arcs);
  if (!names.empty()) d.set_names(std::move(names));
  return d;
}

std::string format_digraph(const TemporalDigraph& d) {
  std::ostringstream out;
  out << "n " << d.vertex_count() << "\n";
  for (std::size_t v = 0; v < d.names().size(); ++v) {
    if (!d.names()[v].empty()) out << "name " << v << " " << d.names()[v] << "\n";
  }
  for (const auto& a : d.arcs()) out << "arc " << a.tail << " " << a.head << " " << d.label(a.id).str() << "\n";
  return out.str();
}

ArborescenceSpec parse_arborescence(std::string_view text) {
  const auto recs = records(text);
  if (recs.empty() || recs.front().fields.front() != "root") {
    throw ParseError(recs.empty() ? 0 : recs.front().line, "first record must be 'root <v>'");
  }
  ArborescenceSpec spec;
  expect_fields(recs.front(), 2);
  spec.root = static_cast<VertexId>(to_int(recs.front(), 1, "root"));
  for (std::size_t i = 1; i < recs.size(); ++i) {
    const auto& r = recs[i];
    if (r.fields.front() != "use") throw ParseError(r.line, "unknown record '" + r.fields.front() + "'");
    expect_fields(r, 2);
    spec.arcs.push_back(static_cast<ArcId>(to_int(r, 1, "arc id")));
  }
  return spec;
}

std::string format_arborescence(const Arborescence& t) {
  std::ostringstream out;
  out << "root " << t.root() << "\n";
  for (ArcId a : t.arc_ids()) out << "use " << a << "\n";
  return out.str();
}

Arborescence resolve_arborescence(const TemporalDigraph& d, const ArborescenceSpec& spec) {
  if (spec.root < 0 || spec.root >= d.vertex_count()) throw ParseError(0, "root " + std::to_string(spec.root) + " out of range");
  for (ArcId a : spec.arcs) {
    if (a < 0 || a >= d.arc_count()) throw ParseError(0, "arc id " + std::to_string(a) + " out of range");
  }
  auto t = make_arborescence(d, spec.arcs, spec.root);
  if (!t) throw std::invalid_argument("arcs do not form an arborescence rooted at " + std::to_string(spec.root));
  return std::move(*t);
}

std::string format_sequence(const ReconfSequence& s) {
  std::ostringstream out;
  out << "length " << s.length() << "\n";
  for (const auto& step : s.steps) out << "swap -" << step.remove << " +" << step.add << "\n";
  return out.str();
}

std::vector<ReconfStep> parse_sequence(std::string_view text) {
  const auto recs = records(text);
  if (recs.empty() || recs.front().fields.front() != "length") {
    throw ParseError(recs.empty() ? 0 : recs.front().line, "first record must be 'length <l>'");
  }
  expect_fields(recs.front(), 2);
  const auto length = to_int(recs.front(), 1, "length");
  std::vector<ReconfStep> steps;
  for (std::size_t i = 1; i < recs.size(); ++i) {
    const auto& r = recs[i];
    if (r.fields.front() != "swap") throw ParseError(r.line, "unknown record '" + r.fields.front() + "'");
    expect_fields(r, 3);
    if (r.fields[1].size() < 2 || r.fields[1][0] != '-' || r.fields[2].size() < 2 || r.fields[2][0] != '+') {
      throw ParseError(r.line, "swap expects '-<arc-id> +<arc-id>'");
    }
    Record ids{r.line, {r.fields[1].substr(1), r.fields[2].substr(1)}};
    steps.push_back(ReconfStep{static_cast<ArcId>(to_int(ids, 0, "arc id")), static_cast<ArcId>(to_int(ids, 1, "arc id"))});
  }
  if (static_cast<long long>(steps.size()) != length) {
    throw ParseError(recs.front().line, "declared length " + std::to_string(length) + " but found " +
                                            std::to_string(steps.size()) + " swaps");
  }
  return steps;
}

hardness::VertexCoverInstance parse_undirected_graph(std::string_view text) {
  const auto recs = records(text);
  hardness::VertexCoverInstance vc;
  vc.vertex_count = read_count(recs);
  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 1; i < recs.size(); ++i) {
    const auto& r = recs[i];
    if (r.fields.front() != "edge") throw ParseError(r.line, "unknown record '" + r.fields.front() + "'");
    expect_fields(r, 3);
    int u = vertex_at(r, 1, vc.vertex_count);
    int v = vertex_at(r, 2, vc.vertex_count);
    if (u == v) throw ParseError(r.line, "self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!seen.emplace(u, v).second) throw ParseError(r.line, "repeated edge");
    vc.edges.emplace_back(u, v);
  }
  return vc;
}

nlohmann::json to_json(const TemporalDigraph& d, const Arborescence& t) {
  nlohmann::json arcs = nlohmann::json::array();
  for (ArcId a : t.arc_ids()) {
    arcs.push_back({{"id", a}, {"tail", d.tail(a)}, {"head", d.head(a)}, {"label", d.label(a).str()}});
  }
  return {{"root", t.root()}, {"arcs", arcs}};
}

nlohmann::json to_json(const TemporalDigraph& d, const ReconfSequence& s, const std::vector<Arborescence>* trail) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& step : s.steps) steps.push_back({{"remove", step.remove}, {"add", step.add}});
  nlohmann::json out{{"length", s.length()}, {"steps", steps}};
  if (trail) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& t : *trail) list.push_back(to_json(d, t));
    out["arborescences"] = list;
  }
  return out;
}

nlohmann::json roles_json(const hardness::HardnessInstance& inst) {
  const auto& roles = inst.roles;
  nlohmann::json incidence = nlohmann::json::array();
  for (const auto& [a, b] : roles.incidence) incidence.push_back({a, b});
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : inst.source.edges) edges.push_back({u, v});
  return {{"variant", hardness::to_string(inst.variant)},
          {"ell", inst.ell},
          {"k", inst.source.k},
          {"graph", {{"n", inst.source.vertex_count}, {"edges", edges}}},
          {"vertices", {{"r1", roles.r1}, {"r2", roles.r2}, {"w_vertex", roles.w_vertex}, {"w_edge", roles.w_edge}}},
          {"arcs",
           {{"A1_r1", roles.r1_to_edge},
            {"A1_r2", roles.r2_to_edge},
            {"A2", {roles.r1_to_r2, roles.r2_to_r1}},
            {"A3", roles.a},
            {"A4", incidence},
            {"A5", roles.a_prime},
            {"class", roles.arc_class}}}};
}

std::string reconfiguration_graph_dot(const oracle::ReconfigurationGraph& g) {
  std::ostringstream out;
  out << "graph reconfiguration {\n";
  const auto& nodes = g.nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out << "  t" << i << " [label=\"r=" << nodes[i].root() << ":";
    const auto ids = nodes[i].arc_ids();
    for (std::size_t j = 0; j < ids.size(); ++j) out << (j ? "," : " ") << ids[j];
    out << "\"];\n";
  }
  const auto& adj = g.adjacency();
  for (std::size_t i = 0; i < adj.size(); ++i) {
    for (int j : adj[i]) {
      if (static_cast<std::size_t>(j) > i) out << "  t" << i << " -- t" << j << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

}  // namespace tarb::io
