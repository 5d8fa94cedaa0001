// tarb: command-line front end for temporal arborescence tools.
//
// Exit codes: 0 yes/success, 1 a valid "no" answer, 2 input error,
// 3 enumeration budget exceeded, 4 internal error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "tarb/errors.hpp"
#include "tarb/fixed_root.hpp"
#include "tarb/free_root.hpp"
#include "tarb/hardness.hpp"
#include "tarb/io.hpp"
#include "tarb/minimal_arb.hpp"
#include "tarb/oracle.hpp"
#include "tarb/search.hpp"

namespace {

using namespace tarb;
using nlohmann::json;

enum Exit : int { kYes = 0, kNo = 1, kInputError = 2, kBudget = 3, kInternal = 4 };

struct Outcome {
  int code = kYes;
  std::string text;
  json data = json::object();
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

TemporalDigraph load_digraph(const std::string& path) { return io::parse_digraph(io::read_file(path)); }

Arborescence load_arborescence(const TemporalDigraph& d, const std::string& path) {
  const auto t = io::resolve_arborescence(d, io::parse_arborescence(io::read_file(path)));
  require_time_respecting(d, t, path.c_str());
  return t;
}

std::uint64_t budget_from(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("TEMPO_ARB_BUDGET"); env && *env) {
    try {
      std::size_t used = 0;
      const auto value = std::stoull(env, &used);
      if (used == std::string(env).size()) return value;
    } catch (const std::exception&) {
    }
    throw InputError(std::string("TEMPO_ARB_BUDGET is not a non-negative integer: '") + env + "'");
  }
  return oracle::kDefaultBudget;
}

std::string arc_text(const TemporalDigraph& d, ArcId a) {
  std::ostringstream out;
  out << "arc " << a << " (" << d.vertex_name(d.tail(a)) << "->" << d.vertex_name(d.head(a)) << ", label "
      << d.label(a).str() << ")";
  return out.str();
}

// Why `arcs` fails to be an arborescence rooted at `root`, or nullopt when it is one.
std::optional<std::string> arborescence_defect(const TemporalDigraph& d, const std::vector<ArcId>& arcs, VertexId root) {
  const auto expected = static_cast<std::size_t>(d.vertex_count() - 1);
  if (arcs.size() != expected) {
    return "expected " + std::to_string(expected) + " arcs, got " + std::to_string(arcs.size());
  }
  std::vector<int> indegree(static_cast<std::size_t>(d.vertex_count()), 0);
  for (ArcId a : arcs) {
    if (d.head(a) == root) return "the root has an in-arc: " + arc_text(d, a);
    if (++indegree[static_cast<std::size_t>(d.head(a))] > 1) {
      return "vertex " + d.vertex_name(d.head(a)) + " has more than one in-arc";
    }
  }
  if (!is_arborescence(d, arcs, root)) return "the arcs contain a cycle, so not every vertex is reachable from the root";
  return std::nullopt;
}

Outcome cmd_validate(const std::string& digraph_path, const std::string& arb_path) {
  const auto d = load_digraph(digraph_path);
  const auto spec = io::parse_arborescence(io::read_file(arb_path));
  if (spec.root < 0 || spec.root >= d.vertex_count()) throw ParseError(0, "root out of range");
  for (ArcId a : spec.arcs) {
    if (a < 0 || a >= d.arc_count()) throw ParseError(0, "arc id " + std::to_string(a) + " out of range");
  }
  Outcome out;
  std::ostringstream text;
  const auto defect = arborescence_defect(d, spec.arcs, spec.root);
  text << "arborescence: " << (defect ? "no (" + *defect + ")" : "yes") << "\n";
  out.data["arborescence"] = {{"ok", !defect}, {"reason", defect ? *defect : ""}};
  if (defect) {
    text << "time-respecting: skipped\n";
    out.data["time_respecting"] = nullptr;
    out.code = kNo;
  } else {
    const auto t = *make_arborescence(d, spec.arcs, spec.root);
    if (const auto v = find_time_violation(d, t)) {
      text << "time-respecting: no (" << arc_text(d, v->parent) << " is followed by " << arc_text(d, v->child)
           << ")\n";
      out.data["time_respecting"] = {{"ok", false}, {"parent_arc", v->parent}, {"child_arc", v->child}};
      out.code = kNo;
    } else {
      text << "time-respecting: yes\n";
      out.data["time_respecting"] = {{"ok", true}};
    }
  }
  out.text = text.str();
  return out;
}

Outcome cmd_minimal(const std::string& digraph_path, VertexId root) {
  const auto d = load_digraph(digraph_path);
  if (root < 0 || root >= d.vertex_count()) throw InputError("root " + std::to_string(root) + " out of range");
  Outcome out;
  const auto res = minimal_arborescence(d, root);
  if (!res) {
    out.code = kNo;
    out.text = "infeasible\n";
    out.data = {{"feasible", false}};
    return out;
  }
  std::ostringstream text;
  text << io::format_arborescence(res->tree);
  json d_prime = json::object();
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    text << "# d " << v << " " << res->d_prime[v].str() << "\n";
    d_prime[std::to_string(v)] = res->d_prime[v].str();
  }
  out.text = text.str();
  out.data = {{"feasible", true}, {"arborescence", io::to_json(d, res->tree)}, {"d", d_prime}};
  return out;
}

Outcome sequence_outcome(const TemporalDigraph& d, const ReconfSequence& s, const Arborescence& target,
                         const char* claim, bool verbose) {
  if (!verify_sequence(d, s, target)) throw std::logic_error("produced sequence failed verification");
  Outcome out;
  const auto trail = replay(d, s);
  out.data = io::to_json(d, s, verbose ? &*trail : nullptr);
  out.data["claim"] = claim;
  out.text = verbose ? out.data.dump(2) + "\n" : std::string("# ") + claim + "\n" + io::format_sequence(s);
  return out;
}

Outcome cmd_reconfigure(const std::string& digraph_path, const std::string& a1, const std::string& a2,
                        bool verify_only, bool verbose) {
  const auto d = load_digraph(digraph_path);
  const auto t1 = load_arborescence(d, a1);
  const auto t2 = load_arborescence(d, a2);
  if (verify_only) {
    Outcome out;
    const bool yes = reachable(d, t1, t2);
    out.code = yes ? kYes : kNo;
    out.text = yes ? "reachable\n" : "unreachable\n";
    out.data = {{"reachable", yes}};
    return out;
  }
  if (t1.root() == t2.root()) return sequence_outcome(d, reconfigure_same_root(d, t1, t2), t2, "optimal", verbose);
  const auto s = construct_sequence(d, t1, t2);
  if (!s) return {kNo, "unreachable\n", {{"reachable", false}}};
  return sequence_outcome(d, *s, t2, "valid", verbose);
}

Outcome cmd_shortest_exact(const std::string& digraph_path, const std::string& a1, const std::string& a2,
                           std::uint64_t budget, bool verbose) {
  const auto d = load_digraph(digraph_path);
  const auto t1 = load_arborescence(d, a1);
  const auto t2 = load_arborescence(d, a2);
  const auto res = oracle::bfs_shortest(d, t1, t2, budget);
  if (!res) return {kNo, "unreachable\n", {{"reachable", false}}};
  return sequence_outcome(d, res->sequence, t2, "optimal", verbose);
}

Outcome cmd_gen_hard(const std::string& graph_path, int k, const std::string& variant, const std::string& prefix) {
  auto vc = io::parse_undirected_graph(io::read_file(graph_path));
  vc.k = k;
  vc.validate();
  const auto inst = hardness::reduce_vertex_cover(vc, hardness::parse_variant(variant));
  const auto sidecar = io::roles_json(inst);
  const std::vector<std::pair<std::string, std::string>> files{
      {prefix + ".digraph", io::format_digraph(inst.digraph)},
      {prefix + ".t1", io::format_arborescence(inst.t1)},
      {prefix + ".t2", io::format_arborescence(inst.t2)},
      {prefix + ".json", sidecar.dump(2) + "\n"},
  };
  Outcome out;
  std::ostringstream text;
  json written = json::array();
  for (const auto& [path, content] : files) {
    io::write_file(path, content);
    text << "wrote " << path << "\n";
    written.push_back(path);
  }
  text << "ell " << inst.ell << "\n";
  out.text = text.str();
  out.data = {{"files", written}, {"ell", inst.ell}, {"vertices", inst.digraph.vertex_count()},
              {"arcs", inst.digraph.arc_count()}};
  return out;
}

Outcome cmd_enumerate(const std::string& digraph_path, bool dot, std::uint64_t budget) {
  const auto d = load_digraph(digraph_path);
  const auto g = oracle::build_reconfiguration_graph(d, budget);
  const auto comp = g.components();
  Outcome out;
  json nodes = json::array();
  std::ostringstream text;
  int component_count = 0;
  for (int i = 0; i < g.node_count(); ++i) {
    const auto& t = g.nodes()[i];
    component_count = std::max(component_count, comp[i] + 1);
    text << "t" << i << " root " << t.root() << " arcs";
    for (ArcId a : t.arc_ids()) text << " " << a;
    text << " component " << comp[i] << "\n";
    nodes.push_back({{"index", i}, {"root", t.root()}, {"arcs", t.arc_ids()}, {"component", comp[i]}});
  }
  text << "arborescences " << g.node_count() << "\n";
  text << "edges " << g.edge_count() << "\n";
  text << "components " << component_count << "\n";
  out.text = dot ? io::reconfiguration_graph_dot(g) : text.str();
  out.data = {{"arborescences", nodes}, {"edges", g.edge_count()}, {"components", component_count}};
  if (dot) out.data["dot"] = out.text;
  return out;
}

Outcome cmd_search(std::uint64_t seed, int max_n, int attempts, const std::string& prefix) {
  const auto found = search_no_instance(seed, max_n, attempts);
  if (!found) return {kNo, "not found\n", {{"found", false}}};
  Outcome out;
  const auto digraph = io::format_digraph(found->digraph);
  const auto t1 = io::format_arborescence(found->t1);
  const auto t2 = io::format_arborescence(found->t2);
  if (prefix.empty()) {
    out.text = "# digraph\n" + digraph + "# t1\n" + t1 + "# t2\n" + t2;
  } else {
    io::write_file(prefix + ".digraph", digraph);
    io::write_file(prefix + ".t1", t1);
    io::write_file(prefix + ".t2", t2);
    out.text = "wrote " + prefix + ".digraph\nwrote " + prefix + ".t1\nwrote " + prefix + ".t2\n";
  }
  out.data = {{"found", true}, {"digraph", digraph}, {"t1", io::to_json(found->digraph, found->t1)},
              {"t2", io::to_json(found->digraph, found->t2)}};
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Temporal arborescence reconfiguration tools"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit a JSON envelope instead of text");

  std::string digraph, arb1, arb2;
  std::optional<std::uint64_t> budget;
  bool verbose = false;

  auto* validate = app.add_subcommand("validate", "Check that an arborescence file is a time-respecting arborescence");
  validate->add_option("digraph", digraph)->required();
  validate->add_option("arborescence", arb1)->required();

  VertexId root = 0;
  auto* minimal = app.add_subcommand("minimal", "Compute a minimal time-respecting arborescence");
  minimal->add_option("digraph", digraph)->required();
  minimal->add_option("--root", root)->required();

  bool verify_only = false;
  auto* reconfigure = app.add_subcommand("reconfigure", "Build a reconfiguration sequence between two arborescences");
  reconfigure->add_option("digraph", digraph)->required();
  reconfigure->add_option("from", arb1)->required();
  reconfigure->add_option("to", arb2)->required();
  reconfigure->add_flag("--verify-only", verify_only, "Only decide reachability");
  reconfigure->add_flag("--verbose", verbose, "Print the sequence as JSON with every intermediate arborescence");

  auto* shortest = app.add_subcommand("shortest-exact", "Exact shortest sequence by exhaustive search");
  shortest->add_option("digraph", digraph)->required();
  shortest->add_option("from", arb1)->required();
  shortest->add_option("to", arb2)->required();
  shortest->add_option("--budget", budget, "Per-root candidate budget (default: $TEMPO_ARB_BUDGET or 10^7)");
  shortest->add_flag("--verbose", verbose, "Print the sequence as JSON with every intermediate arborescence");

  std::string graph, variant = "standard", prefix;
  int k = 0;
  auto* gen = app.add_subcommand("gen-hard", "Generate a shortest-reconfiguration instance from a vertex cover input");
  gen->add_option("graph", graph)->required();
  gen->add_option("k", k)->required();
  gen->add_option("--variant", variant, "standard, three-label or perturbed")->capture_default_str();
  gen->add_option("--out", prefix, "Output path prefix")->required();

  bool dot = false;
  auto* enumerate = app.add_subcommand("enumerate", "List every time-respecting arborescence and the reconfiguration graph");
  enumerate->add_option("digraph", digraph)->required();
  enumerate->add_flag("--dot", dot, "Print the reconfiguration graph in DOT");
  enumerate->add_option("--budget", budget, "Per-root candidate budget (default: $TEMPO_ARB_BUDGET or 10^7)");

  std::uint64_t seed = 1;
  int max_n = 6, attempts = 2000;
  auto* search = app.add_subcommand("search-noinstance", "Seeded search for an unreachable pair with distinct roots");
  search->add_option("--seed", seed)->capture_default_str();
  search->add_option("--max-n", max_n)->capture_default_str()->check(CLI::Range(2, 8));
  search->add_option("--attempts", attempts)->capture_default_str()->check(CLI::PositiveNumber);
  search->add_option("--out", prefix, "Write <prefix>.digraph/.t1/.t2 instead of printing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kYes : kInputError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  Outcome out;
  std::string error;
  try {
    if (chosen == validate) {
      out = cmd_validate(digraph, arb1);
    } else if (chosen == minimal) {
      out = cmd_minimal(digraph, root);
    } else if (chosen == reconfigure) {
      out = cmd_reconfigure(digraph, arb1, arb2, verify_only, verbose);
    } else if (chosen == shortest) {
      out = cmd_shortest_exact(digraph, arb1, arb2, budget_from(budget), verbose);
    } else if (chosen == gen) {
      out = cmd_gen_hard(graph, k, variant, prefix);
    } else if (chosen == enumerate) {
      out = cmd_enumerate(digraph, dot, budget_from(budget));
    } else {
      out = cmd_search(seed, max_n, attempts, prefix);
    }
  } catch (const BudgetExceeded& e) {
    out.code = kBudget;
    error = std::string("budget exceeded: ") + e.what();
  } catch (const std::logic_error& e) {
    // invalid_argument covers malformed input; other logic errors are bugs.
    out.code = dynamic_cast<const std::invalid_argument*>(&e) ? kInputError : kInternal;
    error = e.what();
  } catch (const std::exception& e) {
    out.code = kInputError;
    error = e.what();
  }

  if (as_json) {
    json envelope{{"command", chosen->get_name()}, {"exit_code", out.code}};
    if (error.empty()) {
      envelope["result"] = out.data;
    } else {
      envelope["error"] = error;
    }
    std::cout << envelope.dump(2) << "\n";
  } else if (error.empty()) {
    std::cout << out.text;
  } else {
    std::cerr << "tarb: " << error << "\n";
  }
  return out.code;
}
