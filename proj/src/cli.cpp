#include "ghct/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ghct/bench.hpp"
#include "ghct/certifier.hpp"
#include "ghct/cuttree.hpp"
#include "ghct/gadgets.hpp"
#include "ghct/generate.hpp"
#include "ghct/graph.hpp"
#include "ghct/maxflow.hpp"

namespace ghct::cli {

namespace {

// Reported as exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint64_t seed = 1;
  std::string format = "text";
  int workers = 1;
  bool no_timing = false;
};

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

std::string read_text(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string gadget_graph_text(const Graph& g, const std::vector<std::pair<std::string, std::vector<NodeId>>>& layers) {
  std::ostringstream out;
  for (const auto& [name, nodes] : layers) {
    out << "c " << name;
    for (NodeId v : nodes) out << ' ' << v;
    out << '\n';
  }
  save_graph(g, out);
  return out.str();
}

// ---------------------------------------------------------------------------
// gen

struct GenArgs {
  std::string kind;
  int n = 0;
  int m = 0;
  int degree = 3;
  int dim = 3;
  double density = 0.5;
  bool intermediate = false;
  std::string input;
  std::string output;
};

int cmd_gen(const Globals& gl, const GenArgs& a, std::ostream& out) {
  Rng rng(gl.seed);
  if (a.kind == "path") {
    write_text(a.output, graph_to_text(path_graph(a.n)), out);
  } else if (a.kind == "star") {
    write_text(a.output, graph_to_text(star_graph(a.n - 1)), out);
  } else if (a.kind == "clique") {
    write_text(a.output, graph_to_text(clique_graph(a.n)), out);
  } else if (a.kind == "random-gnm") {
    write_text(a.output, graph_to_text(random_gnm(a.n, a.m, rng)), out);
  } else if (a.kind == "random-regular") {
    write_text(a.output, graph_to_text(random_regular(a.n, a.degree, rng)), out);
  } else if (a.kind == "ov-gadget") {
    OVInstance ov;
    if (!a.input.empty()) {
      std::istringstream in(read_text(a.input));
      ov = load_ov(in);
    } else {
      ov = random_ov(a.n, a.dim, rng, a.density);
    }
    const OVGadget gd = a.intermediate ? build_3ov_intermediate(ov) : build_3ov_final(ov);
    write_text(a.output,
               gadget_graph_text(gd.graph, {{"V1", gd.alpha}, {"V3", gd.gamma}, {"vB", {gd.v_b}}, {"B", gd.coord},
                                            {"beta'", gd.beta_prime}, {"subdivision", gd.subdivision}}),
               out);
  } else if (a.kind == "bmm-gadget") {
    BoolMatrix p, q;
    if (!a.input.empty()) {
      std::istringstream in(read_text(a.input));
      std::tie(p, q) = load_bmm(in);
    } else {
      p = random_bool_matrix(a.n, rng, a.density);
      q = random_bool_matrix(a.n, rng, a.density);
    }
    const BMMGadget gd = build_bmm_gadget(p, q);
    write_text(a.output, gadget_graph_text(gd.graph, {{"A", gd.a}, {"B", gd.b}, {"C", gd.c}}), out);
  } else {
    throw UsageError("unknown generator kind '" + a.kind + "'");
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// tree

struct TreeArgs {
  std::string graph;
  std::string algo = "gh";
  long long d = 0;
  long long k = 0;
  std::string d_mode = "sqrt";
  std::string output;
};

int cmd_tree(const Globals& gl, const TreeArgs& a, std::ostream& out) {
  const Graph g = load_graph_file(a.graph);
  if (g.has_node_caps() || g.has_directed_edges()) {
    throw UnsupportedError("tree: node-capacitated or directed input is not supported");
  }
  BuildStats stats;
  const auto start = std::chrono::steady_clock::now();
  std::string text;
  if (a.algo == "gh") {
    text = tree_to_text(gomory_hu(g, &stats));
  } else if (a.algo == "gusfield") {
    text = tree_to_text(gusfield(g, &stats));
  } else if (a.algo == "hybrid") {
    std::optional<Capacity> d;
    if (a.d > 0) {
      d = a.d;
    } else if (a.d_mode == "n16") {
      const double m = static_cast<double>(g.total_capacity());
      d = std::max<Capacity>(1, static_cast<Capacity>(std::ceil(std::sqrt(m) * std::pow(g.node_count(), 1.0 / 6.0))));
    } else if (a.d_mode != "sqrt") {
      throw UsageError("unknown --d-mode '" + a.d_mode + "'");
    }
    text = tree_to_text(hybrid_cut_tree(g, d, &stats));
  } else if (a.algo == "partial") {
    if (a.k < 1) throw UsageError("partial needs --k >= 1");
    std::ostringstream blocks;
    save_super_node_tree(partial_tree(g, a.k, &stats), blocks);
    text = blocks.str();
  } else {
    throw UsageError("unknown algorithm '" + a.algo + "'");
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  std::ostringstream line;
  if (gl.format == "json") {
    nlohmann::ordered_json j;
    j["algorithm"] = a.algo;
    j["n"] = g.node_count();
    j["m"] = g.total_capacity();
    j["flow_calls"] = stats.flow_calls;
    j["flow_value_sum"] = stats.flow_value_sum;
    if (a.algo == "hybrid") {
      j["d"] = stats.degree_threshold;
      j["high_degree_nodes"] = stats.high_degree_nodes;
      j["stage2_calls"] = stats.stage2_calls;
      j["stage2_flow_sum"] = stats.stage2_flow_sum;
    }
    if (!gl.no_timing) j["wall_ms"] = ms;
    line << j.dump() << '\n';
  } else {
    line << "algorithm=" << a.algo << " n=" << g.node_count() << " m=" << g.total_capacity()
         << " flow_calls=" << stats.flow_calls << " flow_value_sum=" << stats.flow_value_sum;
    if (a.algo == "hybrid") {
      line << " d=" << stats.degree_threshold << " high_degree_nodes=" << stats.high_degree_nodes
           << " stage2_calls=" << stats.stage2_calls << " stage2_flow_sum=" << stats.stage2_flow_sum;
    }
    if (!gl.no_timing) line << " wall_ms=" << ms;
    line << '\n';
  }
  if (a.output.empty() || a.output == "-") {
    out << text;
    out << "c " << line.str();
  } else {
    write_text(a.output, text, out);
    out << line.str();
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string graph;
  std::string tree;
  std::string witness;
  std::string emit_witness;
};

int cmd_verify(const Globals& gl, const VerifyArgs& a, std::ostream& out) {
  const Graph g = load_graph_file(a.graph);
  const CutTree t = load_tree_file(a.tree);
  if (t.node_count() != g.node_count()) throw UsageError("tree and graph have different node counts");
  Witness w;
  if (!a.witness.empty()) {
    w = witness_from_json(read_text(a.witness));
  } else {
    w = prove(g, t);
  }
  if (!a.emit_witness.empty()) write_text(a.emit_witness, witness_to_json(w), out);
  const Verdict v = verify(g, t, w);
  if (gl.format == "json") {
    nlohmann::ordered_json j;
    j["verdict"] = v.accepted ? "accept" : "reject";
    if (!v.accepted) {
      j["expansion"] = v.expansion;
      j["check"] = v.check;
      j["reason"] = v.reason;
    }
    j["expansions"] = w.expansions.size();
    out << j.dump() << '\n';
  } else if (v.accepted) {
    out << "accept expansions=" << w.expansions.size() << '\n';
  } else {
    out << "reject expansion=" << v.expansion << " check=" << v.check << " reason=" << v.reason << '\n';
  }
  if (!v.accepted && v.check == "malformed") return kInputError;
  return v.accepted ? kOk : kReject;
}

// ---------------------------------------------------------------------------
// query

struct QueryArgs {
  std::string tree;
  std::vector<int> nodes;
  bool all_pairs = false;
};

int cmd_query(const Globals& gl, const QueryArgs& a, std::ostream& out) {
  const CutTree t = load_tree_file(a.tree);
  if (a.all_pairs) {
    const auto m = all_pairs_matrix(t);
    if (gl.format == "json") {
      out << nlohmann::json(m).dump() << '\n';
    } else {
      for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
          if (j) out << ' ';
          if (i == j) {
            out << '-';
          } else {
            out << m[i][j];
          }
        }
        out << '\n';
      }
    }
    return kOk;
  }
  if (a.nodes.size() != 2) throw UsageError("query needs two node ids or --all-pairs");
  const int s = a.nodes[0], u = a.nodes[1];
  if (s < 0 || u < 0 || s >= t.node_count() || u >= t.node_count()) throw UsageError("node id out of range");
  if (s == u) throw UsageError("query nodes must differ");
  const CutQuery q = tree_query(t, s, u);
  if (gl.format == "json") {
    out << nlohmann::json{{"s", s}, {"t", u}, {"value", q.value}, {"cut_side", q.cut_side}}.dump() << '\n';
  } else {
    out << q.value << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// bench

struct BenchArgs {
  std::vector<std::string> corpus;
  std::vector<std::string> graphs;
  std::vector<std::string> algos{"gh", "gusfield", "hybrid"};
  int repeats = 1;
  long long d = 0;
  bool no_audit = false;
  std::string output;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

int to_int(const std::string& s) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("bad number '" + s + "' in corpus spec");
}

// Corpus specs: gnm:N:M:COUNT, regular:N:R:COUNT, path:N, star:N, clique:N.
std::vector<BenchInstance> build_corpus(const Globals& gl, const BenchArgs& a) {
  Rng rng(gl.seed);
  std::vector<BenchInstance> corpus;
  for (const std::string& spec : a.corpus) {
    const auto p = split(spec, ':');
    if (p[0] == "gnm" && p.size() == 4) {
      const int n = to_int(p[1]), m = to_int(p[2]), count = to_int(p[3]);
      for (int i = 0; i < count; ++i) corpus.push_back({spec + "#" + std::to_string(i), random_gnm(n, m, rng)});
    } else if (p[0] == "regular" && p.size() == 4) {
      const int n = to_int(p[1]), r = to_int(p[2]), count = to_int(p[3]);
      for (int i = 0; i < count; ++i) corpus.push_back({spec + "#" + std::to_string(i), random_regular(n, r, rng)});
    } else if (p[0] == "path" && p.size() == 2) {
      corpus.push_back({spec, path_graph(to_int(p[1]))});
    } else if (p[0] == "star" && p.size() == 2) {
      corpus.push_back({spec, star_graph(to_int(p[1]) - 1)});
    } else if (p[0] == "clique" && p.size() == 2) {
      corpus.push_back({spec, clique_graph(to_int(p[1]))});
    } else {
      throw UsageError("bad corpus spec '" + spec + "'");
    }
  }
  for (const std::string& path : a.graphs) corpus.push_back({path, load_graph_file(path)});
  return corpus;
}

int cmd_bench(const Globals& gl, const BenchArgs& a, std::ostream& out) {
  const auto corpus = build_corpus(gl, a);
  BenchOptions opts;
  opts.algorithms = a.algos;
  opts.repeats = a.repeats;
  opts.workers = gl.workers;
  opts.audit = !a.no_audit;
  if (a.d > 0) opts.degree_threshold = a.d;
  for (const auto& algo : opts.algorithms) {
    if (algo != "gh" && algo != "gusfield" && algo != "hybrid") throw UsageError("unknown algorithm '" + algo + "'");
  }
  const auto rows = run_bench(corpus, opts);
  std::ostringstream report;
  bool ok = true;
  for (const BenchRow& row : rows) {
    ok = ok && row.invariants_ok;
    if (gl.format == "json") {
      report << bench_row_json(row, !gl.no_timing) << '\n';
    } else {
      report << row.instance << ' ' << row.algorithm << " repeat=" << row.repeat << " n=" << row.n << " m=" << row.m
             << " flow_calls=" << row.flow_calls << " flow_value_sum=" << row.flow_value_sum;
      if (row.algorithm == "hybrid") {
        report << " d=" << row.degree_threshold << " stage2_calls=" << row.stage2_calls << "/"
               << row.high_degree_nodes << " stage2_flow_sum=" << row.stage2_flow_sum;
      }
      if (!gl.no_timing) report << " wall_ms=" << row.wall_ms;
      report << (row.invariants_ok ? " ok" : " VIOLATION") << '\n';
    }
  }
  write_text(a.output, report.str(), out);
  return ok ? kOk : kReject;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cut-equivalent tree toolkit", "ghct"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals gl;
  app.add_option("--seed", gl.seed, "Random seed");
  app.add_option("--format", gl.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--workers", gl.workers, "Worker threads for bench")->check(CLI::PositiveNumber);
  app.add_flag("--no-timing", gl.no_timing, "Omit wall-clock fields");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph or gadget file");
  gen_cmd->add_option("kind", gen.kind, "path|star|clique|random-gnm|random-regular|ov-gadget|bmm-gadget")->required();
  gen_cmd->add_option("--n", gen.n, "Nodes (or vectors / matrix size for gadgets)");
  gen_cmd->add_option("--m", gen.m, "Edges for random-gnm");
  gen_cmd->add_option("--degree", gen.degree, "Degree for random-regular");
  gen_cmd->add_option("--dim", gen.dim, "Vector dimension for ov-gadget");
  gen_cmd->add_option("--density", gen.density, "Probability of a 1 entry in gadget inputs");
  gen_cmd->add_flag("--intermediate", gen.intermediate, "Emit the directed intermediate 3OV graph");
  gen_cmd->add_option("--input", gen.input, "Read the ov/bmm instance from a file");
  gen_cmd->add_option("-o,--out", gen.output, "Output path (default stdout)");

  TreeArgs tree;
  auto* tree_cmd = app.add_subcommand("tree", "Build a cut-equivalent or partial tree");
  tree_cmd->add_option("graph", tree.graph)->required();
  tree_cmd->add_option("--algo", tree.algo)->check(CLI::IsMember({"gh", "gusfield", "hybrid", "partial"}));
  tree_cmd->add_option("--d", tree.d, "Hybrid degree threshold");
  tree_cmd->add_option("--d-mode", tree.d_mode, "sqrt (default) or n16");
  tree_cmd->add_option("--k", tree.k, "Partial-tree connectivity bound");
  tree_cmd->add_option("-o,--out", tree.output, "Tree / block file path");

  VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify", "Certify a tree against a graph");
  verify_cmd->add_option("graph", ver.graph)->required();
  verify_cmd->add_option("tree", ver.tree)->required();
  verify_cmd->add_option("--witness", ver.witness, "Verify this witness instead of proving");
  verify_cmd->add_option("--emit-witness", ver.emit_witness, "Write the witness used");

  QueryArgs query;
  auto* query_cmd = app.add_subcommand("query", "Min-cut queries on a tree file");
  query_cmd->add_option("tree", query.tree)->required();
  query_cmd->add_option("nodes", query.nodes, "s t");
  query_cmd->add_flag("--all-pairs", query.all_pairs);

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run algorithms over a corpus");
  bench_cmd->add_option("--corpus", bench.corpus, "gnm:N:M:COUNT | regular:N:R:COUNT | path:N | star:N | clique:N");
  bench_cmd->add_option("--graphs", bench.graphs, "Graph files");
  bench_cmd->add_option("--algos", bench.algos)->delimiter(',');
  bench_cmd->add_option("--repeats", bench.repeats)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--d", bench.d, "Hybrid degree threshold");
  bench_cmd->add_flag("--no-audit", bench.no_audit, "Skip the auxiliary-size audit");
  bench_cmd->add_option("-o,--out", bench.output);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "ghct: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*gen_cmd) return cmd_gen(gl, gen, out);
    if (*tree_cmd) return cmd_tree(gl, tree, out);
    if (*verify_cmd) return cmd_verify(gl, ver, out);
    if (*query_cmd) return cmd_query(gl, query, out);
    if (*bench_cmd) return cmd_bench(gl, bench, out);
  } catch (const ParseError& e) {
    err << "ghct: parse error: " << e.what() << '\n';
  } catch (const WitnessFormatError& e) {
    err << "ghct: " << e.what() << '\n';
  } catch (const UnsupportedError& e) {
    err << "ghct: unsupported: " << e.what() << '\n';
  } catch (const ContractError& e) {
    err << "ghct: " << e.what() << '\n';
  } catch (const UsageError& e) {
    err << "ghct: usage: " << e.what() << '\n';
  }
  return kInputError;
}

}  // namespace ghct::cli
