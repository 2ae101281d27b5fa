#include "ghct/gadgets.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "ghct/maxflow.hpp"

namespace ghct {

namespace {

inline std::size_t idx(int v) { return static_cast<std::size_t>(v); }

struct PendingEdge {
  NodeId u, v;
  bool directed;
};

bool draw(Rng& rng, double p) {
  constexpr std::uint64_t kScale = std::uint64_t{1} << 40;
  return static_cast<double>(rng.below(kScale)) < p * static_cast<double>(kScale);
}

OVGadget build_3ov(const OVInstance& ov, bool final_graph) {
  ov.validate();
  const int n = ov.size();
  const int d = ov.dim;
  // beta' and v_B carry d-1 units per beta; they vanish for d = 1.
  if (d < 2) throw ContractError("3OV gadget: dimension must be at least 2");
  const Capacity scale = final_graph ? 2 * n : 1;

  OVGadget gd;
  gd.main_nodes = n + 2 * d + n * d + n + 1 + d + n;
  // Each beta contributes d edges C_i^0 - beta' and d edges C_i^1 - beta_i,
  // all of capacity 1 and realized through a subdivision node.
  const int subdivisions = 2 * n * d;
  std::vector<Capacity> caps(idx(gd.main_nodes + subdivisions), 0);
  int next = 0;
  for (int a = 0; a < n; ++a) {
    gd.alpha.push_back(next);
    caps[idx(next++)] = 1;
  }
  for (int i = 0; i < d; ++i) {
    gd.coord_bit.push_back({next, next + 1});
    caps[idx(next++)] = n * scale;
    caps[idx(next++)] = n * scale;
  }
  gd.beta_coord.assign(idx(n), {});
  for (int b = 0; b < n; ++b) {
    for (int i = 0; i < d; ++i) {
      gd.beta_coord[idx(b)].push_back(next);
      caps[idx(next++)] = 1 * scale;
    }
  }
  for (int b = 0; b < n; ++b) {
    gd.beta_prime.push_back(next);
    caps[idx(next++)] = (d - 1) * scale;
  }
  gd.v_b = next;
  caps[idx(next++)] = static_cast<Capacity>(n) * (d - 1) * scale;
  for (int i = 0; i < d; ++i) {
    gd.coord.push_back(next);
    caps[idx(next++)] = n * scale;
  }
  for (int c = 0; c < n; ++c) {
    gd.gamma.push_back(next);
    caps[idx(next++)] = 1;
  }

  std::vector<PendingEdge> edges;
  auto subdivide = [&](NodeId x, NodeId y) {
    const NodeId mid = next++;
    caps[idx(mid)] = 1 * scale;
    gd.subdivision.push_back(mid);
    edges.push_back({x, mid, false});
    edges.push_back({mid, y, false});
  };

  for (int a = 0; a < n; ++a) {
    for (int i = 0; i < d; ++i) {
      const int bit = ov.sets[0][idx(a)][idx(i)] ? 1 : 0;
      edges.push_back({gd.alpha[idx(a)], gd.coord_bit[idx(i)][idx(bit)], !final_graph});
    }
  }
  for (int b = 0; b < n; ++b) {
    for (int i = 0; i < d; ++i) {
      if (ov.sets[1][idx(b)][idx(i)]) edges.push_back({gd.beta_coord[idx(b)][idx(i)], gd.coord[idx(i)], false});
    }
  }
  for (int c = 0; c < n; ++c) {
    for (int i = 0; i < d; ++i) {
      if (ov.sets[2][idx(c)][idx(i)]) edges.push_back({gd.coord[idx(i)], gd.gamma[idx(c)], false});
    }
  }
  for (int b = 0; b < n; ++b) {
    for (int i = 0; i < d; ++i) {
      subdivide(gd.coord_bit[idx(i)][0], gd.beta_prime[idx(b)]);
      subdivide(gd.coord_bit[idx(i)][1], gd.beta_coord[idx(b)][idx(i)]);
      edges.push_back({gd.beta_coord[idx(b)][idx(i)], gd.beta_prime[idx(b)], false});
    }
    edges.push_back({gd.beta_prime[idx(b)], gd.v_b, false});
  }
  for (int c = 0; c < n; ++c) edges.push_back({gd.v_b, gd.gamma[idx(c)], false});

  gd.graph = Graph(next);
  gd.infinity = 1;
  for (NodeId v = 0; v < next; ++v) {
    gd.graph.set_node_cap(v, caps[idx(v)]);
    gd.infinity += caps[idx(v)];
  }
  for (const PendingEdge& e : edges) {
    if (e.directed) {
      gd.graph.add_directed_edge(e.u, e.v, gd.infinity);
    } else {
      gd.graph.add_edge(e.u, e.v, gd.infinity);
    }
  }
  return gd;
}

void read_rows(std::istream& in, int count, int width, std::vector<BitVector>& rows,
               std::size_t& line_no) {
  std::string line;
  while (static_cast<int>(rows.size()) < count) {
    if (!std::getline(in, line)) throw ParseError(line_no, "unexpected end of file");
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok == "c") continue;
    if (static_cast<int>(tok.size()) != width) {
      throw ParseError(line_no, "expected a bitstring of length " + std::to_string(width));
    }
    BitVector row;
    for (char ch : tok) {
      if (ch != '0' && ch != '1') throw ParseError(line_no, "bitstring contains '" + std::string(1, ch) + "'");
      row.push_back(ch == '1');
    }
    rows.push_back(std::move(row));
  }
}

void write_rows(const std::vector<BitVector>& rows, std::ostream& out) {
  for (const auto& row : rows) {
    for (char b : row) out << (b ? '1' : '0');
    out << '\n';
  }
}

}  // namespace

void OVInstance::validate() const {
  if (dim <= 0) throw ContractError("3OV instance: dimension must be positive");
  const std::size_t n = sets[0].size();
  if (n == 0) throw ContractError("3OV instance: vector sets are empty");
  for (const auto& set : sets) {
    if (set.size() != n) throw ContractError("3OV instance: vector sets differ in size");
    for (const auto& v : set) {
      if (static_cast<int>(v.size()) != dim) throw ContractError("3OV instance: vector of wrong dimension");
      for (char b : v) {
        if (b != 0 && b != 1) throw ContractError("3OV instance: entries must be 0 or 1");
      }
    }
  }
}

bool OVInstance::orthogonal(int a, int b, int c) const {
  for (int i = 0; i < dim; ++i) {
    if (sets[0][idx(a)][idx(i)] && sets[1][idx(b)][idx(i)] && sets[2][idx(c)][idx(i)]) return false;
  }
  return true;
}

OVGadget build_3ov_intermediate(const OVInstance& ov) { return build_3ov(ov, false); }

OVGadget build_3ov_final(const OVInstance& ov) { return build_3ov(ov, true); }

std::optional<std::array<int, 3>> solve_3ov_bruteforce(const OVInstance& ov) {
  ov.validate();
  const int n = ov.size();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (ov.orthogonal(a, b, c)) return std::array<int, 3>{a, b, c};
      }
    }
  }
  return std::nullopt;
}

Capacity node_capacitated_flow(const Graph& g, NodeId s, NodeId t) {
  const SplitGraph sg = split_node_capacities(g, s, t);
  return max_flow(sg.graph, sg.out[idx(s)], sg.in[idx(t)]).value;
}

OVGadgetReport check_gadget(const OVInstance& ov) {
  const OVGadget gd = build_3ov_final(ov);
  const int n = ov.size();
  OVGadgetReport r;
  r.n = n;
  r.dim = ov.dim;
  r.threshold = 2 * static_cast<Capacity>(n) * n * ov.dim;
  r.triple = solve_3ov_bruteforce(ov);
  r.flows.assign(idx(n), std::vector<Capacity>(idx(n), 0));
  r.pair_orthogonal.assign(idx(n), std::vector<char>(idx(n), 0));
  r.per_pair_equivalence = true;
  r.min_flow = -1;
  for (int a = 0; a < n; ++a) {
    for (int c = 0; c < n; ++c) {
      const Capacity f = node_capacitated_flow(gd.graph, gd.alpha[idx(a)], gd.gamma[idx(c)]);
      r.flows[idx(a)][idx(c)] = f;
      bool orth = false;
      for (int b = 0; b < n && !orth; ++b) orth = ov.orthogonal(a, b, c);
      r.pair_orthogonal[idx(a)][idx(c)] = orth;
      if ((f >= r.threshold) == orth) r.per_pair_equivalence = false;
      if (f < r.threshold) r.max_below_threshold = std::max(r.max_below_threshold, f);
      r.min_flow = r.min_flow < 0 ? f : std::min(r.min_flow, f);
    }
  }
  r.instance_equivalence = (r.min_flow >= r.threshold) == !r.triple.has_value();
  return r;
}

OVInstance random_ov(int n, int dim, Rng& rng, double one_probability) {
  OVInstance ov;
  ov.dim = dim;
  for (auto& set : ov.sets) {
    set.assign(idx(n), BitVector(idx(dim), 0));
    for (auto& v : set) {
      for (auto& b : v) b = draw(rng, one_probability);
    }
  }
  return ov;
}

// ---------------------------------------------------------------------------

BMMGadget build_bmm_gadget(const BoolMatrix& p, const BoolMatrix& q) {
  const int n = static_cast<int>(p.size());
  if (n == 0) throw ContractError("bmm gadget: empty matrices");
  if (static_cast<int>(q.size()) != n) throw ContractError("bmm gadget: matrices differ in size");
  for (const auto* m : {&p, &q}) {
    for (const auto& row : *m) {
      if (static_cast<int>(row.size()) != n) throw ContractError("bmm gadget: matrices must be square");
    }
  }
  BMMGadget gd;
  gd.graph = Graph(3 * n);
  for (int i = 0; i < n; ++i) {
    gd.a.push_back(i);
    gd.b.push_back(n + i);
    gd.c.push_back(2 * n + i);
  }
  Capacity inf = 1;
  for (int i = 0; i < n; ++i) {
    gd.graph.set_node_cap(gd.a[idx(i)], 1);
    gd.graph.set_node_cap(gd.b[idx(i)], 2 * n);
    gd.graph.set_node_cap(gd.c[idx(i)], 1);
    inf += 2 + 2 * n;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (p[idx(i)][idx(j)]) gd.graph.add_edge(gd.a[idx(i)], gd.b[idx(j)], inf);
    }
  }
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      if (q[idx(j)][idx(k)]) gd.graph.add_edge(gd.b[idx(j)], gd.c[idx(k)], inf);
    }
  }
  return gd;
}

BoolMatrix boolean_product(const BoolMatrix& p, const BoolMatrix& q) {
  const std::size_t n = p.size();
  BoolMatrix r(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!p[i][j]) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (q[j][k]) r[i][k] = 1;
      }
    }
  }
  return r;
}

BMMReport check_bmm(const BoolMatrix& p, const BoolMatrix& q) {
  const BMMGadget gd = build_bmm_gadget(p, q);
  const int n = static_cast<int>(p.size());
  BMMReport r;
  r.n = n;
  r.threshold = 2 * n;
  r.product = boolean_product(p, q);
  r.flows.assign(idx(n), std::vector<Capacity>(idx(n), 0));
  r.matches = true;
  r.dichotomy = true;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Capacity f = node_capacitated_flow(gd.graph, gd.a[idx(i)], gd.c[idx(k)]);
      r.flows[idx(i)][idx(k)] = f;
      if ((f >= r.threshold) != (r.product[idx(i)][idx(k)] != 0)) r.matches = false;
      if (f == r.threshold - 1) r.dichotomy = false;
    }
  }
  return r;
}

BoolMatrix random_bool_matrix(int n, Rng& rng, double one_probability) {
  BoolMatrix m(idx(n), std::vector<char>(idx(n), 0));
  for (auto& row : m) {
    for (auto& b : row) b = draw(rng, one_probability);
  }
  return m;
}

// ---------------------------------------------------------------------------

OVInstance load_ov(std::istream& in) {
  std::size_t line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind) || kind == "c") continue;
    int n = 0, d = 0;
    if (kind != "ov" || !(ls >> n >> d) || n <= 0 || d <= 0) {
      throw ParseError(line_no, "expected header 'ov <n> <d>'");
    }
    OVInstance ov;
    ov.dim = d;
    for (auto& set : ov.sets) read_rows(in, n, d, set, line_no);
    return ov;
  }
  throw ParseError(line_no, "missing 'ov' header");
}

void save_ov(const OVInstance& ov, std::ostream& out) {
  out << "ov " << ov.size() << ' ' << ov.dim << '\n';
  for (const auto& set : ov.sets) write_rows(set, out);
}

std::pair<BoolMatrix, BoolMatrix> load_bmm(std::istream& in) {
  std::size_t line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind) || kind == "c") continue;
    int n = 0;
    if (kind != "bmm" || !(ls >> n) || n <= 0) throw ParseError(line_no, "expected header 'bmm <n>'");
    std::vector<BitVector> p, q;
    read_rows(in, n, n, p, line_no);
    read_rows(in, n, n, q, line_no);
    return {p, q};
  }
  throw ParseError(line_no, "missing 'bmm' header");
}

void save_bmm(const BoolMatrix& p, const BoolMatrix& q, std::ostream& out) {
  out << "bmm " << p.size() << '\n';
  write_rows(p, out);
  write_rows(q, out);
}

}  // namespace ghct
