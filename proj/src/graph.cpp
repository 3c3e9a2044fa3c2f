#include "beit/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <sstream>

#include "beit/error.hpp"

namespace beit {

namespace {

int popcount(VertexSet s) { return std::popcount(s); }

// Lowest vertex in a nonempty set.
int first_vertex(VertexSet s) { return std::countr_zero(s) + 1; }

}  // namespace

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)), 0) {
  if (n < 0 || n > kMaxVertices) {
    throw Error(ErrorKind::InvalidGraph,
                "vertex count " + std::to_string(n) + " outside 0.." +
                    std::to_string(kMaxVertices));
  }
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
  if (v < 1 || v > n_) {
    throw Error(ErrorKind::InvalidGraph,
                "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
  }
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(ErrorKind::InvalidGraph, "loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) {
    throw Error(ErrorKind::InvalidGraph,
                "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  }
  adj_[u - 1] |= vertex_bit(v);
  adj_[v - 1] |= vertex_bit(u);
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u - 1] & vertex_bit(v)) != 0;
}

int Graph::degree(int v) const {
  check_vertex(v);
  return popcount(adj_[v - 1]);
}

int Graph::num_edges() const {
  int twice = 0;
  for (VertexSet a : adj_) twice += popcount(a);
  return twice / 2;
}

VertexSet Graph::all_vertices() const {
  return n_ == 64 ? ~VertexSet{0} : (VertexSet{1} << n_) - 1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= n_; ++u) {
    for (int v = u + 1; v <= n_; ++v) {
      if (adj_[u - 1] & vertex_bit(v)) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::is_complete() const { return num_edges() == n_ * (n_ - 1) / 2; }

bool Graph::is_connected() const { return n_ > 0 && count_components(all_vertices()) == 1; }

std::vector<VertexSet> Graph::components(VertexSet within) const {
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (left) {
    VertexSet comp = vertex_bit(first_vertex(left));
    VertexSet frontier = comp;
    while (frontier) {
      int v = first_vertex(frontier);
      frontier &= frontier - 1;
      VertexSet fresh = adj_[v - 1] & within & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

int Graph::count_components(VertexSet within) const {
  return static_cast<int>(components(within).size());
}

Graph Graph::induced(VertexSet vertices) const {
  std::vector<int> label(static_cast<std::size_t>(n_) + 1, 0);
  int k = 0;
  for (int v = 1; v <= n_; ++v) {
    if (vertices & vertex_bit(v)) label[v] = ++k;
  }
  Graph out(k);
  for (auto [u, v] : edges()) {
    if (label[u] && label[v]) out.add_edge(label[u], label[v]);
  }
  return out;
}

// ---- families -------------------------------------------------------------

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw Error(ErrorKind::InvalidParameter, msg);
}

}  // namespace

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  Graph g = path_graph(n);
  g.add_edge(1, n);
  return g;
}

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  Graph g(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
  return g;
}

Graph edgeless_graph(int n) {
  require(n >= 1, "edgeless graph needs n >= 1");
  return Graph(n);
}

Graph wheel_graph(int n) {
  require(n >= 4, "wheel needs n >= 4");
  return cone(cycle_graph(n));
}

Graph multipartite_graph(const std::vector<int>& parts) {
  require(!parts.empty(), "multipartite graph needs at least one part");
  for (int p : parts) require(p >= 1, "multipartite parts must be >= 1");
  Graph g = edgeless_graph(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) g = join(g, edgeless_graph(parts[i]));
  return g;
}

Graph build_family(const std::string& kind, const std::vector<int>& params) {
  auto one = [&]() {
    require(params.size() == 1, kind + " takes exactly one parameter");
    return params[0];
  };
  if (kind == "path") return path_graph(one());
  if (kind == "cycle") return cycle_graph(one());
  if (kind == "complete") return complete_graph(one());
  if (kind == "edgeless") return edgeless_graph(one());
  if (kind == "wheel") return wheel_graph(one());
  if (kind == "multipartite") return multipartite_graph(params);
  if (kind == "grb") {
    require(params.size() == 2, "grb takes r,b");
    return construct_grb(params[0], params[1]);
  }
  throw Error(ErrorKind::InvalidParameter, "unknown graph family '" + kind + "'");
}

Graph parse_family(const std::string& descriptor) {
  auto colon = descriptor.find(':');
  std::string kind = descriptor.substr(0, colon);
  std::vector<int> params;
  if (colon != std::string::npos) {
    std::stringstream ss(descriptor.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        params.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "bad family parameter '" + item + "'");
      }
    }
  }
  return build_family(kind, params);
}

Graph cone(const Graph& h) {
  const int n = h.num_vertices();
  Graph g(n + 1);
  for (auto [u, v] : h.edges()) g.add_edge(u, v);
  for (int u = 1; u <= n; ++u) g.add_edge(u, n + 1);
  return g;
}

Graph join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.num_vertices();
  const int n2 = g2.num_vertices();
  Graph g = disjoint_union(g1, g2);
  for (int u = 1; u <= n1; ++u)
    for (int v = 1; v <= n2; ++v) g.add_edge(u, n1 + v);
  return g;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.num_vertices();
  Graph g(n1 + g2.num_vertices());
  for (auto [u, v] : g1.edges()) g.add_edge(u, v);
  for (auto [u, v] : g2.edges()) g.add_edge(n1 + u, n1 + v);
  return g;
}

Graph construct_grb(int r, int b) {
  if (r == 1 && b == 1) return complete_graph(3);
  if (b < 1 || b > r - 1) {
    throw Error(ErrorKind::InvalidParameter,
                "G_{r,b} needs 1 <= b <= r-1 or (r,b) = (1,1); got (" + std::to_string(r) +
                    "," + std::to_string(b) + ")");
  }
  Graph g = path_graph(r - b + 2);
  for (int len = r - b + 3; len <= r + 1; ++len) g = join(g, path_graph(len));
  return g;
}

// ---- invariants -----------------------------------------------------------

std::int64_t CliqueVector::k(int i) const {
  if (i < 1 || i > static_cast<int>(counts.size())) return 0;
  return counts[static_cast<std::size_t>(i - 1)];
}

CliqueVector clique_vector(const Graph& g) {
  const int n = g.num_vertices();
  if (n > kCliqueCap) {
    throw Error(ErrorKind::TooLarge,
                "clique enumeration is capped at n = " + std::to_string(kCliqueCap));
  }
  CliqueVector out;
  out.counts.assign(static_cast<std::size_t>(n), 0);
  // Extend cliques only by vertices larger than their maximum.
  std::function<void(VertexSet, int)> grow = [&](VertexSet candidates, int size) {
    while (candidates) {
      int v = first_vertex(candidates);
      candidates &= candidates - 1;
      ++out.counts[static_cast<std::size_t>(size)];
      grow(candidates & g.neighbors(v), size + 1);
    }
  };
  grow(g.all_vertices(), 0);
  return out;
}

VertexConnectivity vertex_connectivity(const Graph& g) {
  const int n = g.num_vertices();
  if (g.is_complete()) return {std::max(n - 1, 0), true};
  if (!g.is_connected()) return {0, false};
  if (n > 24) {
    throw Error(ErrorKind::TooLarge, "vertex connectivity brute force is capped at n = 24");
  }
  const VertexSet all = g.all_vertices();
  for (int size = 1; size <= n - 2; ++size) {
    // Gosper's hack over all size-subsets.
    VertexSet s = (VertexSet{1} << size) - 1;
    while (s <= all) {
      if (g.count_components(all & ~s) > 1) return {size, false};
      VertexSet c = s & -s;
      VertexSet r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  return {n - 1, false};  // unreachable for connected non-complete graphs
}

std::vector<CutSet> cut_point_sets(const Graph& g) {
  const int n = g.num_vertices();
  if (n > kCutSetCap) {
    throw Error(ErrorKind::TooLarge,
                "cut-set enumeration is capped at n = " + std::to_string(kCutSetCap));
  }
  const VertexSet all = g.all_vertices();
  std::vector<int> comps(std::size_t{1} << n);
  for (VertexSet t = 0; t <= all; ++t) comps[t] = g.count_components(all & ~t);

  std::vector<CutSet> out;
  for (VertexSet t = 0; t <= all; ++t) {
    bool ok = true;
    for (VertexSet rest = t; rest && ok; rest &= rest - 1) {
      VertexSet i = rest & -rest;
      ok = comps[t & ~i] < comps[t];
    }
    if (ok) out.push_back({t, g.components(all & ~t)});
  }
  return out;
}

int krull_dimension(const Graph& g) {
  const int n = g.num_vertices();
  int best = 0;
  for (const CutSet& cs : cut_point_sets(g)) {
    best = std::max(best, n - popcount(cs.t) + cs.c());
  }
  return best;
}

Graph neighborhood_completion(const Graph& g, int v) {
  Graph out = g;
  VertexSet nb = g.neighbors(v);
  for (VertexSet a = nb; a; a &= a - 1) {
    int u = first_vertex(a);
    for (VertexSet b = a & (a - 1); b; b &= b - 1) {
      int w = first_vertex(b);
      if (!out.has_edge(u, w)) out.add_edge(u, w);
    }
  }
  return out;
}

bool is_simplicial(const Graph& g, int v) {
  VertexSet nb = g.neighbors(v);
  for (VertexSet a = nb; a; a &= a - 1) {
    int u = first_vertex(a);
    if ((g.neighbors(u) | vertex_bit(u)) != ((g.neighbors(u) | vertex_bit(u)) | nb)) return false;
  }
  return true;
}

bool is_block_graph(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> disc(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> low(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::pair<int, int>> stack;
  int timer = 0;
  bool all_complete = true;

  auto close_block = [&](int u, int v) {
    VertexSet block = 0;
    while (!stack.empty()) {
      auto e = stack.back();
      stack.pop_back();
      block |= vertex_bit(e.first) | vertex_bit(e.second);
      if (e == std::make_pair(u, v)) break;
    }
    for (VertexSet a = block; a; a &= a - 1) {
      int w = first_vertex(a);
      if ((g.neighbors(w) & block) != (block & ~vertex_bit(w))) all_complete = false;
    }
  };

  std::function<void(int, int)> dfs = [&](int u, int parent) {
    disc[u] = low[u] = ++timer;
    for (VertexSet a = g.neighbors(u); a; a &= a - 1) {
      int v = first_vertex(a);
      if (!disc[v]) {
        stack.emplace_back(u, v);
        dfs(v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) close_block(u, v);
      } else if (v != parent && disc[v] < disc[u]) {
        stack.emplace_back(u, v);
        low[u] = std::min(low[u], disc[v]);
      }
    }
  };
  for (int v = 1; v <= n; ++v) {
    if (!disc[v]) dfs(v, 0);
  }
  return all_complete;
}

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.num_vertices();
  if (n > 8) throw Error(ErrorKind::TooLarge, "canonical form is capped at n = 8");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  auto edges = g.edges();
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (auto [u, v] : edges) {
      int a = perm[u - 1], b = perm[v - 1];
      if (a > b) std::swap(a, b);
      // pair index in row-major upper triangle
      int idx = a * n - a * (a + 1) / 2 + (b - a - 1);
      code |= std::uint64_t{1} << idx;
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool isomorphic(const Graph& a, const Graph& b) {
  return a.num_vertices() == b.num_vertices() && a.num_edges() == b.num_edges() &&
         canonical_code(a) == canonical_code(b);
}

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.num_vertices() << " E={";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    os << (first ? "" : ",") << u << '-' << v;
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace beit
