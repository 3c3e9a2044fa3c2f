#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace beit {

/// Bitmask over vertices; bit v-1 stands for vertex v.
using VertexSet = std::uint64_t;

/// Simple undirected graph on the vertices 1..n.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int num_vertices() const { return n_; }
  int num_edges() const;

  /// Throws InvalidGraph on loops, duplicates or out-of-range endpoints.
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;

  VertexSet neighbors(int v) const { return adj_[v - 1]; }
  int degree(int v) const;
  VertexSet all_vertices() const;

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  bool is_complete() const;
  bool is_connected() const;

  /// Connected components of the induced subgraph on `within`, each as a mask,
  /// ordered by smallest vertex.
  std::vector<VertexSet> components(VertexSet within) const;
  std::vector<VertexSet> components() const { return components(all_vertices()); }
  int count_components(VertexSet within) const;

  /// Induced subgraph on `vertices`, relabeled 1..k in increasing order.
  Graph induced(VertexSet vertices) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<VertexSet> adj_;
};

inline VertexSet vertex_bit(int v) { return VertexSet{1} << (v - 1); }

// ---- families and products -------------------------------------------------

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph edgeless_graph(int n);
Graph wheel_graph(int n);
Graph multipartite_graph(const std::vector<int>& parts);

/// Builds a family from a tag ("path", "cycle", "complete", "edgeless",
/// "wheel", "multipartite", "grb") and its integer parameters.
Graph build_family(const std::string& kind, const std::vector<int>& params);

/// Parses "name:p1,p2,..." and forwards to build_family.
Graph parse_family(const std::string& descriptor);

/// Apex vertex n+1 adjacent to every vertex of h.
Graph cone(const Graph& h);

/// Vertices of g2 are shifted by n1; every cross pair is an edge.
Graph join(const Graph& g1, const Graph& g2);

Graph disjoint_union(const Graph& g1, const Graph& g2);

/// Iterated join P_{r-b+2} * ... * P_{r+1}; (1,1) yields K_3.
Graph construct_grb(int r, int b);

// ---- combinatorial invariants ---------------------------------------------

struct CliqueVector {
  /// counts[i-1] = number of i-cliques, i = 1..n.
  std::vector<std::int64_t> counts;

  /// k_i, zero outside 1..n.
  std::int64_t k(int i) const;
};

constexpr int kCliqueCap = 12;
constexpr int kCutSetCap = 15;

CliqueVector clique_vector(const Graph& g);

struct VertexConnectivity {
  int value = 0;
  /// Set for complete graphs, where n-1 is returned by convention.
  bool by_convention = false;
};

VertexConnectivity vertex_connectivity(const Graph& g);

struct CutSet {
  VertexSet t = 0;
  std::vector<VertexSet> components;
  int c() const { return static_cast<int>(components.size()); }
};

/// Every T with the cut-point property, the empty set first, then by
/// increasing mask.
std::vector<CutSet> cut_point_sets(const Graph& g);

/// max over cut sets of n - |T| + c_T.
int krull_dimension(const Graph& g);

/// G_v: g plus every edge between two neighbors of v.
Graph neighborhood_completion(const Graph& g, int v);

bool is_simplicial(const Graph& g, int v);

/// Every biconnected block is a clique.
bool is_block_graph(const Graph& g);

/// Canonical code under vertex relabeling (n <= 8); equal codes iff
/// isomorphic.
std::uint64_t canonical_code(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

std::string describe(const Graph& g);

}  // namespace beit
