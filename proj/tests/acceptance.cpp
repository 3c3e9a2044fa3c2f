// Acceptance run: one PASS/FAIL line per criterion. `--extended` adds the
// 6-vertex oracle check of the wheel W_5 (about five seconds on one core).

#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "beit/enumerate.hpp"
#include "beit/formulas.hpp"
#include "beit/oracle.hpp"
#include "beit/verify.hpp"

using namespace beit;

namespace {

struct Criterion {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  template <class A, class B>
  void equal(const A& expected, const B& actual, const std::string& what) {
    if (!(expected == actual)) {
      std::ostringstream os;
      os << what << ": expected " << expected << ", got " << actual;
      failures.push_back(os.str());
    }
  }
};

int depth_of(const Graph& g, const BettiTable& t) { return 2 * g.num_vertices() - t.projective_dimension(); }

std::string ext_string(const std::vector<ExtremalEntry>& ext) {
  std::string s;
  for (const auto& e : ext) s += "(" + std::to_string(e.i) + "," + std::to_string(e.j) + "," + std::to_string(e.value) + ")";
  return s;
}

std::vector<Graph> non_complete_connected(int max_n) {
  std::vector<Graph> out;
  for (const Graph& g : connected_graphs(max_n))
    if (!g.is_complete()) out.push_back(g);
  return out;
}

void wheel_golden(Criterion& c) {
  const BettiTable w = wheel_betti(5);
  const std::vector<std::tuple<int, int, std::uint64_t>> golden = {
      {0, 0, 1},   {1, 2, 10},  {2, 3, 10}, {2, 4, 25}, {3, 5, 50}, {4, 6, 28},  {5, 7, 4},
      {2, 5, 4},   {3, 6, 33},  {4, 7, 74}, {5, 8, 70}, {6, 9, 30}, {7, 10, 5}};
  BettiTable expected(6);
  for (auto [i, d, v] : golden) expected.set(i, d, v);
  c.equal(entries_string(expected), entries_string(w), "wheel_betti(5)");
  c.equal(7, w.projective_dimension(), "pd");
  c.equal(3, w.regularity(), "reg");
}

void wheel_oracle(Criterion& c) {
  OracleOptions o;
  o.cap = kExtendedOracleCap;
  c.equal(entries_string(wheel_betti(5)), entries_string(betti_table(wheel_graph(5), o)), "oracle(W_5)");
}

void cone_formula(Criterion& c) {
  const auto hs = non_complete_connected(4);
  c.equal(6u, hs.size(), "connected non-complete graphs on <= 4 vertices");
  for (const Graph& h : hs) {
    const BettiTable f = betti_cone_formula(betti_table(h), clique_vector(h), h.num_vertices());
    c.equal(entries_string(betti_table(cone(h))), entries_string(f), "cone over " + describe(h));
  }
  const Graph diamond = cone(path_graph(3));
  const BettiTable t = betti_table(diamond);
  c.equal(5u, t.beta(1, 1), "diamond beta_{1,2}");
  c.equal(4u, t.beta(2, 1), "diamond beta_{2,3}");
  c.equal(3u, t.beta(2, 2), "diamond beta_{2,4}");
  const InvariantSummary s = summarize(t, diamond);
  c.equal(4, s.depth, "diamond depth");
  c.equal(5, s.dim, "diamond dim");
  c.equal(1, s.cmdef, "diamond cmdef");
}

void depth_formulas(Criterion& c) {
  const Graph c4 = cycle_graph(4), k23 = multipartite_graph({2, 3}), star = cone(edgeless_graph(3));
  c.equal(4, depth_multipartite({2, 2}), "depth_multipartite(2,2)");
  c.equal(4, depth_of(c4, betti_table(c4)), "oracle depth C_4");
  c.equal(4, depth_multipartite({2, 3}), "depth_multipartite(2,3)");
  c.equal(4, depth_of(k23, betti_table(k23)), "oracle depth K_{2,3}");
  c.equal(5, depth_cone(6, 3, false), "depth_cone(edgeless(3))");
  c.equal(5, depth_of(star, betti_table(star)), "oracle depth K_{1,3}");
}

void structural_sweep(Criterion& c) {
  const auto graphs = connected_graphs(5);
  c.equal(31u, graphs.size(), "connected graphs on <= 5 vertices");
  for (const Graph& g : graphs) {
    const std::string name = describe(g);
    const int n = g.num_vertices();
    const BettiTable t = betti_table(g);
    const InvariantSummary s = summarize(t, g);
    c.expect(summary_violations(s, t).empty(), name + ": summary violations");
    c.equal(2 * n, s.depth + s.pd, name + ": depth + pd");
    if (!g.is_complete()) {
      c.expect(s.pd >= n - 2 + vertex_connectivity(g).value, name + ": pd >= n-2+kappa");
    }
    c.expect(s.depth <= n + 1, name + ": depth <= n+1");
    const CliqueVector k = clique_vector(g);
    for (int i = 1; i <= n; ++i) c.equal(static_cast<std::uint64_t>(i * k.k(i + 1)), t.beta(i, 1), name + ": linear strand");
    if (n >= 2) c.equal(g.is_complete(), t.beta(s.pd, 1) != 0, name + ": beta_{p,p+1} != 0 iff complete");
    const PolyRing ring(n);
    c.expect(euler_check(t, binomial_edge_ideal_basis(ring, g), s.reg + s.pd), name + ": Euler check");
  }
}

void disconnected_sweep(Criterion& c) {
  const Graph k2 = complete_graph(2), p3 = path_graph(3), k3 = complete_graph(3);
  for (const auto& [a, b] : std::vector<std::pair<Graph, Graph>>{{k2, k2}, {k2, p3}, {k2, k3}}) {
    const Graph g = disjoint_union(a, b);
    const BettiTable t = betti_table(g);
    const std::string name = describe(g);
    c.equal(0u, t.beta(t.projective_dimension(), 1), name + ": beta_{p,p+1}");
    const int sum = depth_disjoint_union({depth_of(a, betti_table(a)), depth_of(b, betti_table(b))});
    c.equal(sum, depth_of(g, t), name + ": depth = sum of component depths");
  }
}

void extremal_transfer(Criterion& c) {
  for (const Graph& h : non_complete_connected(4)) {
    c.equal(ext_string(extremal_transfer_cone(betti_table(h).extremal())), ext_string(betti_table(cone(h)).extremal()),
            "extremal of cone over " + describe(h));
  }
}

void grb_profiles(Criterion& c) {
  const GrbProfile p = grb_profile(2, 1);
  const Graph g = construct_grb(2, 1);
  const BettiTable t = betti_table(g);
  c.equal(p.n, g.num_vertices(), "grb(2,1) n");
  c.equal(p.pd, t.projective_dimension(), "grb(2,1) pd");
  c.equal(p.depth, depth_of(g, t), "grb(2,1) depth");
  c.equal(p.reg, t.regularity(), "grb(2,1) reg");
  c.equal(ext_string(p.extremal), ext_string(t.extremal()), "grb(2,1) extremal");
  c.equal(entries_string(path_betti(3)), entries_string(t), "grb(2,1) table");
  for (int r = 2; r <= 8; ++r) {
    for (int b = 1; b < r; ++b) {
      const GrbProfile q = grb_profile(r, b);
      const std::string name = "grb(" + std::to_string(r) + "," + std::to_string(b) + ")";
      c.equal(b * r - b * (b - 3) / 2, q.n, name + " n");
      c.equal((2 * b - 1) * r - (b - 1) * (b - 3), q.pd, name + " pd");
      c.equal(r - b + 3, q.depth, name + " depth");
      c.equal(2 * q.n, q.depth + q.pd, name + " depth + pd");
      c.equal(static_cast<std::size_t>(b), q.extremal.size(), name + " extremal count");
      for (const auto& e : q.extremal) c.equal(1u, e.value, name + " extremal value");
      c.equal(q.n, construct_grb(r, b).num_vertices(), name + " construction size");
    }
  }
}

void oracle_consistency(Criterion& c) {
  OracleOptions syz;
  syz.strategy = OracleStrategy::Syzygy;
  OracleOptions small;
  small.prime = 101;
  std::size_t count = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const Graph& g : graphs_up_to_isomorphism(n, false)) {
      ++count;
      const BettiTable k = betti_table(g);
      c.equal(entries_string(k), entries_string(betti_table(g, syz)), describe(g) + ": koszul vs syzygy");
      c.equal(entries_string(k), entries_string(betti_table(g, small)), describe(g) + ": p=32003 vs p=101");
    }
  }
  c.equal(18u, count, "graphs on <= 4 vertices");
}

}  // namespace

int main(int argc, char** argv) {
  bool extended = false;
  for (int k = 1; k < argc; ++k) extended = extended || std::strcmp(argv[k], "--extended") == 0;

  std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
      {"1 wheel golden table", wheel_golden},
      {"2 cone formula equals oracle", cone_formula},
      {"3 depth formulas at desk scale", depth_formulas},
      {"4 structural sweep, connected n <= 5", structural_sweep},
      {"5 disconnected sweep", disconnected_sweep},
      {"6 extremal transfer", extremal_transfer},
      {"7 G_{r,b} profile", grb_profiles},
      {"8 oracle self-consistency", oracle_consistency},
  };
  if (extended) criteria.insert(criteria.begin() + 1, {"1 wheel golden table vs oracle(W_5)", wheel_oracle});

  int failed = 0;
  for (auto& [name, run] : criteria) {
    Criterion c;
    try {
      run(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    std::cout << (c.failures.empty() ? "PASS" : "FAIL") << "  criterion " << name << "\n";
    for (const auto& f : c.failures) std::cout << "      " << f << "\n";
    failed += c.failures.empty() ? 0 : 1;
  }
  std::cout << (failed ? "FAILED " : "all criteria passed") << (failed ? std::to_string(failed) + " criteria" : "")
            << "\n";
  return failed ? 1 : 0;
}
