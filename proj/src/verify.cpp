#include "beit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <memory>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "beit/enumerate.hpp"
#include "beit/error.hpp"
#include "beit/formulas.hpp"

namespace beit {

bool InstanceReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

bool VerifyReport::pass() const {
  return std::all_of(instances.begin(), instances.end(), [](const InstanceReport& r) { return r.pass(); });
}

std::size_t VerifyReport::check_count() const {
  std::size_t k = 0;
  for (const auto& r : instances) k += r.checks.size();
  return k;
}

std::size_t VerifyReport::failure_count() const {
  std::size_t k = 0;
  for (const auto& r : instances)
    for (const auto& c : r.checks) k += c.pass ? 0 : 1;
  return k;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "cone-betti", "cone-depth",   "join-depth", "wheel",  "linear-strand",    "pd-lower",
      "extremal-transfer", "euler", "disconnected", "grb", "oracle-agreement", "all"};
  return names;
}

std::string entries_string(const BettiTable& t) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, v] : t.entries()) {
    os << (first ? "" : " ") << key.first << ',' << key.second << ':' << v;
    first = false;
  }
  return os.str();
}

namespace {

std::string extremal_string(const std::vector<ExtremalEntry>& ext) {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < ext.size(); ++k) {
    os << (k ? " " : "") << '(' << ext[k].i << ',' << ext[k].j << ',' << ext[k].value << ')';
  }
  os << '}';
  return os.str();
}

bool has_nontrivial_components(const Graph& g, int at_least) {
  int nontrivial = 0;
  for (VertexSet c : g.components()) nontrivial += (c & (c - 1)) ? 1 : 0;
  return nontrivial >= at_least;
}

class Runner {
 public:
  explicit Runner(const OracleOptions& options) : options_(options) {}

  VerifyReport run(const std::string& suite) {
    VerifyReport report;
    report.suite = suite;
    const std::map<std::string, void (Runner::*)()> table = {
        {"cone-betti", &Runner::cone_betti},
        {"cone-depth", &Runner::cone_depth},
        {"join-depth", &Runner::join_depth},
        {"wheel", &Runner::wheel},
        {"linear-strand", &Runner::linear_strand},
        {"pd-lower", &Runner::pd_lower},
        {"extremal-transfer", &Runner::extremal_transfer},
        {"euler", &Runner::euler},
        {"disconnected", &Runner::disconnected},
        {"grb", &Runner::grb},
        {"oracle-agreement", &Runner::oracle_agreement},
    };
    if (suite == "all") {
      for (const auto& [name, fn] : table) {
        suite_ = name;
        (this->*fn)();
      }
    } else {
      auto it = table.find(suite);
      if (it == table.end()) throw Error(ErrorKind::InvalidParameter, "unknown suite '" + suite + "'");
      suite_ = suite;
      (this->*(it->second))();
    }
    for (auto& [key, inst] : instances_) report.instances.push_back(std::move(inst));
    return report;
  }

 private:
  using Clock = std::chrono::steady_clock;

  const BettiTable& oracle(const Graph& g) { return oracle_with(g, options_); }

  const BettiTable& oracle_with(const Graph& g, const OracleOptions& o) {
    const std::string key = std::to_string(o.prime) + "/" + to_string(o.strategy) + "/" + describe(g);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    OracleOptions local = o;
    local.cap = std::max(o.cap, g.num_vertices());
    return cache_.emplace(key, betti_table(g, local)).first->second;
  }

  int depth(const Graph& g) { return 2 * g.num_vertices() - oracle(g).projective_dimension(); }

  void check(const std::string& instance, const std::string& name,
             const std::function<std::pair<std::string, std::string>()>& body) {
    Check c;
    c.name = name;
    const auto start = Clock::now();
    try {
      auto [expected, actual] = body();
      c.expected = std::move(expected);
      c.actual = std::move(actual);
      c.pass = c.expected == c.actual;
    } catch (const std::exception& e) {
      c.expected = "no error";
      c.actual = e.what();
      c.pass = false;
    }
    c.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    InstanceReport& r = instances_[suite_ + " " + instance];
    r.suite = suite_;
    r.instance = instance;
    r.checks.push_back(std::move(c));
  }

  static std::pair<std::string, std::string> ints(long long expected, long long actual) {
    return {std::to_string(expected), std::to_string(actual)};
  }

  static std::pair<std::string, std::string> truth(bool holds) {
    return {"true", holds ? "true" : "false"};
  }

  int cap() const { return options_.cap; }

  std::vector<Graph> non_complete_connected(int max_n) {
    std::vector<Graph> out;
    for (const Graph& h : connected_graphs(max_n))
      if (!h.is_complete()) out.push_back(h);
    return out;
  }

  std::vector<Graph> all_graphs(int min_n, int max_n) {
    std::vector<Graph> out;
    for (int n = std::max(1, min_n); n <= max_n; ++n) {
      auto level = graphs_up_to_isomorphism(n, false);
      out.insert(out.end(), level.begin(), level.end());
    }
    return out;
  }

  // ---- suites ---------------------------------------------------------------

  void cone_betti() {
    for (const Graph& h : non_complete_connected(cap() - 1)) {
      const std::string inst = describe(h);
      check(inst, "cone table", [&] {
        const BettiTable formula = betti_cone_formula(oracle(h), clique_vector(h), h.num_vertices());
        return std::make_pair(entries_string(formula), entries_string(oracle(cone(h))));
      });
    }
  }

  void cone_depth() {
    for (const Graph& h : all_graphs(2, cap() - 1)) {
      if (h.is_connected() && h.is_complete()) continue;
      const std::string inst = describe(h);
      const int n = h.num_vertices();
      check(inst, "cone depth", [&] {
        return ints(depth_cone(depth(h), n, h.is_connected()), depth(cone(h)));
      });
      if (!h.is_connected()) continue;
      check(inst, "cone cmdef", [&] {
        const int dim_h = krull_dimension(h);
        const Graph g = cone(h);
        const int cmdef_g = krull_dimension(g) - depth(g);
        return ints(cmdef_cone(dim_h, dim_h - depth(h), n), cmdef_g);
      });
      for (int q = 2; n + q <= cap(); ++q) {
        check(inst, "K_" + std::to_string(q) + " join depth and cmdef", [&] {
          const int dim_h = krull_dimension(h);
          const Graph g = join(complete_graph(q), h);
          const std::string expected = std::to_string(depth(h)) + "/" +
                                       std::to_string(cmdef_complete_join(dim_h, dim_h - depth(h), n, q));
          const std::string actual =
              std::to_string(depth(g)) + "/" + std::to_string(krull_dimension(g) - depth(g));
          return std::make_pair(expected, actual);
        });
      }
    }
  }

  void join_depth() {
    std::vector<Graph> factors;
    for (const Graph& g : all_graphs(2, cap() - 2))
      if (!g.is_complete()) factors.push_back(g);
    for (std::size_t a = 0; a < factors.size(); ++a) {
      for (std::size_t b = a; b < factors.size(); ++b) {
        Graph g1 = factors[a], g2 = factors[b];
        if (g1.num_vertices() + g2.num_vertices() > cap()) continue;
        // Orientation the join formulas expect: connected first; among two
        // disconnected factors the smaller first.
        if ((!g1.is_connected() && g2.is_connected()) ||
            (!g1.is_connected() && !g2.is_connected() && g2.num_vertices() < g1.num_vertices())) {
          std::swap(g1, g2);
        }
        const std::string inst = describe(g1) + " * " + describe(g2);
        check(inst, "join depth", [&] {
          const JoinFactor f1{depth(g1), g1.num_vertices(), g1.is_connected(), false};
          const JoinFactor f2{depth(g2), g2.num_vertices(), g2.is_connected(), false};
          return ints(depth_join(f1, f2), depth(join(g1, g2)));
        });
      }
    }
    // Complete multipartite graphs with every part >= 2.
    std::function<void(std::vector<int>&, int, int)> parts = [&](std::vector<int>& p, int min, int left) {
      if (p.size() >= 2) {
        std::string inst = "multipartite:";
        for (std::size_t k = 0; k < p.size(); ++k) inst += (k ? "," : "") + std::to_string(p[k]);
        const std::vector<int> copy = p;
        check(inst, "multipartite depth", [&, copy] {
          return ints(depth_multipartite(copy), depth(multipartite_graph(copy)));
        });
      }
      for (int s = min; s <= left; ++s) {
        p.push_back(s);
        parts(p, s, left - s);
        p.pop_back();
      }
    };
    std::vector<int> p;
    parts(p, 2, cap());
  }

  void wheel() {
    check("W_4", "oracle vs cone formula on C_4", [&] {
      const Graph c4 = cycle_graph(4);
      return std::make_pair(entries_string(betti_cone_formula(oracle(c4), clique_vector(c4), 4)),
                            entries_string(oracle(wheel_graph(4))));
    });
    check("W_4", "depth", [&] { return ints(depth_cone(depth(cycle_graph(4)), 4, true), depth(wheel_graph(4))); });
    for (int n = 5; n <= cap(); ++n) {
      const std::string inst = "W_" + std::to_string(n);
      check(inst, "closed form vs cone formula on C_" + std::to_string(n), [&] {
        const Graph c = cycle_graph(n);
        return std::make_pair(entries_string(wheel_betti(n)),
                              entries_string(betti_cone_formula(oracle(c), clique_vector(c), n)));
      });
      check(inst, "pd and reg", [&] {
        const BettiTable t = wheel_betti(n);
        return std::make_pair(std::to_string(n + 2) + "/" + std::to_string(n - 2),
                              std::to_string(t.projective_dimension()) + "/" + std::to_string(t.regularity()));
      });
      if (n + 1 <= cap()) {
        check(inst, "closed form vs oracle", [&] {
          return std::make_pair(entries_string(wheel_betti(n)), entries_string(oracle(wheel_graph(n))));
        });
      }
    }
  }

  void linear_strand() {
    for (const Graph& g : connected_graphs(cap())) {
      const std::string inst = describe(g);
      check(inst, "row j=1 is i*k_{i+1}", [&] {
        const CliqueVector k = clique_vector(g);
        const BettiTable& t = oracle(g);
        std::string expected, actual;
        for (int i = 1; i <= g.num_vertices(); ++i) {
          expected += std::to_string(i * k.k(i + 1)) + " ";
          actual += std::to_string(t.beta(i, 1)) + " ";
        }
        return std::make_pair(expected, actual);
      });
      // K_1 has J = 0 and pd 0; the criterion needs an edge.
      if (g.num_vertices() < 2) continue;
      check(inst, "beta_{p,p+1} != 0 iff complete", [&] {
        const BettiTable& t = oracle(g);
        const int p = t.projective_dimension();
        return std::make_pair(std::string(g.is_complete() ? "nonzero" : "zero"),
                              std::string(t.beta(p, 1) ? "nonzero" : "zero"));
      });
    }
  }

  void pd_lower() {
    for (const Graph& g : connected_graphs(cap())) {
      const std::string inst = describe(g);
      const int n = g.num_vertices();
      if (!g.is_complete()) {
        check(inst, "pd >= n-2+kappa", [&] {
          const int pd = oracle(g).projective_dimension();
          return truth(pd >= n - 2 + vertex_connectivity(g).value);
        });
      }
      check(inst, "pd >= n-1 and depth <= n+1", [&] {
        const int pd = oracle(g).projective_dimension();
        return truth(pd >= n - 1 && 2 * n - pd <= n + 1);
      });
      check(inst, "summary consistency", [&] {
        const BettiTable& t = oracle(g);
        const auto v = summary_violations(summarize(t, g), t);
        std::string joined;
        for (const auto& s : v) joined += s + "; ";
        return std::make_pair(std::string(), joined);
      });
    }
  }

  void extremal_transfer() {
    for (const Graph& h : non_complete_connected(cap() - 1)) {
      const std::string inst = describe(h);
      check(inst, "cone extremal = shifted extremal", [&] {
        return std::make_pair(extremal_string(extremal_transfer_cone(oracle(h).extremal())),
                              extremal_string(oracle(cone(h)).extremal()));
      });
    }
    for (const Graph& g : connected_graphs(cap())) {
      if (g.num_vertices() < 2) continue;
      const std::string inst = describe(g);
      check(inst, "extremal count bound", [&] {
        const BettiTable& t = oracle(g);
        const auto ext = t.extremal();
        if (g.is_complete()) return truth(ext.size() == 1 && ext[0].j == 1);
        const int reg = t.regularity();
        return truth(reg >= 2 && static_cast<int>(ext.size()) <= reg - 1);
      });
    }
  }

  void euler() {
    for (const Graph& g : connected_graphs(cap())) {
      const std::string inst = describe(g);
      check(inst, "Hilbert function = alternating Betti sum", [&] {
        const BettiTable& t = oracle(g);
        const PolyRing ring(g.num_vertices(), PrimeField(options_.prime), options_.order);
        const GroebnerBasis gb = binomial_edge_ideal_basis(ring, g);
        return truth(euler_check(t, gb, t.regularity() + t.projective_dimension()));
      });
    }
  }

  void disconnected() {
    for (const Graph& g : all_graphs(4, cap())) {
      if (!has_nontrivial_components(g, 2)) continue;
      const std::string inst = describe(g);
      check(inst, "beta_{p,p+1} = 0", [&] {
        const BettiTable& t = oracle(g);
        return ints(0, static_cast<long long>(t.beta(t.projective_dimension(), 1)));
      });
      check(inst, "depth = sum of component depths", [&] {
        std::vector<int> parts;
        BettiTable product(0, options_.prime);
        product.set(0, 0, 1);
        for (VertexSet c : g.components()) {
          const Graph comp = g.induced(c);
          parts.push_back(depth(comp));
          product = betti_disjoint_union(product, oracle(comp));
        }
        const std::string expected = std::to_string(depth_disjoint_union(parts)) + " | " + entries_string(product);
        const std::string actual = std::to_string(depth(g)) + " | " + entries_string(oracle(g));
        return std::make_pair(expected, actual);
      });
    }
  }

  void grb() {
    for (int r = 2; r <= 8; ++r) {
      for (int b = 1; b <= r - 1; ++b) {
        const std::string inst = "grb:" + std::to_string(r) + "," + std::to_string(b);
        check(inst, "profile invariants", [&] {
          const GrbProfile p = grb_profile(r, b);
          bool ok = p.depth + p.pd == 2 * p.n && static_cast<int>(p.extremal.size()) == b;
          for (int k = 0; k < static_cast<int>(p.extremal.size()); ++k) {
            const ExtremalEntry& e = p.extremal[static_cast<std::size_t>(k)];
            ok = ok && e.value == 1 && e.i == p.pd - k && e.j == r - b + 1 + k;
          }
          return truth(ok);
        });
        check(inst, "construction size", [&] { return ints(grb_profile(r, b).n, construct_grb(r, b).num_vertices()); });
        check(inst, "depth via join chain", [&] {
          // Paths P_m with m >= 3 are connected, non-complete and CM of depth m + 1.
          JoinFactor acc{r - b + 3, r - b + 2, true, false};
          for (int m = r - b + 3; m <= r + 1; ++m) {
            const int d = depth_join(acc, JoinFactor{m + 1, m, true, false});
            acc = JoinFactor{d, acc.n + m, true, false};
          }
          return ints(grb_profile(r, b).depth, acc.depth);
        });
        if (b == 1) {
          check(inst, "profile vs path table", [&] {
            const GrbProfile p = grb_profile(r, 1);
            const BettiTable t = path_betti(r + 1);
            return std::make_pair(std::to_string(p.pd) + extremal_string(p.extremal),
                                  std::to_string(t.projective_dimension()) + extremal_string(t.extremal()));
          });
          if (r + 1 <= cap()) {
            check(inst, "path table vs oracle", [&] {
              return std::make_pair(entries_string(path_betti(r + 1)), entries_string(oracle(path_graph(r + 1))));
            });
            check(inst, "profile vs oracle", [&] {
              const GrbProfile p = grb_profile(r, 1);
              const Graph g = construct_grb(r, 1);
              const BettiTable& t = oracle(g);
              const std::string expected = std::to_string(p.n) + "/" + std::to_string(p.pd) + "/" +
                                           std::to_string(p.depth) + extremal_string(p.extremal);
              const std::string actual = std::to_string(g.num_vertices()) + "/" +
                                         std::to_string(t.projective_dimension()) + "/" +
                                         std::to_string(depth(g)) + extremal_string(t.extremal());
              return std::make_pair(expected, actual);
            });
          }
        }
      }
    }
  }

  void oracle_agreement() {
    OracleOptions syz = options_;
    syz.strategy = OracleStrategy::Syzygy;
    OracleOptions koszul = options_;
    koszul.strategy = OracleStrategy::Koszul;
    OracleOptions other = koszul;
    other.prime = options_.prime == 101 ? kDefaultPrime : 101;
    for (const Graph& g : all_graphs(1, std::min(cap() - 1, 4))) {
      const std::string inst = describe(g);
      check(inst, "koszul = syzygy", [&] {
        return std::make_pair(entries_string(oracle_with(g, koszul)), entries_string(oracle_with(g, syz)));
      });
      check(inst, "prime " + std::to_string(koszul.prime) + " = prime " + std::to_string(other.prime), [&] {
        return std::make_pair(entries_string(oracle_with(g, koszul)), entries_string(oracle_with(g, other)));
      });
    }
  }

  OracleOptions options_;
  std::string suite_;
  std::map<std::string, InstanceReport> instances_;
  std::unordered_map<std::string, BettiTable> cache_;
};

}  // namespace

VerifyReport run_suite(const std::string& suite, const OracleOptions& options) {
  return Runner(options).run(suite);
}

std::string report_text(const VerifyReport& r, bool timing) {
  std::ostringstream os;
  std::map<std::string, std::pair<std::size_t, std::size_t>> per_suite;  // instances, failures
  for (const InstanceReport& inst : r.instances) {
    auto& [count, failed] = per_suite[inst.suite];
    ++count;
    failed += inst.pass() ? 0 : 1;
    os << (inst.pass() ? "PASS " : "FAIL ") << inst.suite << "  " << inst.instance << "  ("
       << inst.checks.size() << (inst.checks.size() == 1 ? " check" : " checks") << ")\n";
    for (const Check& c : inst.checks) {
      if (!c.pass) os << "    " << c.name << ": expected [" << c.expected << "] got [" << c.actual << "]\n";
      if (timing) os << "    " << c.name << ": " << c.elapsed_ms << " ms\n";
    }
  }
  for (const auto& [suite, counts] : per_suite) {
    os << suite << ": " << counts.first << " instances, " << counts.second << " failing\n";
  }
  os << (r.pass() ? "PASS" : "FAIL") << " " << r.suite << ": " << r.instances.size() << " instances, "
     << r.check_count() << " checks, " << r.failure_count() << " failures\n";
  return os.str();
}

std::string report_json(const VerifyReport& r, bool timing) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["pass"] = r.pass();
  j["instance_count"] = r.instances.size();
  j["check_count"] = r.check_count();
  j["failure_count"] = r.failure_count();
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const InstanceReport& inst : r.instances) {
    nlohmann::ordered_json ij;
    ij["suite"] = inst.suite;
    ij["instance"] = inst.instance;
    ij["pass"] = inst.pass();
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const Check& c : inst.checks) {
      nlohmann::ordered_json cj;
      cj["name"] = c.name;
      cj["expected"] = c.expected;
      cj["actual"] = c.actual;
      cj["pass"] = c.pass;
      if (timing) cj["elapsed_ms"] = c.elapsed_ms;
      checks.push_back(std::move(cj));
    }
    ij["checks"] = std::move(checks);
    list.push_back(std::move(ij));
  }
  j["instances"] = std::move(list);
  return j.dump(2) + "\n";
}

}  // namespace beit
