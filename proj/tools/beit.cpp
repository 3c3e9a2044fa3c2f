// beit: command-line front end for the binomial edge ideal toolkit.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "beit/error.hpp"
#include "beit/formulas.hpp"
#include "beit/graph.hpp"
#include "beit/graph_io.hpp"
#include "beit/oracle.hpp"
#include "beit/verify.hpp"

namespace {

using beit::BettiTable;
using beit::Error;
using beit::ErrorKind;
using beit::Graph;
using json = nlohmann::ordered_json;

struct GraphSource {
  std::string family;
  std::string file;

  void attach(CLI::App* cmd) {
    auto* f = cmd->add_option("--family", family, "graph family, e.g. wheel:5, multipartite:2,3, grb:3,2");
    auto* p = cmd->add_option("--file", file, "graph JSON file {\"n\":..,\"edges\":[[u,v],..]}");
    f->excludes(p);
  }

  Graph load() const {
    if (!family.empty()) return beit::parse_family(family);
    if (!file.empty()) return beit::read_graph_file(file);
    throw Error(ErrorKind::InvalidParameter, "give --family or --file");
  }

  std::string label() const { return family.empty() ? file : family; }
};

struct Global {
  std::uint32_t prime = beit::kDefaultPrime;
  bool extended = false;
  std::string strategy = "koszul";

  beit::OracleOptions oracle() const {
    beit::OracleOptions o;
    o.prime = prime;
    o.cap = extended ? beit::kExtendedOracleCap : beit::kDefaultOracleCap;
    o.strategy = strategy == "syzygy" ? beit::OracleStrategy::Syzygy : beit::OracleStrategy::Koszul;
    return o;
  }
};

// Family tag and parameters of a --family descriptor.
std::pair<std::string, std::vector<int>> split_family(const std::string& descriptor) {
  const auto colon = descriptor.find(':');
  std::vector<int> params;
  if (colon != std::string::npos) {
    std::stringstream ss(descriptor.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) params.push_back(std::stoi(item));
  }
  return {descriptor.substr(0, colon), params};
}

struct FormulaResult {
  std::string source;
  std::optional<BettiTable> table;
  std::optional<int> depth;
};

// Closed forms that apply to g, most specific first.
FormulaResult formula_for(const Graph& g, const std::string& family, const beit::OracleOptions& options) {
  const int n = g.num_vertices();
  if (!family.empty()) {
    const auto [kind, params] = split_family(family);
    if (kind == "wheel" && params.size() == 1 && params[0] >= 5) {
      return {"wheel closed form", beit::wheel_betti(params[0]), std::nullopt};
    }
    if (kind == "path" && params.size() == 1) return {"complete intersection", beit::path_betti(params[0]), std::nullopt};
    if (kind == "grb" && params.size() == 2 && params[1] <= params[0] - 1) {
      return {"G_{r,b} profile", std::nullopt, beit::grb_profile(params[0], params[1]).depth};
    }
    if (kind == "multipartite" && params.size() >= 2 &&
        std::all_of(params.begin(), params.end(), [](int p) { return p >= 2; })) {
      return {"complete multipartite", std::nullopt, beit::depth_multipartite(params)};
    }
  }
  // A dominating vertex makes g a cone over the rest.
  for (int v = n; v >= 1 && n >= 3; --v) {
    if (g.degree(v) != n - 1) continue;
    const Graph h = g.induced(g.all_vertices() & ~beit::vertex_bit(v));
    if (h.is_complete()) break;
    if (h.num_vertices() > options.cap) break;
    return {"cone formula over the oracle table of G - " + std::to_string(v),
            beit::betti_cone_formula(beit::betti_table(h, options), beit::clique_vector(h), n - 1), std::nullopt};
  }
  return {"", std::nullopt, std::nullopt};
}

std::string extremal_text(const std::vector<beit::ExtremalEntry>& ext) {
  std::string out;
  for (const auto& e : ext) {
    out += (out.empty() ? "" : " ") + std::string("(") + std::to_string(e.i) + "," + std::to_string(e.i + e.j) +
           ")=" + std::to_string(e.value);
  }
  return out.empty() ? "none" : out;
}

json extremal_json(const std::vector<beit::ExtremalEntry>& ext) {
  json a = json::array();
  for (const auto& e : ext) a.push_back({{"i", e.i}, {"d", e.i + e.j}, {"beta", e.value}});
  return a;
}

void report_table(const std::string& source, const BettiTable& t, const Graph& g, bool as_json, json& out) {
  const beit::InvariantSummary s = beit::summarize(t, g);
  if (as_json) {
    out["source"] = source;
    out["pd"] = s.pd;
    out["reg"] = s.reg;
    out["depth"] = s.depth;
    out["dim"] = s.dim;
    out["cmdef"] = s.cmdef;
    out["extremal"] = extremal_json(s.extremal);
    out["table"] = json::parse(beit::to_json(t));
    return;
  }
  std::cout << "source: " << source << "\n"
            << "pd: " << s.pd << "\nreg: " << s.reg << "\ndepth: " << s.depth << "\ndim: " << s.dim
            << "\ncmdef: " << s.cmdef << "\nextremal: " << extremal_text(s.extremal) << "\n"
            << beit::render_diagram(t);
  for (const auto& v : beit::summary_violations(s, t)) std::cout << "violation: " << v << "\n";
}

int cmd_invariants(const GraphSource& src, const Global& global, bool formula, bool oracle, bool predict,
                   bool as_json) {
  const auto options = global.oracle();
  if (!formula && !oracle && !predict) oracle = true;
  json out;
  std::vector<json> sections;

  if (predict) {
    const auto [kind, params] = split_family(src.family);
    if (kind != "grb" || params.size() != 2) {
      throw Error(ErrorKind::InvalidParameter, "--predict needs --family grb:r,b");
    }
    const beit::GrbProfile p = beit::grb_profile(params[0], params[1]);
    json j;
    j["source"] = "G_{r,b} prediction";
    j["r"] = p.r;
    j["b"] = p.b;
    j["n"] = p.n;
    j["pd"] = p.pd;
    j["depth"] = p.depth;
    j["reg"] = p.reg;
    j["extremal"] = extremal_json(p.extremal);
    if (as_json) {
      sections.push_back(j);
    } else {
      std::cout << "source: G_{r,b} prediction (r=" << p.r << ", b=" << p.b << ")\n"
                << "n: " << p.n << "\npd: " << p.pd << "\ndepth: " << p.depth << "\nreg: " << p.reg
                << "\nextremal: " << extremal_text(p.extremal) << " (" << p.extremal.size() << " entries)\n";
    }
    if (!formula && !oracle) {
      if (as_json) std::cout << sections.front().dump(2) << "\n";
      return 0;
    }
  }

  const Graph g = src.load();
  out["graph"] = json::parse(beit::graph_to_json(g));
  if (!as_json) {
    std::cout << "graph: " << src.label() << "  " << beit::describe(g) << "\n";
    const auto k = beit::clique_vector(g);
    std::cout << "linear strand from cliques:";
    for (int i = 1; i <= g.num_vertices(); ++i) {
      if (k.k(i + 1)) std::cout << " beta_{" << i << "," << i + 1 << "}=" << i * k.k(i + 1);
    }
    std::cout << "\n";
  }

  if (formula) {
    const FormulaResult f = formula_for(g, src.family, options);
    json j;
    if (f.table) {
      if (!as_json) std::cout << "-- formula\n";
      report_table(f.source, *f.table, g, as_json, j);
    } else if (f.depth) {
      const int dim = beit::krull_dimension(g);
      j["source"] = f.source;
      j["depth"] = *f.depth;
      j["dim"] = dim;
      j["cmdef"] = dim - *f.depth;
      j["pd"] = 2 * g.num_vertices() - *f.depth;
      if (!as_json) {
        std::cout << "-- formula\nsource: " << f.source << "\ndepth: " << *f.depth << "\npd: "
                  << 2 * g.num_vertices() - *f.depth << "\ndim: " << dim << "\ncmdef: " << dim - *f.depth << "\n";
      }
    } else {
      j["source"] = "none";
      if (!as_json) std::cout << "-- formula\nno closed form applies to this graph\n";
    }
    sections.push_back(j);
  }

  if (oracle) {
    if (global.extended) {
      std::cerr << "warning: --extended raises the oracle cap to n = " << beit::kExtendedOracleCap
                << "; 6-vertex graphs can take minutes\n";
    }
    const BettiTable t = beit::betti_table(g, options);
    json j;
    if (!as_json) std::cout << "-- oracle\n";
    report_table(std::string("oracle (") + beit::to_string(options.strategy) + ", p=" +
                     std::to_string(options.prime) + ")",
                 t, g, as_json, j);
    sections.push_back(j);
  }

  if (as_json) {
    out["results"] = sections;
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& suite, const Global& global, bool as_json, bool timing) {
  if (global.extended) {
    std::cerr << "warning: --extended raises the oracle cap to n = " << beit::kExtendedOracleCap
              << "; the full suite can take a long time\n";
  }
  const beit::VerifyReport r = beit::run_suite(suite, global.oracle());
  std::cout << (as_json ? beit::report_json(r, timing) : beit::report_text(r, timing));
  return r.pass() ? 0 : 1;
}

int cmd_export(const GraphSource& src, const Global& global, const std::string& format, const std::string& output,
               bool formula) {
  if (format != "json" && format != "diagram-text" && format != "csv") {
    throw Error(ErrorKind::UnknownFormat, "unknown export format '" + format + "' (json, diagram-text, csv)");
  }
  const Graph g = src.load();
  const auto options = global.oracle();
  BettiTable t;
  if (formula) {
    FormulaResult f = formula_for(g, src.family, options);
    if (!f.table) throw Error(ErrorKind::InvalidParameter, "no closed-form table applies to this graph");
    t = *f.table;
  } else {
    t = beit::betti_table(g, options);
  }
  std::string text = format == "json" ? beit::to_json(t) + "\n" : format == "csv" ? beit::to_csv(t) : beit::render_diagram(t);
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(output, std::ios::binary);
    if (!f) throw Error(ErrorKind::InvalidParameter, "cannot write " + output);
    f << text;
  }
  return 0;
}

int cmd_cross_check(const GraphSource& src, const Global& global, std::vector<std::uint32_t> primes) {
  const Graph g = src.load();
  if (primes.size() != 2) throw Error(ErrorKind::InvalidParameter, "--primes takes exactly two primes");
  auto a = global.oracle(), b = global.oracle();
  a.prime = primes[0];
  b.prime = primes[1];
  const BettiTable ta = beit::betti_table(g, a), tb = beit::betti_table(g, b);
  const auto diff = beit::diff_tables(ta, tb);
  std::cout << beit::describe(g) << ": p=" << primes[0] << " vs p=" << primes[1] << ": "
            << (diff.empty() ? "identical" : "DIFFERENT") << "\n";
  for (const auto& d : diff) std::cout << "  " << d << "\n";
  return diff.empty() ? 0 : 1;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::TooLarge:
      return 3;
    case ErrorKind::IncompleteTable:
      return 1;
    default:
      return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"beit: homological invariants of binomial edge ideals"};
  app.require_subcommand(1);
  app.fallthrough();
  Global global;
  app.add_option("--prime", global.prime, "field characteristic (default 32003)")->envname("BEIT_PRIME");
  app.add_flag("--extended", global.extended, "raise the oracle cap from 5 to 6 vertices");
  app.add_option("--strategy", global.strategy, "oracle route")->check(CLI::IsMember({"koszul", "syzygy"}));

  GraphSource inv_src;
  bool formula = false, oracle = false, predict = false, as_json = false;
  auto* inv = app.add_subcommand("invariants", "depth, dim, cmdef, pd, reg and extremal Betti numbers");
  inv_src.attach(inv);
  inv->add_flag("--formula", formula, "closed-form values where a formula applies");
  inv->add_flag("--oracle", oracle, "compute the Betti table directly");
  inv->add_flag("--predict", predict, "predicted profile of grb:r,b");
  inv->add_flag("--json", as_json, "machine-readable output");

  std::string suite;
  bool verify_json = false, timing = false;
  auto* ver = app.add_subcommand("verify", "formula-vs-oracle suites");
  ver->add_option("suite", suite, "suite tag")->required()->check(CLI::IsMember(beit::suite_names()));
  ver->add_flag("--json", verify_json, "machine-readable report");
  ver->add_flag("--timing", timing, "include wall time per check (output no longer byte-stable)");

  GraphSource exp_src;
  std::string format = "json", output;
  bool exp_formula = false;
  auto* exp = app.add_subcommand("export", "write a Betti table as json, diagram-text or csv");
  exp_src.attach(exp);
  exp->add_option("--format", format, "json | diagram-text | csv");
  exp->add_option("--output,-o", output, "output path (default stdout)");
  exp->add_flag("--formula", exp_formula, "export the closed-form table instead of the oracle table");

  GraphSource cc_src;
  std::vector<std::uint32_t> primes{beit::kDefaultPrime, 101};
  auto* cc = app.add_subcommand("cross-check", "compare oracle tables over two primes");
  cc_src.attach(cc);
  cc->add_option("--primes", primes, "two primes")->delimiter(',');

  GraphSource graph_src;
  auto* gr = app.add_subcommand("graph", "print a graph as JSON");
  graph_src.attach(gr);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!beit::is_prime(global.prime)) {
      throw Error(ErrorKind::InvalidParameter, std::to_string(global.prime) + " is not a prime");
    }
    if (*inv) return cmd_invariants(inv_src, global, formula, oracle, predict, as_json);
    if (*ver) return cmd_verify(suite, global, verify_json, timing);
    if (*exp) return cmd_export(exp_src, global, format, output, exp_formula);
    if (*cc) return cmd_cross_check(cc_src, global, primes);
    if (*gr) {
      std::cout << beit::graph_to_json(graph_src.load()) << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
