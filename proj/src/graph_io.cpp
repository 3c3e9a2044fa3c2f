#include "beit/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "beit/error.hpp"

namespace beit {

std::string graph_to_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.num_vertices();
  auto edges = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j.dump();
}

Graph graph_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  try {
    const int n = j.at("n").get<int>();
    if (n < 1 || n > Graph::kMaxVertices) {
      throw Error(ErrorKind::ParseError, "vertex count out of range");
    }
    Graph g(n);
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::ParseError, "edge must be [u, v]");
      const int u = e[0].get<int>(), v = e[1].get<int>();
      if (u >= v) throw Error(ErrorKind::ParseError, "edge endpoints must satisfy u < v");
      g.add_edge(u, v);
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    throw Error(ErrorKind::ParseError, e.what());
  }
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return graph_from_json(buffer.str());
}

}  // namespace beit
