#pragma once

#include <string>

#include "beit/graph.hpp"

namespace beit {

/// {"n": int, "edges": [[u, v], ...]} with 1-based vertices and u < v.
std::string graph_to_json(const Graph& g);

/// Rejects loops, duplicate edges and out-of-range endpoints with
/// ErrorKind::ParseError.
Graph graph_from_json(const std::string& text);

Graph read_graph_file(const std::string& path);

}  // namespace beit
