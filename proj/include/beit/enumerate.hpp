#pragma once

#include <vector>

#include "beit/graph.hpp"

namespace beit {

/// One representative per isomorphism class of graphs on exactly n vertices
/// (n <= 6), ordered by edge count then canonical code. The representative is
/// the labeling realizing the canonical code.
std::vector<Graph> graphs_up_to_isomorphism(int n, bool connected_only);

/// Connected classes on 1..max_n vertices, smallest n first.
std::vector<Graph> connected_graphs(int max_n);

}  // namespace beit
