#include "beit/enumerate.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "beit/error.hpp"

namespace beit {

namespace {

// Inverse of the upper-triangle pair indexing used by canonical_code.
Graph decode(int n, std::uint64_t code) {
  Graph g(n);
  int idx = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b, ++idx)
      if (code >> idx & 1) g.add_edge(a + 1, b + 1);
  return g;
}

}  // namespace

std::vector<Graph> graphs_up_to_isomorphism(int n, bool connected_only) {
  if (n < 1 || n > 6) throw Error(ErrorKind::InvalidParameter, "enumeration supports 1 <= n <= 6");
  const int pairs = n * (n - 1) / 2;
  std::set<std::tuple<int, std::uint64_t>> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    Graph g = decode(n, mask);
    if (connected_only && !g.is_connected()) continue;
    seen.emplace(g.num_edges(), canonical_code(g));
  }
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (const auto& [edges, code] : seen) out.push_back(decode(n, code));
  return out;
}

std::vector<Graph> connected_graphs(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto level = graphs_up_to_isomorphism(n, true);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace beit
