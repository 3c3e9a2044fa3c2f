#include "beit/oracle.hpp"

#include "beit/error.hpp"

namespace beit {

const char* to_string(OracleStrategy s) {
  return s == OracleStrategy::Koszul ? "koszul" : "syzygy";
}

BettiTable betti_table(const Graph& g, const OracleOptions& options) {
  if (g.num_vertices() > options.cap) {
    throw Error(ErrorKind::TooLarge, "graph has " + std::to_string(g.num_vertices()) +
                                         " vertices; the oracle cap is n = " +
                                         std::to_string(options.cap));
  }
  const PrimeField field(options.prime);
  if (options.strategy == OracleStrategy::Syzygy) {
    return syzygy_betti_table(g, field, options.syzygy_box);
  }
  const PolyRing ring(g.num_vertices(), field, options.order);
  return koszul_betti_table(binomial_edge_ideal_basis(ring, g), options.threads);
}

InvariantSummary summarize(const BettiTable& t, const Graph& g) {
  if (!t.is_complete()) throw Error(ErrorKind::IncompleteTable, "summary needs a certified table");
  InvariantSummary s;
  s.n = g.num_vertices();
  s.pd = t.projective_dimension();
  s.depth = 2 * s.n - s.pd;
  s.reg = t.regularity();
  s.dim = krull_dimension(g);
  s.cmdef = s.dim - s.depth;
  s.extremal = t.extremal();
  return s;
}

std::vector<std::string> summary_violations(const InvariantSummary& s, const BettiTable& t) {
  std::vector<std::string> out;
  if (s.depth + s.pd != 2 * s.n) out.push_back("depth + pd != 2n");
  if (s.cmdef < 0) out.push_back("negative Cohen-Macaulay defect");
  if (t.get(0, 0) != 1) out.push_back("beta_{0,0} != 1");
  for (const auto& [key, v] : t.entries()) {
    if (key.first == 0 && key.second != 0) out.push_back("nonzero beta_{0,d} with d > 0");
    if (key.first >= 1 && key.second <= key.first) out.push_back("entry with d <= i");
  }
  for (const ExtremalEntry& e : s.extremal) {
    for (const auto& [key, v] : t.entries()) {
      const int r = key.first, j = key.second - key.first;
      if (r >= e.i && j >= e.j && (r != e.i || j != e.j)) {
        out.push_back("extremal (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                      ") is not a corner");
      }
    }
  }
  if (s.reg == 2 && s.extremal.size() != 1) out.push_back("reg = 2 without a unique extremal entry");
  return out;
}

namespace {

// C(a, b) as a signed 128-bit value; 0 outside 0 <= b <= a.
__int128 binomial(long a, long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  __int128 r = 1;
  for (long k = 1; k <= b; ++k) r = r * (a - b + k) / k;
  return r;
}

}  // namespace

bool euler_check(const BettiTable& t, const GroebnerBasis& gb, int d_max) {
  if (!t.is_complete()) {
    throw Error(ErrorKind::IncompleteTable, "Euler check needs a certified table");
  }
  const long vars = gb.ring().num_vars();
  for (int d = 0; d <= d_max; ++d) {
    __int128 predicted = 0;
    for (const auto& [key, beta] : t.entries()) {
      const __int128 term = static_cast<__int128>(beta) * binomial(d - key.second + vars - 1, vars - 1);
      predicted += (key.first % 2 == 0) ? term : -term;
    }
    if (predicted != static_cast<__int128>(hilbert_function(gb, d))) return false;
  }
  return true;
}

}  // namespace beit
