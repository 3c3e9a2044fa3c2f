#include <doctest.h>

#include "beit/enumerate.hpp"
#include "beit/error.hpp"
#include "beit/oracle.hpp"

using namespace beit;

namespace {

BettiTable table(std::initializer_list<std::tuple<int, int, std::uint64_t>> entries, int n) {
  BettiTable t(n, kDefaultPrime);
  for (auto [i, d, v] : entries) t.set(i, d, v);
  return t;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("small tables") {
  CHECK(betti_table(complete_graph(2)).same_entries(table({{0, 0, 1}, {1, 2, 1}}, 2)));
  CHECK(betti_table(path_graph(3)).same_entries(table({{0, 0, 1}, {1, 2, 2}, {2, 4, 1}}, 3)));
  CHECK(betti_table(complete_graph(3)).same_entries(table({{0, 0, 1}, {1, 2, 3}, {2, 3, 2}}, 3)));
  CHECK(betti_table(edgeless_graph(3)).same_entries(table({{0, 0, 1}}, 3)));
  CHECK(betti_table(edgeless_graph(1)).same_entries(table({{0, 0, 1}}, 1)));
  // Eagon-Northcott: 2-minors of a 2 x 4 matrix.
  CHECK(betti_table(complete_graph(4)).same_entries(table({{0, 0, 1}, {1, 2, 6}, {2, 3, 8}, {3, 4, 3}}, 4)));
  // Four quadrics in a regular sequence.
  CHECK(betti_table(path_graph(5)).same_entries(
      table({{0, 0, 1}, {1, 2, 4}, {2, 4, 6}, {3, 6, 4}, {4, 8, 1}}, 5)));
}

TEST_CASE("tables are certified and carry the prime") {
  const BettiTable t = betti_table(cycle_graph(4));
  CHECK(t.is_complete());
  CHECK(t.prime() == kDefaultPrime);
  CHECK(t.n() == 4);
  OracleOptions o;
  o.prime = 101;
  CHECK(betti_table(cycle_graph(4), o).prime() == 101);
}

TEST_CASE("cap") {
  try {
    betti_table(path_graph(6));
    FAIL("expected too-large");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
    CHECK(std::string(e.what()).find("n = 5") != std::string::npos);
  }
  OracleOptions o;
  o.cap = kExtendedOracleCap;
  CHECK(betti_table(path_graph(6), o).projective_dimension() == 5);
}

TEST_CASE("summaries") {
  const Graph p3 = path_graph(3);
  const InvariantSummary s = summarize(betti_table(p3), p3);
  CHECK(s.pd == 2);
  CHECK(s.depth == 4);
  CHECK(s.reg == 2);
  CHECK(s.dim == 4);
  CHECK(s.cmdef == 0);
  CHECK(s.extremal == std::vector<ExtremalEntry>{{2, 2, 1}});

  const Graph k4 = complete_graph(4);
  const InvariantSummary sk = summarize(betti_table(k4), k4);
  CHECK(sk.pd == 3);
  CHECK(sk.depth == 5);
  CHECK(sk.reg == 1);
  CHECK(sk.dim == 5);
  CHECK(sk.extremal.size() == 1);

  const Graph diamond = cone(p3);
  const InvariantSummary sd = summarize(betti_table(diamond), diamond);
  CHECK(sd.depth == 4);
  CHECK(sd.dim == 5);
  CHECK(sd.cmdef == 1);

  BettiTable uncertified(3);
  uncertified.set(0, 0, 1);
  CHECK_THROWS_AS(summarize(uncertified, p3), Error);
}

TEST_CASE("summary violations catch a bad corner") {
  const Graph p3 = path_graph(3);
  const BettiTable t = betti_table(p3);
  InvariantSummary s = summarize(t, p3);
  CHECK(summary_violations(s, t).empty());
  s.extremal.push_back({1, 1, 2});
  CHECK(!summary_violations(s, t).empty());
  s = summarize(t, p3);
  s.depth += 1;
  CHECK(!summary_violations(s, t).empty());
}

TEST_CASE("Euler characteristic") {
  const PolyRing r2(2);
  CHECK(euler_check(betti_table(complete_graph(2)), binomial_edge_ideal_basis(r2, complete_graph(2)), 6));

  const PolyRing r3(3);
  const GroebnerBasis gb = binomial_edge_ideal_basis(r3, path_graph(3));
  BettiTable t = betti_table(path_graph(3));
  CHECK(euler_check(t, gb, 8));
  t.set(2, 4, 2);
  CHECK(!euler_check(t, gb, 8));

  BettiTable uncertified(3);
  uncertified.set(0, 0, 1);
  CHECK_THROWS_AS(euler_check(uncertified, gb, 3), Error);
}

TEST_CASE("Koszul and syzygy routes agree") {
  const PrimeField f;
  for (int n = 1; n <= 4; ++n) {
    for (const Graph& g : graphs_up_to_isomorphism(n, false)) {
      const PolyRing ring(n, f);
      const BettiTable k = koszul_betti_table(binomial_edge_ideal_basis(ring, g), 1);
      const BettiTable s = syzygy_betti_table(g, f);
      CHECK_MESSAGE(k.same_entries(s), describe(g));
    }
  }
  // Under the lex order as well.
  const PolyRing lex(4, f, MonomialOrder::Lex);
  const Graph c4 = cycle_graph(4);
  CHECK(koszul_betti_table(binomial_edge_ideal_basis(lex, c4)).same_entries(syzygy_betti_table(c4, f)));
}

TEST_CASE("a larger syzygy box finds nothing new") {
  for (const Graph& g : {path_graph(3), cycle_graph(4), cone(path_graph(3))}) {
    const PrimeField f;
    CHECK(syzygy_betti_table(g, f, 2).same_entries(syzygy_betti_table(g, f, 3)));
  }
}

TEST_CASE("thread count does not change the table") {
  const Graph g = cone(cycle_graph(4));
  const PolyRing ring(5);
  const GroebnerBasis gb = binomial_edge_ideal_basis(ring, g);
  CHECK(koszul_betti_table(gb, 1).same_entries(koszul_betti_table(gb, 4)));
}

TEST_CASE("known tables at n = 4 and 5") {
  CHECK(betti_table(cycle_graph(4))
            .same_entries(table({{0, 0, 1}, {1, 2, 4}, {2, 4, 9}, {3, 5, 8}, {4, 6, 2}}, 4)));
  // Depth of K_{2,3} is 4.
  const BettiTable k23 = betti_table(multipartite_graph({2, 3}));
  CHECK(2 * 5 - k23.projective_dimension() == 4);
}

}  // TEST_SUITE
