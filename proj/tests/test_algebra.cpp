#include <doctest.h>

#include <random>

#include "beit/enumerate.hpp"
#include "beit/groebner.hpp"
#include "beit/linalg.hpp"

using namespace beit;

namespace {

// x_i y_j - x_j y_i built term by term.
Polynomial minor(const PolyRing& r, int i, int j) {
  Monomial a = Monomial::variable(r.x(i)) * Monomial::variable(r.y(j));
  Monomial b = Monomial::variable(r.x(j)) * Monomial::variable(r.y(i));
  return r.sub(r.monomial(a), r.monomial(b));
}

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("prime field") {
  const PrimeField f(32003);
  CHECK(f.mul(f.inv(1234), 1234) == 1);
  CHECK(f.add(32002, 5) == 4);
  CHECK(f.sub(3, 5) == 32001);
  CHECK(f.from_int(-1) == 32002);
  CHECK(f.lift(32002) == -1);
  CHECK(is_prime(101));
  CHECK(!is_prime(100));
  CHECK_THROWS(PrimeField(100));
}

TEST_CASE("edge generators") {
  const PolyRing r2(2);
  const auto k2 = binomial_edge_generators(r2, complete_graph(2));
  REQUIRE(k2.size() == 1);
  CHECK(k2[0] == minor(r2, 1, 2));
  // Terms print in order, leading term first.
  CHECK(r2.to_string(k2[0]) == "-x2*y1 + x1*y2");

  const PolyRing r3(3);
  const auto p3 = binomial_edge_generators(r3, path_graph(3));
  REQUIRE(p3.size() == 2);
  CHECK(p3[0] == minor(r3, 1, 2));
  CHECK(p3[1] == minor(r3, 2, 3));
  CHECK(binomial_edge_generators(r3, edgeless_graph(3)).empty());
}

TEST_CASE("groebner bases of small graphs") {
  const PolyRing r2(2);
  const GroebnerBasis k2 = binomial_edge_ideal_basis(r2, complete_graph(2));
  CHECK(k2.size() == 1);

  const PolyRing r3(3);
  const GroebnerBasis p3 = binomial_edge_ideal_basis(r3, path_graph(3));
  CHECK(p3.size() == 2);
  CHECK(is_groebner_basis(r3, binomial_edge_generators(r3, path_graph(3))));

  const GroebnerBasis k3 = binomial_edge_ideal_basis(r3, complete_graph(3));
  CHECK(k3.size() >= 3);
  for (const Polynomial& minor : binomial_edge_generators(r3, complete_graph(3))) {
    CHECK(normal_form(minor, k3).is_zero());
  }

  CHECK(binomial_edge_ideal_basis(r3, edgeless_graph(3)).is_zero_ideal());
}

TEST_CASE("2-minors of a generic matrix are a Groebner basis") {
  for (int n = 2; n <= 5; ++n) {
    for (MonomialOrder order : {MonomialOrder::DegRevLex, MonomialOrder::Lex}) {
      const PolyRing ring(n, PrimeField(), order);
      CHECK(is_groebner_basis(ring, binomial_edge_generators(ring, complete_graph(n))));
    }
  }
}

TEST_CASE("normal forms") {
  const PolyRing r2(2);
  const GroebnerBasis k2 = binomial_edge_ideal_basis(r2, complete_graph(2));
  CHECK(normal_form(binomial_edge_generators(r2, complete_graph(2))[0], k2).is_zero());
  const Polynomial x1 = r2.monomial(Monomial::variable(r2.x(1)));
  CHECK(normal_form(x1, k2) == x1);

  const PolyRing r3(3);
  const GroebnerBasis p3 = binomial_edge_ideal_basis(r3, path_graph(3));
  const Polynomial f13 = binomial_edge_generators(r3, complete_graph(3))[1];  // edge {1,3}
  CHECK(f13 == minor(r3, 1, 3));
  CHECK(!normal_form(f13, p3).is_zero());
  // J_{P_3} in degree 2 is the span of its two generators; x1*y3 - x3*y1
  // must lie outside it.
  std::vector<Monomial> basis;
  const auto index_of = [&](const Monomial& m) {
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (basis[k] == m) return k;
    basis.push_back(m);
    return basis.size() - 1;
  };
  const auto p3_gens = binomial_edge_generators(r3, path_graph(3));
  for (const Polynomial& f : {p3_gens[0], p3_gens[1], f13})
    for (const Term& t : f.terms()) index_of(t.monomial);
  const auto vec = [&](const Polynomial& f) {
    DenseRow v(basis.size(), 0);
    for (const Term& t : f.terms()) v[index_of(t.monomial)] = t.coeff;
    return v;
  };
  EchelonBasis span(basis.size(), r3.field());
  for (const Polynomial& f : p3_gens) span.insert(vec(f));
  CHECK(!span.contains(vec(f13)));
  CHECK(span.contains(vec(r3.add(p3_gens[0], r3.scale(p3_gens[1], 5)))));
}

TEST_CASE("groebner is idempotent and division is safe") {
  for (const Graph& g : connected_graphs(4)) {
    const PolyRing ring(g.num_vertices());
    const GroebnerBasis gb = binomial_edge_ideal_basis(ring, g);
    const GroebnerBasis again = groebner(ring, gb.generators());
    CHECK(again.generators() == gb.generators());
    CHECK(is_groebner_basis(ring, gb.generators()));

    // f - NF(f) lies in the ideal: its normal form vanishes.
    std::mt19937 rng(g.num_edges() * 31 + g.num_vertices());
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Term> terms;
      for (int k = 0; k < 4; ++k) {
        Monomial m;
        for (int e = 0; e < 3; ++e) {
          const int var = static_cast<int>(rng() % static_cast<unsigned>(ring.num_vars()));
          m.set_exponent(var, m.exponent(var) + 1);
        }
        terms.push_back({m, static_cast<Coeff>(1 + rng() % 1000)});
      }
      const Polynomial f = ring.make(terms);
      const Polynomial r = normal_form(f, gb);
      CHECK(normal_form(ring.sub(f, r), gb).is_zero());
      CHECK(normal_form(r, gb) == r);
    }
  }
}

TEST_CASE("ideal membership does not depend on the order") {
  for (const Graph& g : connected_graphs(4)) {
    const PolyRing drl(g.num_vertices(), PrimeField(), MonomialOrder::DegRevLex);
    const PolyRing lex(g.num_vertices(), PrimeField(), MonomialOrder::Lex);
    const GroebnerBasis a = binomial_edge_ideal_basis(drl, g);
    const GroebnerBasis b = binomial_edge_ideal_basis(lex, g);
    // Edge binomials of K_n, members or not.
    for (const Polynomial& f : binomial_edge_generators(drl, complete_graph(g.num_vertices()))) {
      const bool in_a = normal_form(f, a).is_zero();
      const bool in_b = normal_form(lex.reorder(f), b).is_zero();
      CHECK(in_a == in_b);
    }
    // Mixed combinations of two binomials.
    const auto all = binomial_edge_generators(drl, complete_graph(g.num_vertices()));
    for (std::size_t i = 0; i + 1 < all.size(); ++i) {
      const Polynomial f = drl.add(all[i], drl.mul_term(all[i + 1], Monomial::variable(0), 3));
      CHECK(normal_form(f, a).is_zero() == normal_form(lex.reorder(f), b).is_zero());
    }
  }
}

TEST_CASE("hilbert function") {
  const PolyRing r2(2);
  CHECK(hilbert_function(binomial_edge_ideal_basis(r2, edgeless_graph(2)), 2) == 10);
  const GroebnerBasis k2 = binomial_edge_ideal_basis(r2, complete_graph(2));
  CHECK(hilbert_function(k2, 2) == 9);
  CHECK(hilbert_function(k2, 0) == 1);
  // Quadric hypersurface in 4 variables: C(d+3,3) - C(d+1,3).
  for (int d = 0; d <= 8; ++d) {
    const auto c3 = [](int a) { return a < 3 ? 0 : a * (a - 1) * (a - 2) / 6; };
    CHECK(hilbert_function(k2, d) == static_cast<std::uint64_t>(c3(d + 3) - c3(d + 1)));
  }

  for (const Graph& g : connected_graphs(4)) {
    const PolyRing drl(g.num_vertices(), PrimeField(), MonomialOrder::DegRevLex);
    const PolyRing lex(g.num_vertices(), PrimeField(), MonomialOrder::Lex);
    const GroebnerBasis a = binomial_edge_ideal_basis(drl, g);
    const GroebnerBasis b = binomial_edge_ideal_basis(lex, g);
    for (int d = 0; d <= 5; ++d) CHECK(hilbert_function(a, d) == hilbert_function(b, d));
  }
}

}  // TEST_SUITE
