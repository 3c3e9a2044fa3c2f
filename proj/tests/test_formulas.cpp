#include <doctest.h>

#include "beit/error.hpp"
#include "beit/formulas.hpp"
#include "beit/oracle.hpp"

using namespace beit;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidParameter;
}

}  // namespace

TEST_SUITE("formulas") {

TEST_CASE("choose") {
  CHECK(choose(5, 2) == 10);
  CHECK(choose(5, 0) == 1);
  CHECK(choose(5, 6) == 0);
  CHECK(choose(5, -1) == 0);
  CHECK(choose(-1, 0) == 0);
}

TEST_CASE("cone formula on P_3") {
  BettiTable h(3, kDefaultPrime);
  h.set(0, 0, 1);
  h.set(1, 2, 2);
  h.set(2, 4, 1);
  h.certify(6, 4);
  const BettiTable g = betti_cone_formula(h, clique_vector(path_graph(3)), 3);
  CHECK(g.beta(1, 1) == 5);
  CHECK(g.beta(2, 1) == 4);
  CHECK(g.beta(2, 2) == 3);
  for (const auto& [key, v] : g.entries()) CHECK(key.second - key.first <= 2);
  CHECK(g.is_complete());
  CHECK(g.prime() == kDefaultPrime);

  // Diamond, from the oracle directly.
  CHECK(g.same_entries(betti_table(cone(path_graph(3)))));
}

TEST_CASE("cone formula rejects a complete base") {
  const BettiTable k3 = betti_table(complete_graph(3));
  CHECK(kind_of([&] { betti_cone_formula(k3, clique_vector(complete_graph(3)), 3); }) ==
        ErrorKind::CompleteInput);
}

TEST_CASE("wheel closed form") {
  const BettiTable w = wheel_betti(5);
  CHECK(w.beta(1, 1) == 10);
  CHECK(w.get(7, 10) == 5);
  CHECK(w.get(2, 4) == 25);
  CHECK(w.projective_dimension() == 7);
  CHECK(w.regularity() == 3);
  CHECK(w.prime() == 0);
  CHECK(kind_of([] { wheel_betti(4); }) == ErrorKind::UnsupportedSize);
  CHECK(kind_of([] { wheel_betti(3); }) == ErrorKind::InvalidParameter);
  for (int n = 5; n <= 12; ++n) {
    const BettiTable t = wheel_betti(n);
    CHECK(t.projective_dimension() == n + 2);
    CHECK(t.regularity() == n - 2);
  }
}

TEST_CASE("wheel closed form matches the cone formula over the oracle") {
  const Graph c5 = cycle_graph(5);
  CHECK(wheel_betti(5).same_entries(betti_cone_formula(betti_table(c5), clique_vector(c5), 5)));
}

TEST_CASE("path and disjoint union tables") {
  CHECK(path_betti(3).same_entries(betti_table(path_graph(3))));
  CHECK(path_betti(1).entries().size() == 1);
  const BettiTable a = betti_table(complete_graph(2)), b = betti_table(path_graph(3));
  CHECK(betti_disjoint_union(a, b).same_entries(betti_table(disjoint_union(complete_graph(2), path_graph(3)))));
}

TEST_CASE("depth and defect of cones") {
  CHECK(depth_cone(4, 3, true) == 4);
  CHECK(depth_cone(6, 3, false) == 5);
  CHECK(depth_cone(4, 4, true) == 4);

  CHECK(cmdef_cone(4, 0, 3) == 1);
  CHECK(cmdef_cone(7, 3, 5) == 3);
  CHECK(kind_of([] { cmdef_cone(3, 0, 3); }) == ErrorKind::InvalidDimension);

  // K_q * (CM graph H): defect q.
  for (int q = 1; q <= 5; ++q) CHECK(cmdef_complete_join(4, 0, 3, q) == q);
  CHECK(cmdef_complete_join(9, 2, 4, 3) == 2);
  CHECK(cmdef_complete_join(4, 0, 3, 1) == cmdef_cone(4, 0, 3));
}

TEST_CASE("depth of joins") {
  CHECK(depth_join({5, 4, true, false}, {4, 4, true, false}) == 4);
  CHECK(depth_join({4, 3, true, false}, {6, 4, false, false}) == 4);
  CHECK(depth_join({4, 2, false, false}, {6, 3, false, false}) == 4);
  CHECK(kind_of([] { depth_join({6, 4, false, false}, {4, 3, true, false}); }) == ErrorKind::BadOrientation);
  CHECK(kind_of([] { depth_join({6, 3, false, false}, {4, 2, false, false}); }) == ErrorKind::BadOrientation);
  CHECK(kind_of([] { depth_join({5, 4, true, true}, {4, 4, true, false}); }) == ErrorKind::CompleteInput);
  CHECK(kind_of([] { depth_join({2, 1, true, false}, {4, 4, true, false}); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("depth of multipartite graphs and disjoint unions") {
  CHECK(depth_multipartite({2, 2}) == 4);
  CHECK(depth_multipartite({2, 3}) == 4);
  CHECK(depth_multipartite({2, 2, 3}) == 4);
  CHECK(depth_multipartite({3, 4}) == 5);
  CHECK(kind_of([] { depth_multipartite({1, 3}); }) == ErrorKind::InvalidParameter);
  CHECK(kind_of([] { depth_multipartite({3}); }) == ErrorKind::InvalidParameter);
  CHECK(depth_disjoint_union({3, 3}) == 6);
  CHECK(depth_disjoint_union({}) == 0);
}

TEST_CASE("extremal transfer") {
  CHECK(extremal_transfer_cone({{2, 2, 1}}) == std::vector<ExtremalEntry>{{4, 2, 1}});
  CHECK(extremal_transfer_cone({{2, 2, 1}, {1, 3, 4}}, 3) == std::vector<ExtremalEntry>{{8, 2, 1}, {7, 3, 4}});
  CHECK(extremal_transfer_cone({}).empty());
}

TEST_CASE("G_{r,b} profile") {
  const GrbProfile a = grb_profile(2, 1);
  CHECK(a.n == 3);
  CHECK(a.pd == 2);
  CHECK(a.depth == 4);
  CHECK(a.extremal == std::vector<ExtremalEntry>{{2, 2, 1}});

  const GrbProfile b = grb_profile(3, 2);
  CHECK(b.n == 7);
  CHECK(b.pd == 10);
  CHECK(b.depth == 4);
  CHECK(b.extremal == std::vector<ExtremalEntry>{{10, 2, 1}, {9, 3, 1}});

  const GrbProfile c = grb_profile(4, 2);
  CHECK(c.n == 9);
  CHECK(c.pd == 13);  // 3*4 - 1*(-1); depth + pd = 2n forces 13
  CHECK(c.depth == 5);
  CHECK(c.extremal == std::vector<ExtremalEntry>{{13, 3, 1}, {12, 4, 1}});

  for (int r = 2; r <= 8; ++r) {
    for (int b2 = 1; b2 < r; ++b2) {
      const GrbProfile p = grb_profile(r, b2);
      CHECK(p.depth + p.pd == 2 * p.n);
      CHECK(p.extremal.size() == static_cast<std::size_t>(b2));
      // All predicted corners share the internal degree pd + r - b + 1.
      for (const auto& e : p.extremal) CHECK(e.i + e.j == p.pd + r - b2 + 1);
    }
    const GrbProfile ci = grb_profile(r, 1);
    CHECK(ci.extremal == std::vector<ExtremalEntry>{{r, r, 1}});
    CHECK(path_betti(r + 1).extremal() == ci.extremal);
  }
  CHECK(kind_of([] { grb_profile(3, 3); }) == ErrorKind::InvalidParameter);
  CHECK(kind_of([] { grb_profile(1, 1); }) == ErrorKind::InvalidParameter);
}

}  // TEST_SUITE
