#include <doctest.h>

#include "regset/cayley.hpp"

using namespace regset;

TEST_CASE("build validation") {
  FiniteGroup z4 = FiniteGroup::cyclic(4);
  CHECK_THROWS_AS(build_cayley(z4, ElementSet(4, {0, 2})), error);  // identity in S
  CHECK_THROWS_AS(build_cayley(z4, ElementSet(4, {2, 1})), error);  // 1^{-1}=3 missing
  CayleyGraph c4 = build_cayley(z4, ElementSet(4, {1, 3}));
  CHECK(c4.degree() == 2);
  CHECK(c4.num_vertices() == 4);
}

TEST_CASE("cycle adjacency") {
  CayleyGraph c4 = build_cayley(FiniteGroup::cyclic(4), ElementSet(4, {1, 3}));
  CHECK(c4.adjacent(0, 1));
  CHECK(c4.adjacent(3, 0));
  CHECK_FALSE(c4.adjacent(0, 2));
  CHECK(c4.neighbours(1) == ElementSet(4, {0, 2}));
}

TEST_CASE("hypercube Q3") {
  CayleyGraph q3 = hypercube_graph(3);
  CHECK(q3.num_vertices() == 8);
  CHECK(q3.degree() == 3);
  CHECK(q3.is_connected());
  for (int v = 0; v < 8; ++v) CHECK(q3.neighbours(v).size() == 3);
  CHECK(q3.adjacent(0b000, 0b100));
  CHECK_FALSE(q3.adjacent(0b000, 0b110));
}

TEST_CASE("connectivity") {
  FiniteGroup z4 = FiniteGroup::cyclic(4);
  CHECK_FALSE(build_cayley(z4, ElementSet(4, {2})).is_connected());
  CHECK(build_cayley(z4, ElementSet(4, {1, 3})).is_connected());
}

TEST_CASE("lee torus") {
  CayleyGraph g = lee_torus_graph(5, 2);
  CHECK(g.num_vertices() == 25);
  CHECK(g.degree() == 4);
  CHECK(g.is_connected());
  // (0,0) ~ (1,0),(4,0),(0,1),(0,4); indices: digit i is coordinate i base 5.
  CHECK(g.neighbours(0) == ElementSet(25, {1, 4, 5, 20}));
}

TEST_CASE("translation equivariance") {
  // N(v*g) = N(v)*g for Cayley graphs (right translations are automorphisms).
  FiniteGroup d8 = FiniteGroup::dihedral(4);
  CayleyGraph g = build_cayley(d8, ElementSet(8, {1, 3, 4}));  // a, a^3, b
  for (int v = 0; v < 8; ++v)
    for (int t = 0; t < 8; ++t) {
      ElementSet lhs = g.neighbours(d8.op(v, t));
      ElementSet nv = g.neighbours(v);
      ElementSet rhs = ElementSet::empty(8);
      for (int u : nv.members()) rhs.insert(d8.op(u, t));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("neighbours two ways") {
  CayleyGraph g = build_cayley(FiniteGroup::dihedral(3), ElementSet(6, {1, 2, 3}));
  for (int v = 0; v < g.num_vertices(); ++v) {
    ElementSet via_scan = g.neighbours(v);
    ElementSet via_adj = ElementSet::empty(g.num_vertices());
    for (int u = 0; u < g.num_vertices(); ++u)
      if (g.adjacent(v, u)) via_adj.insert(u);
    CHECK(via_scan == via_adj);
  }
}
