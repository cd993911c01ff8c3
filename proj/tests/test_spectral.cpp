#include <doctest.h>

#include "regset/fieldcodes.hpp"
#include "regset/spectral.hpp"

using namespace regset;

namespace {

CayleyGraph cycle4() {
  return build_cayley(FiniteGroup::cyclic(4), ElementSet(4, {1, 3}));
}

IntPoly poly(std::initializer_list<long long> cs) {
  IntPoly p;
  for (long long c : cs) p.push_back(c);
  return p;
}

}  // namespace

TEST_CASE("quotient matrix") {
  CayleyGraph c4 = cycle4();
  VertexPartition two = VertexPartition::from_blocks(
      4, {ElementSet(4, {0, 2}), ElementSet(4, {1, 3})});
  auto q = quotient_matrix(c4, two);
  REQUIRE(q.has_value());
  CHECK(q->r == 2);
  CHECK(q->at(0, 0) == 0);
  CHECK(q->at(0, 1) == 2);
  CHECK(q->at(1, 0) == 2);
  CHECK(q->at(1, 1) == 0);

  // The single-block partition is always equitable with quotient [degree].
  VertexPartition one = VertexPartition::from_blocks(4, {ElementSet(4, {0, 1, 2, 3})});
  auto q1 = quotient_matrix(c4, one);
  REQUIRE(q1.has_value());
  CHECK(q1->r == 1);
  CHECK(q1->at(0, 0) == 2);

  // {000} vs the rest of Q3 is not equitable.
  CayleyGraph q3 = hypercube_graph(3);
  VertexPartition bad = VertexPartition::from_blocks(
      8, {ElementSet(8, {0}), ElementSet(8, {1, 2, 3, 4, 5, 6, 7})});
  CHECK_FALSE(quotient_matrix(q3, bad).has_value());

  CHECK_THROWS_AS(VertexPartition::from_blocks(4, {ElementSet(4, {0, 1})}), error);
  CHECK_THROWS_AS(
      VertexPartition::from_blocks(4, {ElementSet(4, {0, 1}), ElementSet(4, {1, 2, 3})}),
      error);
}

TEST_CASE("characteristic polynomial") {
  QuotientMatrix m;
  m.r = 2;
  m.m = {0, 2, 2, 0};
  CHECK(char_poly(m) == poly({1, 0, -4}));

  QuotientMatrix one;
  one.r = 1;
  one.m = {5};
  CHECK(char_poly(one) == poly({1, -5}));

  QuotientMatrix t;
  t.r = 2;
  t.m = {0, 3, 1, 2};
  CHECK(char_poly(t) == poly({1, -2, -3}));
}

TEST_CASE("polynomial helpers") {
  CHECK(poly_mul(poly({1, -1}), poly({1, 1})) == poly({1, 0, -1}));
  CHECK(two_eigenvalue_poly(2, -2, 2) == poly({1, 0, -4}));
  CHECK(two_eigenvalue_poly(3, -1, 3) == poly({1, -1, -5, -3}));

  // x^3 - x mod (x^2 - 1) = 0; x^3 mod (x^2 - 1) = x.
  IntPoly div = poly({1, 0, -1});
  CHECK(poly_mod_monic(poly({1, 0, -1, 0}), div) == poly({0}));
  CHECK(poly_mod_monic(poly({1, 0, 0, 0}), div) == poly({1, 0}));
}

TEST_CASE("mu-equitable partitions") {
  CayleyGraph c4 = cycle4();
  VertexPartition two = VertexPartition::from_blocks(
      4, {ElementSet(4, {0, 2}), ElementSet(4, {1, 3})});
  CHECK(is_mu_equitable(c4, two, -2));
  CHECK_FALSE(is_mu_equitable(c4, two, -1));

  CHECK(is_mu_perfect_set(c4, ElementSet(4, {0, 2}), -2));
  CHECK_FALSE(is_mu_perfect_set(c4, ElementSet(4, {0, 1}), -2));

  // A verified (0,k)-regular subgroup always yields a (-k)-perfect 2-block
  // partition.
  CHECK(verify_regular_set(c4, ElementSet(4, {0, 2}), 0, 2).has_value());
  CHECK(is_mu_perfect_set(c4, ElementSet(4, {0, 2}), -2));
}

TEST_CASE("coset partition from a regular subgroup") {
  CayleyGraph c4 = cycle4();
  SubgroupInfo h = generated_subgroup(c4.group(), ElementSet(4, {2}));
  VertexPartition pi = coset_equitable_partition(c4, h, 2);
  CHECK(pi.blocks.size() == 2);
  CHECK(pi.blocks[0] == h.elements);
  CHECK(is_mu_equitable(c4, pi, -2));

  // S outside the normalizer of H is refused.
  FiniteGroup d6 = FiniteGroup::dihedral(3);
  SubgroupInfo refl = generated_subgroup(d6, ElementSet(6, {3}));
  CayleyGraph g = build_cayley(d6, ElementSet(6, {1, 2}));
  CHECK_THROWS_AS(coset_equitable_partition(g, refl, 1), error);
}

TEST_CASE("quotient polynomial divides the adjacency polynomial") {
  CayleyGraph c4 = cycle4();
  VertexPartition two = VertexPartition::from_blocks(
      4, {ElementSet(4, {0, 2}), ElementSet(4, {1, 3})});
  IntPoly full = adjacency_char_poly(c4);
  REQUIRE(full.size() == 5);
  CHECK(poly_mod_monic(full, char_poly(*quotient_matrix(c4, two))) == poly({0}));

  CayleyGraph q3 = hypercube_graph(3);
  VertexPartition parity = VertexPartition::from_blocks(
      8, {ElementSet(8, {0, 3, 5, 6}), ElementSet(8, {1, 2, 4, 7})});
  CHECK(poly_mod_monic(adjacency_char_poly(q3), char_poly(*quotient_matrix(q3, parity))) ==
        poly({0}));
}

TEST_CASE("nested regular family") {
  // C4, D = <2>, k = 2: only H itself (index 2 gives one proper union).
  CayleyGraph c4 = cycle4();
  auto fam4 = nested_regular_family(c4, ElementSet(4, {0, 2}), 2);
  REQUIRE(fam4.size() == 1);
  CHECK(fam4[0].set == ElementSet(4, {0, 2}));
  CHECK(fam4[0].a == 0);
  CHECK(fam4[0].b == 2);

  // C6, D = {0,3}, k = 1: sizes 2 and 4 with parameters (0,1) and (1,2).
  FiniteGroup z6 = FiniteGroup::cyclic(6);
  CayleyGraph c6 = build_cayley(z6, ElementSet(6, {1, 5}));
  auto fam6 = nested_regular_family(c6, ElementSet(6, {0, 3}), 1);
  REQUIRE(fam6.size() == 2);
  CHECK(fam6[0].set.size() == 2);
  CHECK(fam6[0].a == 0);
  CHECK(fam6[0].b == 1);
  CHECK(fam6[1].set.size() == 4);
  CHECK(fam6[1].a == 1);
  CHECK(fam6[1].b == 2);
  for (const NestedRegularSet& e : fam6)
    CHECK(verify_regular_set(c6, e.set, e.a, e.b).has_value());

  // Q6 with the 16-word code subgroup: sizes 16, 32, 48.
  auto code = hypercube_regular_set(6, 2);
  REQUIRE(code.has_value());
  CayleyGraph q6 = hypercube_graph(6);
  auto fam = nested_regular_family(q6, code_as_element_set(*code), 2);
  REQUIRE(fam.size() == 3);
  for (int a = 0; a < 3; ++a) {
    CHECK(fam[a].set.size() == 16 * (a + 1));
    CHECK(fam[a].a == 2 * a);
    CHECK(fam[a].b == 2 * (a + 1));
  }
}
