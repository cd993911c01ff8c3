#include <doctest.h>

#include "regset/json_io.hpp"

using namespace regset;

TEST_CASE("group round trip") {
  for (const FiniteGroup& g : {FiniteGroup::cyclic(6), FiniteGroup::dihedral(4),
                               FiniteGroup::generalized_quaternion(2)}) {
    FiniteGroup back = group_from_json(group_to_json(g));
    CHECK(back.order() == g.order());
    CHECK(back.identity() == g.identity());
    for (int x = 0; x < g.order(); ++x) {
      CHECK(back.label(x) == g.label(x));
      for (int y = 0; y < g.order(); ++y) CHECK(back.op(x, y) == g.op(x, y));
    }
  }
}

TEST_CASE("group parse errors") {
  CHECK_THROWS_AS(group_from_json("not json"), std::exception);
  CHECK_THROWS_AS(group_from_json("{\"order\": 2}"), std::exception);
  // Identity field must match the table.
  CHECK_THROWS_AS(
      group_from_json("{\"order\":2,\"identity\":1,\"mul\":[[0,1],[1,0]]}"), error);
  // Broken table caught by validation.
  CHECK_THROWS_AS(
      group_from_json("{\"order\":2,\"identity\":0,\"mul\":[[0,1],[1,1]]}"), error);
}

TEST_CASE("element set round trip") {
  ElementSet s(8, {1, 5, 7});
  CHECK(element_set_to_json(s) == "[1,5,7]");
  CHECK(element_set_from_json("[1,5,7]", 8) == s);
  CHECK(element_set_from_json("[]", 4) == ElementSet::empty(4));
  CHECK_THROWS_AS(element_set_from_json("[9]", 8), error);
  CHECK_THROWS_AS(element_set_from_json("\"x\"", 8), std::exception);
}

TEST_CASE("certificate serialization") {
  FiniteGroup z4 = FiniteGroup::cyclic(4);
  CayleyGraph c4 = build_cayley(z4, ElementSet(4, {1, 3}));
  auto cert = verify_regular_set(c4, ElementSet(4, {0, 2}), 0, 2);
  REQUIRE(cert.has_value());
  std::string text = certificate_to_json(*cert);
  CHECK(text.find("\"S\":[1,3]") != std::string::npos);
  CHECK(text.find("\"D\":[0,2]") != std::string::npos);
  CHECK(text.find("\"a\":0") != std::string::npos);
  CHECK(text.find("\"b\":2") != std::string::npos);
  CHECK(text.find("\"group\"") != std::string::npos);
}

TEST_CASE("covering map serialization") {
  CayleyGraph c4 = build_cayley(FiniteGroup::cyclic(4), ElementSet(4, {1, 3}));
  CoveringMap f(c4, SimpleGraph::complete(2), {0, 1, 0, 1}, 2);
  std::string text = covering_map_to_json(f);
  CHECK(text.find("\"k\":2") != std::string::npos);
  CHECK(text.find("\"target_order\":2") != std::string::npos);
  CHECK(text.find("\"assignment\":[0,1,0,1]") != std::string::npos);
}
