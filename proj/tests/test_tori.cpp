#include <doctest.h>

#include "f4/tori.hpp"

using namespace f4;
using namespace f4::tori;

TEST_CASE("g_value on quoted roots") {
  Diagram b2 = orbits::by_label("B2").diagram;
  CHECK(g_value(b2, Root(2, 3, 4, 2)) == 6);
  CHECK(g_value(b2, Root(1, 1, 2, 2)) == 4);
  CHECK(g_value(b2, Root(1, 2, 4, 2)) == 4);
  CHECK(g_value(b2, Root(1, 2, 3, 2)) == 4);
  for (const auto& rec : orbits::catalog())
    for (int i = 1; i <= 4; ++i)
      CHECK(g_value(rec.diagram, rootsys::simple_root(i)) == rec.diagram.eps[i - 1]);
  CHECK_THROWS(g_value(b2, Root::parse("-1000")));
}

TEST_CASE("the fifteen torus exponent vectors") {
  const std::vector<std::pair<const char*, CocharWeight>> want = {
      {"A1", {2, 3, 2, 1}},       {"A1t", {2, 4, 3, 2}},     {"A1+A1t", {3, 6, 4, 2}},
      {"A2", {4, 6, 4, 2}},       {"A2t", {4, 8, 6, 4}},     {"A2+A1t", {4, 8, 6, 3}},
      {"B2", {6, 10, 7, 4}},      {"A2t+A1", {5, 10, 7, 4}}, {"C3a1", {6, 11, 8, 4}},
      {"F4a3", {6, 12, 8, 4}},    {"B3", {10, 18, 12, 6}},   {"C3", {10, 19, 14, 8}},
      {"F4a2", {10, 20, 14, 8}},  {"F4a1", {14, 26, 18, 10}}, {"F4", {22, 42, 30, 16}},
  };
  for (const auto& [label, weight] : want) CHECK(torus_of_orbit(label) == weight);
  CHECK(torus_of_orbit("0") == CocharWeight(0, 0, 0, 0));
}

TEST_CASE("pairing reproduces the level on every graded root (eq. tor)") {
  for (const auto& rec : orbits::catalog()) {
    if (rec.label == "0") continue;
    CocharWeight w = torus_of_orbit(rec.diagram);
    Grading g(rec.diagram);
    for (const auto& [lvl, roots] : g.levels())
      for (const Root& a : roots) CHECK(rootsys::pairing(a, w) == lvl);
  }
}

TEST_CASE("compose is the exponent sum") {
  CHECK(compose({10, 19, 14, 8}, {0, 1, 0, 0}) == CocharWeight(10, 20, 14, 8));
  CHECK(compose({10, 18, 12, 6}, {0, 0, 2, 2}) == CocharWeight(10, 18, 14, 8));
  CHECK(compose({4, 8, 6, 3}, {0, 0, 0, 0}) == CocharWeight(4, 8, 6, 3));
}

TEST_CASE("match_to_orbit: quoted conjugations") {
  {
    auto m = match_to_orbit({10, 18, 14, 8});
    REQUIRE(m.has_value());
    CHECK(m->label == "F4a2");
    CHECK(rootsys::weyl_apply_cochar(m->witness, {10, 18, 14, 8}) == torus_of_orbit("F4a2"));
  }
  {
    auto m = match_to_orbit({10, 18, 12, 4});
    REQUIRE(m.has_value());
    CHECK(m->label == "F4a2");
    CHECK(rootsys::weyl_apply_cochar(m->witness, {10, 18, 12, 4}) == torus_of_orbit("F4a2"));
  }
  {
    auto m = match_to_orbit({6, 10, 6, 4});
    REQUIRE(m.has_value());
    CHECK(m->label == "F4a3");
    CHECK(rootsys::weyl_apply_cochar(m->witness, {6, 10, 6, 4}) == torus_of_orbit("F4a3"));
  }
  // invariant-form value 34 is not attained by any orbit torus, so no
  // Weyl translate of this weight can match
  CHECK_FALSE(match_to_orbit({1, 2, 3, 4}).has_value());
}

TEST_CASE("match_to_orbit is the identity on the orbit tori themselves") {
  for (const auto& rec : orbits::catalog()) {
    if (rec.label == "0") continue;
    auto m = match_to_orbit(torus_of_orbit(rec.diagram));
    REQUIRE(m.has_value());
    CHECK(m->label == rec.label);
    CHECK(m->witness.empty());  // first element in breadth-first order is the identity
  }
}

TEST_CASE("sub-torus entries annihilate the host character support") {
  for (const auto& e : sub_torus_table())
    for (const Root& a : e.char_support) CHECK(rootsys::pairing(a, e.weight) == 0);
}

TEST_CASE("symplectic partition tori") {
  CHECK(sp_partition_torus(4, {4}).exponents == std::vector<int>{3, 1, -1, -3});
  CHECK(sp_partition_torus(4, {2, 1, 1}).exponents == std::vector<int>{1, 0, 0, -1});
  CHECK(sp_partition_torus(6, {2, 2, 2}).exponents == std::vector<int>{1, 1, 1, -1, -1, -1});
  CHECK(sp_partition_torus(6, {4, 2}).exponents == std::vector<int>{3, 1, 1, -1, -1, -3});
  CHECK_THROWS(sp_partition_torus(4, {3, 1}));     // odd part with odd multiplicity
  CHECK_THROWS(sp_partition_torus(4, {2, 1}));     // wrong total
  CHECK_THROWS(sp_partition_torus(5, {2, 2, 1}));  // odd group size
}

TEST_CASE("signed permutation search in the Sp6 Weyl group") {
  std::vector<int> comp = {3, 1, -1, 1, -1, -3};
  auto w = sp_weyl_match(comp, sp_partition_torus(6, {4, 2}).exponents);
  REQUIRE(w.has_value());
  CHECK_FALSE(sp_weyl_match(comp, sp_partition_torus(6, {6}).exponents).has_value());
  CHECK_THROWS(sp_weyl_match({1, 0, 0, 1}, {1, 0, 0, -1}));  // not symmetric
}
