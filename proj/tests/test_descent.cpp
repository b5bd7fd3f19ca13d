#include <doctest.h>

#include <set>
#include <stdexcept>

#include "f4/descent.hpp"

using namespace f4;
using namespace f4::descent;

TEST_CASE("dimension identity on the worked examples") {
  CHECK(check_dim_equation({2, 8, 6, 0, 4, "SO4/Sp4"}));
  CHECK(check_dim_equation({3, 11, 8, 0, 6, "PGL3/G2"}));
  CHECK(check_dim_equation({0, 14, 0, 10, 4, "GL4 descent"}));
  CHECK_FALSE(check_dim_equation({1, 8, 6, 0, 4, "off by one"}));
  for (const auto& c : dim_examples()) CHECK(check_dim_equation(c));
  // descent limit case: pi = 0 and H = 0 reduce the identity to dim E = dim V + dim sigma
  DimCase limit{0, 21, 0, 20, 1, "limit"};
  CHECK(check_dim_equation(limit) == (limit.dim_theta == limit.dim_v + limit.dim_sigma));
}

TEST_CASE("pair (SL3,SL3): only dim E = 8, sigma = 3") {
  auto r = pair_feasibility("SL3,SL3");
  REQUIRE(r.directions.size() == 1);
  int feasible = 0;
  for (const auto& o : r.directions[0].options)
    if (o.feasible) {
      ++feasible;
      CHECK(o.dim_e == 8);
      CHECK(o.dim_sigma == 3);
      CHECK(o.witnesses == std::vector<std::string>{"A1"});
    }
  CHECK(feasible == 1);
}

TEST_CASE("pair (SL2,SL4): reverse direction infeasible at dim E = 10") {
  auto r = pair_feasibility("SL2,SL4");
  REQUIRE(r.directions.size() == 2);
  REQUIRE(r.directions[1].options.size() == 1);
  CHECK(r.directions[1].options[0].dim_e == 10);
  CHECK_FALSE(r.directions[1].options[0].feasible);
}

TEST_CASE("pair (SO3,G2): forward 8 only, reverse impossible") {
  auto r = pair_feasibility("SO3,G2");
  std::set<long> feas;
  for (const auto& o : r.directions[0].options)
    if (o.feasible) feas.insert(o.dim_e);
  CHECK(feas == std::set<long>{8});
  for (const auto& o : r.directions[1].options) CHECK_FALSE(o.feasible);
}

TEST_CASE("pair (SL2,Sp6): forward 11 and 8; reverse 15, 14 with 13 impossible") {
  auto r = pair_feasibility("SL2,Sp6");
  std::set<long> fwd;
  for (const auto& o : r.directions[0].options)
    if (o.feasible) fwd.insert(o.dim_e);
  CHECK(fwd == std::set<long>{8, 11});
  std::set<long> rev_feasible, rev_infeasible;
  for (const auto& o : r.directions[1].options)
    (o.feasible ? rev_feasible : rev_infeasible).insert(o.dim_e);
  CHECK(rev_feasible == std::set<long>{14, 15});
  CHECK(rev_infeasible == std::set<long>{13});
  CHECK_THROWS(pair_feasibility("SL9,E8"));
}

TEST_CASE("descent table matches the per-orbit list") {
  auto table = descent_table();
  auto row = [&](const std::string& orbit, long sigma) -> const DescentRow& {
    for (const auto& r : table)
      if (r.orbit == orbit && r.dim_sigma == sigma) return r;
    throw std::runtime_error("row not found");
  };
  CHECK(row("C3", 1).dim_e == 22);
  CHECK(row("C3", 1).feasible);
  CHECK(row("B3", 1).dim_e == 22);
  CHECK(row("C3a1", 1).dim_e == 20);
  CHECK(row("A2t+A1", 1).dim_e == 19);
  CHECK(row("B2", 2).dim_e == 20);
  CHECK(row("A2+A1t", 1).dim_e == 18);
  CHECK(row("A2t", 6).dim_e == 21);
  CHECK(row("A2t", 5).dim_e == 20);
  CHECK(row("A2", 3).dim_e == 18);
  CHECK(row("A1+A1t", 2).dim_e == 16);
  CHECK_FALSE(row("A1+A1t", 2).feasible);
  CHECK(row("A1t", 6).dim_e == 17);
  CHECK(row("A1", 9).dim_e == 17);
  CHECK(row("A1", 8).dim_e == 16);
  CHECK_FALSE(row("A1", 8).feasible);
  CHECK(row("A1", 6).dim_e == 14);
  // feasibility flags agree with the catalog lookup everywhere
  for (const auto& r : table) CHECK(r.feasible == !orbits::with_half_dim((int)r.dim_e).empty());
}

TEST_CASE("identity registry contains exactly the stored identities") {
  std::set<std::string> names;
  for (const auto& id : identities()) names.insert(id.name);
  CHECK(names == std::set<std::string>{"C3o2", "B3o3", "C3a1o2", "B2o22", "A2A1to2", "A2toG2",
                                       "A2toG2a1", "Sp4-212o2", "Sp4-212o2-deg", "Sp6-222o3"});
}

TEST_CASE("verify_composition: the F4 identities") {
  auto check = [](const char* name, const char* leading, long dim_e) {
    auto rep = verify_composition(name);
    CHECK(rep.pass);
    CHECK(rep.identity.leading == leading);
    CHECK(rep.identity.expected_dim_e == dim_e);
  };
  check("C3o2", "F4a2", 22);
  check("B3o3", "F4a2", 22);
  check("C3a1o2", "F4a3", 20);
  check("B2o22", "F4a3", 20);
  check("A2A1to2", "F4a3", 18);
  check("A2toG2", "F4a2", 21);
  check("A2toG2a1", "F4a3", 20);
  CHECK_THROWS(verify_composition("nonsense"));
}

TEST_CASE("verify_composition: the paper's own witnesses also work") {
  // C3 o (2) and C3(a1) o (2), B2 o (2|2), A2t o G2(a1) need no conjugation
  for (const char* name : {"C3o2", "C3a1o2", "B2o22", "A2toG2a1"})
    CHECK(verify_composition(name).witness.empty());
  // B3 o (3): w[2] works; A2+A1t o (2): w[23]; A2t o G2: w[234]
  {
    auto rep = verify_composition("B3o3");
    CHECK(rootsys::weyl_apply_cochar(WeylWord::parse("w[2]"), rep.composite) ==
          tori::torus_of_orbit("F4a2"));
  }
  {
    auto rep = verify_composition("A2A1to2");
    CHECK(rootsys::weyl_apply_cochar(WeylWord::parse("w[23]"), rep.composite) ==
          tori::torus_of_orbit("F4a3"));
  }
  {
    auto rep = verify_composition("A2toG2");
    CHECK(rootsys::weyl_apply_cochar(WeylWord::parse("w[234]"), rep.composite) ==
          tori::torus_of_orbit("F4a2"));
  }
}

TEST_CASE("verify_composition: symplectic identities") {
  CHECK(verify_composition("Sp4-212o2").pass);
  CHECK(verify_composition("Sp6-222o3").pass);
  auto deg = verify_composition("Sp4-212o2-deg");
  CHECK(deg.pass);
  CHECK_FALSE(deg.identity.torus_checkable);
}
