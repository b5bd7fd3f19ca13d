#include <doctest.h>

#include <set>

#include "f4/orbits.hpp"

using namespace f4;
using namespace f4::orbits;

namespace {

std::set<Root> to_set(const std::vector<Root>& v) { return {v.begin(), v.end()}; }

std::set<Root> parse_set(std::initializer_list<const char*> names) {
  std::set<Root> s;
  for (const char* n : names) s.insert(Root::parse(n));
  return s;
}

}  // namespace

TEST_CASE("catalog size and label aliases") {
  CHECK(catalog().size() == 16);
  CHECK(by_label("A2t").pretty == "A~2");
  CHECK(by_label("~A2").label == "A2t");
  CHECK(by_label("A~2").label == "A2t");
  CHECK(by_label("F4(a3)").label == "F4a3");
  CHECK(by_label("f4a3").label == "F4a3");
  CHECK(by_label("a2+a~1").label == "A2+A1t");
  CHECK_THROWS(by_label("E8"));
}

TEST_CASE("B2 grading: the five displayed levels") {
  Grading g(by_label("B2").diagram);
  CHECK(to_set(g.at(1)) == parse_set({"0001", "0011", "0111", "0121"}));
  CHECK(to_set(g.at(2)) == parse_set({"1000", "1100", "1110", "1120", "1220", "0122"}));
  CHECK(to_set(g.at(3)) == parse_set({"1111", "1121", "1221", "1231"}));
  CHECK(to_set(g.at(4)) == parse_set({"1122", "1222", "1232", "1242", "1342"}));
  CHECK(to_set(g.at(6)) == parse_set({"2342"}));
  CHECK(g.at(5).empty());
  CHECK(g.size() == 20);
}

TEST_CASE("A2+A1t grading: nine roots at level two, dim U(2) = 14") {
  Grading g(by_label("A2+A1t").diagram);
  CHECK(g.at(2).size() == 9);
  for (const Root& r : g.at(2)) CHECK(r.n[2] == 2);
  CHECK(g.dim_from(2) == 14);
}

TEST_CASE("F4 regular orbit: level is twice the height") {
  Grading g(by_label("F4").diagram);
  CHECK(g.size() == 24);
  for (const auto& [lvl, roots] : g.levels())
    for (const Root& r : roots) CHECK(lvl == 2 * r.height());
}

TEST_CASE("grading is additive: level(a+b) = level(a) + level(b)") {
  for (const auto& rec : catalog()) {
    Grading g(rec.diagram);
    std::set<Root> u;
    for (const auto& [lvl, roots] : g.levels()) u.insert(roots.begin(), roots.end());
    for (const Root& a : u)
      for (const Root& b : u) {
        std::array<int, 4> s;
        for (int k = 0; k < 4; ++k) s[k] = a.n[k] + b.n[k];
        if (!rootsys::is_root(s)) continue;
        Root sum(s);
        CHECK(rec.diagram.level(sum) == rec.diagram.level(a) + rec.diagram.level(b));
        CHECK(u.count(sum) == 1);
      }
  }
}

TEST_CASE("half dimensions: the full list") {
  CHECK(half_dim(by_label("C3").diagram) == 21);
  CHECK(half_dim(by_label("A1t").diagram) == 11);
  CHECK(half_dim(by_label("A1").diagram) == 8);
  const std::vector<std::pair<const char*, int>> want = {
      {"0", 0},      {"A1", 8},    {"A1t", 11},   {"A1+A1t", 14}, {"A2", 15},   {"A2t", 15},
      {"A2+A1t", 17}, {"B2", 18},  {"A2t+A1", 18}, {"C3a1", 19},  {"F4a3", 20}, {"B3", 21},
      {"C3", 21},    {"F4a2", 22}, {"F4a1", 23},  {"F4", 24},
  };
  for (const auto& [label, hd] : want) {
    CHECK(by_label(label).half_dim == hd);
    CHECK(by_label(label).dim == 2 * hd);
  }
}

TEST_CASE("orbits_with_half_dim") {
  CHECK(with_half_dim(10).empty());
  CHECK(with_half_dim(16).empty());
  auto fifteen = with_half_dim(15);
  REQUIRE(fifteen.size() == 2);
  CHECK(fifteen[0].label == "A2");
  CHECK(fifteen[1].label == "A2t");
}

TEST_CASE("diagrams with no label 1 have U = U(2)") {
  for (const auto& rec : catalog()) {
    bool has_one = false;
    for (int e : rec.diagram.eps) has_one |= (e == 1);
    Grading g(rec.diagram);
    if (!has_one) CHECK(g.at(1).empty());
  }
}

TEST_CASE("displayed diagrams match the quoted ones") {
  CHECK(by_label("B2").diagram == Diagram(2, 0, 0, 1));
  CHECK(by_label("B3").diagram == Diagram(2, 2, 0, 0));
  CHECK(by_label("F4a1").diagram == Diagram(2, 2, 0, 2));
  CHECK(by_label("A1+A1t").diagram == Diagram(0, 1, 0, 0));
  CHECK(by_label("A2t+A1").diagram == Diagram(0, 1, 0, 1));
  CHECK(by_label("C3a1").diagram == Diagram(1, 0, 1, 0));
  CHECK(by_label("C3").diagram == Diagram(1, 0, 1, 2));
  CHECK(by_label("A2t").diagram == Diagram(0, 0, 0, 2));
  CHECK(by_label("A1").diagram == Diagram(1, 0, 0, 0));
  for (const char* displayed :
       {"B2", "B3", "F4a1", "A1+A1t", "A2t+A1", "C3a1", "C3", "A2t", "A1"})
    CHECK(by_label(displayed).diagram_displayed);
  for (const char* derived : {"A1t", "A2", "A2+A1t", "F4a3", "F4a2", "F4"})
    CHECK_FALSE(by_label(derived).diagram_displayed);
}

TEST_CASE("closure order: partial order, dimension monotone") {
  for (const auto& a : catalog()) {
    CHECK(closure_leq(a.label, a.label));
    for (const auto& b : catalog()) {
      if (closure_leq(a.label, b.label) && closure_leq(b.label, a.label))
        CHECK(a.label == b.label);
      if (closure_leq(a.label, b.label) && a.label != b.label) CHECK(a.dim < b.dim);
      for (const auto& c : catalog())
        if (closure_leq(a.label, b.label) && closure_leq(b.label, c.label))
          CHECK(closure_leq(a.label, c.label));
    }
  }
}

TEST_CASE("closure order: quoted facts") {
  for (const auto& x : catalog())
    if (x.label != "0") CHECK(closure_leq("A1", x.label));
  // exactly five orbits strictly above A1 and at most B2
  std::set<std::string> between;
  for (const auto& x : catalog())
    if (x.label != "A1" && closure_leq("A1", x.label) && closure_leq(x.label, "B2"))
      between.insert(x.label);
  CHECK(between == std::set<std::string>{"B2", "A2+A1t", "A2", "A1+A1t", "A1t"});
  CHECK(closure_leq("A2t", "F4a3"));
  CHECK_FALSE(closure_leq("A2t", "B2"));
  CHECK_FALSE(closure_leq("A2", "A2t"));
  CHECK_FALSE(closure_leq("A2t", "A2"));
  // every orbit is either below B2 or above A2t
  for (const auto& x : catalog())
    CHECK((closure_leq(x.label, "B2") || closure_leq("A2t", x.label)));
}
