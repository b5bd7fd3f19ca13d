#include <doctest.h>

#include <map>
#include <set>

#include "f4/rootsys.hpp"

using namespace f4;
using namespace f4::rootsys;

TEST_CASE("root counts and length classes") {
  CHECK(all_roots().size() == 48);
  CHECK(positive_roots().size() == 24);
  int long_pos = 0, short_pos = 0;
  for (const Root& r : positive_roots()) (is_long(r) ? long_pos : short_pos)++;
  CHECK(long_pos == 12);
  CHECK(short_pos == 12);
  CHECK(positive_roots().back() == Root(2, 3, 4, 2));  // highest root
}

TEST_CASE("membership and parsing") {
  CHECK(is_root({0, 1, 2, 2}));       // (0122), from the B2 grading
  CHECK(is_root({1, 2, 3, 1}));
  CHECK_FALSE(is_root({1, 0, 1, 0}));  // (1010) is not a root
  CHECK_FALSE(is_root({2, 2, 2, 2}));
  CHECK_THROWS(Root::parse("1010"));
  CHECK(Root::parse("-1100") == -Root(1, 1, 0, 0));
  CHECK(Root::parse("-1100").str() == "-1100");
  CHECK(Root::parse("(0122)") == Root(0, 1, 2, 2));
}

TEST_CASE("canonical order is by height then lex") {
  const auto& pos = positive_roots();
  for (size_t i = 0; i + 1 < pos.size(); ++i) CHECK(pos[i] < pos[i + 1]);
  CHECK(pos[0] == Root(0, 0, 0, 1));  // lex-first among the simple roots
}

TEST_CASE("copair values") {
  CHECK(copair(simple_root(1), 1) == 2);
  CHECK(copair(simple_root(2), 3) == -2);  // the double bond
  CHECK(copair(simple_root(3), 2) == -1);
  Root high(2, 3, 4, 2);
  CHECK(copair(high, 1) == 1);
  for (int i = 2; i <= 4; ++i) CHECK(copair(high, i) == 0);
  for (const Root& a : all_roots())
    for (int i = 1; i <= 4; ++i) CHECK(copair(-a, i) == -copair(a, i));
}

TEST_CASE("simple reflections are involutions permuting the roots") {
  for (int i = 1; i <= 4; ++i) {
    std::set<Root> image;
    for (const Root& a : all_roots()) {
      Root b = reflect(i, a);
      image.insert(b);
      CHECK(reflect(i, b) == a);
      CHECK(is_long(a) == is_long(b));
    }
    CHECK(image.size() == 48);
  }
}

TEST_CASE("weyl word action on roots") {
  CHECK(weyl_apply(WeylWord::parse("w[1]"), Root(0, 1, 0, 0)) == Root(1, 1, 0, 0));
  CHECK(weyl_apply(WeylWord::parse("w[3]"), Root(0, 1, 0, 0)) == Root(0, 1, 2, 0));
  CHECK(weyl_apply(WeylWord::parse("w[4]"), Root(0, 1, 0, 0)) == Root(0, 1, 0, 0));
  // word then reversed word is the identity
  WeylWord w = WeylWord::parse("w[13243]");
  WeylWord rev({3, 4, 2, 3, 1});
  for (const Root& a : all_roots()) CHECK(weyl_apply(rev, weyl_apply(w, a)) == a);
}

TEST_CASE("weyl enumeration has 1152 elements, closed under composition and inverse") {
  const auto& els = weyl_elements();
  CHECK(els.size() == 1152);
  CHECK(els[0].word.empty());

  std::set<std::array<std::uint8_t, 48>> perms;
  for (const auto& e : els) perms.insert(e.perm);
  CHECK(perms.size() == 1152);

  // closure under composition with generators and under inverse
  for (size_t k = 0; k < els.size(); k += 37) {
    const auto& e = els[k];
    std::array<std::uint8_t, 48> inv{};
    for (int i = 0; i < 48; ++i) inv[e.perm[i]] = (std::uint8_t)i;
    CHECK(perms.count(inv) == 1);
  }
  for (size_t a = 0; a < els.size(); a += 97)
    for (size_t b = 0; b < els.size(); b += 131) {
      std::array<std::uint8_t, 48> comp{};
      for (int i = 0; i < 48; ++i) comp[i] = els[a].perm[els[b].perm[i]];
      CHECK(perms.count(comp) == 1);
    }

  // the longest element sends every positive root to a negative root
  int count = 0;
  for (const auto& e : els) {
    bool flips_all = true;
    for (int i = 0; i < 24 && flips_all; ++i) flips_all = e.perm[i] >= 24;
    if (flips_all) ++count;
  }
  CHECK(count == 1);
}

TEST_CASE("height parity and length are preserved by the Weyl action") {
  const auto& els = weyl_elements();
  for (size_t k = 0; k < els.size(); k += 53)
    for (const Root& a : all_roots()) {
      Root b = apply_element(els[k], a);
      CHECK(is_long(a) == is_long(b));
    }
}

TEST_CASE("cocharacter action: the paper's conjugations") {
  CHECK(weyl_apply_cochar(WeylWord{}, CocharWeight(1, 2, 3, 4)) == CocharWeight(1, 2, 3, 4));
  // h(t^10,t^18,t^14,t^8) conjugated by w[2] gives h(t^10,t^20,t^14,t^8)
  CHECK(weyl_apply_cochar(WeylWord::parse("w[2]"), CocharWeight(10, 18, 14, 8)) ==
        CocharWeight(10, 20, 14, 8));
  CHECK(weyl_apply_cochar(WeylWord::parse("w[234]"), CocharWeight(10, 18, 12, 4)) ==
        CocharWeight(10, 20, 14, 8));
  // and w[2] moves (10,20,14,8) back off itself (involution)
  CHECK(weyl_apply_cochar(WeylWord::parse("w[2]"), CocharWeight(10, 20, 14, 8)) ==
        CocharWeight(10, 18, 14, 8));
}

TEST_CASE("duality: <w a, w r> = <a, r> for all roots, sampled words") {
  std::vector<CocharWeight> weights = {{10, 20, 14, 8}, {6, 10, 7, 4}, {1, 0, 0, 0},
                                       {0, 1, -1, 2}};
  const auto& els = weyl_elements();
  for (size_t k = 0; k < els.size(); k += 41) {
    const WeylWord& w = els[k].word;
    for (const auto& r : weights) {
      CocharWeight wr = weyl_apply_cochar(w, r);
      for (const Root& a : all_roots()) CHECK(pairing(weyl_apply(w, a), wr) == pairing(a, r));
    }
  }
}
