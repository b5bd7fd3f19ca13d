#include "f4/selftest.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "f4/chevalley.hpp"
#include "f4/descent.hpp"
#include "f4/exchange.hpp"
#include "f4/orbits.hpp"
#include "f4/rootsys.hpp"
#include "f4/stabilizers.hpp"
#include "f4/tori.hpp"

namespace f4::selftest {
namespace {

struct Check {
  std::ostringstream errors;
  bool ok = true;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      errors << (errors.tellp() > 0 ? "; " : "") << what;
    }
  }
};

std::vector<Root> roots_of(std::initializer_list<const char*> names) {
  std::vector<Root> v;
  for (const char* n : names) v.push_back(Root::parse(n));
  return v;
}

bool same_root_set(const std::vector<Root>& a, const std::vector<Root>& b) {
  std::set<Root> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  return sa == sb;
}

// --- criterion 1: the fifteen torus exponents, closed form vs linear solve --

void crit_torus_table(Check& c) {
  const std::map<std::string, CocharWeight> expected = {
      {"A1", {2, 3, 2, 1}},      {"A1t", {2, 4, 3, 2}},    {"A1+A1t", {3, 6, 4, 2}},
      {"A2", {4, 6, 4, 2}},      {"A2t", {4, 8, 6, 4}},    {"A2+A1t", {4, 8, 6, 3}},
      {"B2", {6, 10, 7, 4}},     {"A2t+A1", {5, 10, 7, 4}}, {"C3a1", {6, 11, 8, 4}},
      {"F4a3", {6, 12, 8, 4}},   {"B3", {10, 18, 12, 6}},  {"C3", {10, 19, 14, 8}},
      {"F4a2", {10, 20, 14, 8}}, {"F4a1", {14, 26, 18, 10}}, {"F4", {22, 42, 30, 16}},
  };
  for (const auto& [label, want] : expected) {
    // torus_of_orbit already cross-checks the closed form against the exact
    // linear solve and throws on disagreement.
    CocharWeight got = tori::torus_of_orbit(label);
    c.expect(got == want, label + ": got " + got.str() + ", want " + want.str());
  }
}

// --- criterion 2: half-dimensions -------------------------------------------

void crit_half_dims(Check& c) {
  const std::map<std::string, int> expected = {
      {"C3", 21},  {"B3", 21},     {"C3a1", 19}, {"A2t+A1", 18}, {"B2", 18},  {"A2+A1t", 17},
      {"A2t", 15}, {"A2", 15},     {"A1+A1t", 14}, {"A1t", 11},  {"A1", 8},   {"F4a3", 20},
      {"F4a2", 22}, {"F4a1", 23},  {"F4", 24},
  };
  for (const auto& [label, want] : expected) {
    const auto& rec = orbits::by_label(label);
    c.expect(rec.half_dim == want,
             label + ": half_dim " + std::to_string(rec.half_dim) + " != " + std::to_string(want));
    // the defining identity
    Grading g(rec.diagram);
    int u1 = (int)g.at(1).size();
    c.expect(u1 % 2 == 0, label + ": odd |U'(1)|");
    c.expect(rec.half_dim == g.dim_from(2) + u1 / 2, label + ": identity violated");
    c.expect(rec.dim == 2 * rec.half_dim, label + ": dim != 2 half_dim");
  }
}

// --- criterion 3: explicit gradings ------------------------------------------

void crit_gradings(Check& c) {
  auto level_equals = [&](const char* label, int lvl, std::initializer_list<const char*> roots) {
    Grading g(orbits::by_label(label).diagram);
    if (!same_root_set(g.at(lvl), roots_of(roots)))
      c.expect(false, std::string(label) + " level " + std::to_string(lvl) + " mismatch");
  };
  // B2: all five levels
  level_equals("B2", 1, {"0001", "0011", "0111", "0121"});
  level_equals("B2", 2, {"1000", "1100", "1110", "1120", "1220", "0122"});
  level_equals("B2", 3, {"1111", "1121", "1221", "1231"});
  level_equals("B2", 4, {"1122", "1222", "1232", "1242", "1342"});
  level_equals("B2", 6, {"2342"});
  {
    Grading g(orbits::by_label("B2").diagram);
    c.expect(g.size() == 20 && g.at(5).empty(), "B2 level structure");
  }
  level_equals("B3", 2, {"0100", "0110", "0111", "0120", "0121", "0122", "1000"});
  level_equals("F4a1", 2, {"0100", "0110", "0120", "0001", "0011", "1000"});
  level_equals("A2t+A1", 2, {"0111", "0121", "1111", "1121", "1220"});
  level_equals("C3a1", 2, {"0120", "0121", "0122", "1110", "1111"});
  level_equals("F4a2", 2,
               {"0001", "0011", "0100", "1100", "0110", "1110", "0120", "1120"});
  {  // F4a3: 12 roots n1*a1 + a2 + n3*a3 + n4*a4, six with n1=0 and six with n1=1
    Grading g(orbits::by_label("F4a3").diagram);
    const auto& lvl2 = g.at(2);
    c.expect(lvl2.size() == 12, "F4a3 |U'(2)| != 12");
    int n1zero = 0;
    for (const Root& r : lvl2) {
      c.expect(r.n[1] == 1, "F4a3 level-2 root with n2 != 1");
      if (r.n[0] == 0) ++n1zero;
    }
    c.expect(n1zero == 6, "F4a3 n1=0 count");
    std::vector<Root> zeros;
    for (const Root& r : lvl2)
      if (r.n[0] == 0) zeros.push_back(r);
    c.expect(same_root_set(zeros, roots_of({"0100", "0110", "0120", "0111", "0121", "0122"})),
             "F4a3 n1=0 roots");
  }
  {  // A2+A1t: nine roots with n3=2, dim U(2) = 14
    Grading g(orbits::by_label("A2+A1t").diagram);
    c.expect(g.at(2).size() == 9, "A2+A1t |U'(2)| != 9");
    for (const Root& r : g.at(2)) c.expect(r.n[2] == 2, "A2+A1t level-2 root with n3 != 2");
    c.expect(g.dim_from(2) == 14, "A2+A1t dim U(2) != 14");
  }
  level_equals("A1t", 2, {"0122", "1122", "1222", "1232", "1242", "1342", "2342"});
  level_equals("A1+A1t", 2, {"1220", "1221", "1222", "1231", "1232", "1242"});
}

// --- criterion 4: composition identities -------------------------------------

void crit_compositions(Check& c) {
  const std::vector<std::pair<std::string, std::string>> want = {
      {"C3o2", "F4a2"},    {"B3o3", "F4a2"},     {"C3a1o2", "F4a3"}, {"B2o22", "F4a3"},
      {"A2A1to2", "F4a3"}, {"A2toG2", "F4a2"},   {"A2toG2a1", "F4a3"},
  };
  for (const auto& [name, leading] : want) {
    auto rep = descent::verify_composition(name);
    c.expect(rep.pass, name + ": " + rep.detail);
    c.expect(rep.identity.leading == leading, name + ": wrong leading orbit");
  }
}

// --- criterion 5: Chevalley engine -------------------------------------------

void crit_chevalley(Check& c) {
  using namespace rootsys;
  c.expect((int)weyl_elements().size() == kWeylOrder, "Weyl order != 1152");

  // |N_{a,b}| = p + 1 for every pair with a + b a root.
  const auto& roots = all_roots();
  for (const Root& a : roots)
    for (const Root& b : roots) {
      std::array<int, 4> s;
      for (int k = 0; k < 4; ++k) s[k] = a.n[k] + b.n[k];
      if (s == std::array<int, 4>{0, 0, 0, 0} || !is_root(s)) continue;
      int n = chevalley::structure_constant(a, b);
      int p = chevalley::string_down(a, b);
      if (std::abs(n) != p + 1) {
        c.expect(false, "|N| != p+1 at " + a.str() + "," + b.str());
        return;
      }
    }

  // Jacobi identity on every basis triple, via structure constants.
  auto bracket_all = [](const std::vector<std::pair<int, int>>& xs, int z) {
    std::map<int, long> acc;
    for (auto [idx, coeff] : xs)
      for (auto [j, cj] : chevalley::basis_bracket(idx, z)) acc[j] += (long)coeff * cj;
    return acc;
  };
  for (int x = 0; x < kLieDim; ++x)
    for (int y = x + 1; y < kLieDim; ++y) {
      auto xy = chevalley::basis_bracket(x, y);
      for (int z = y; z < kLieDim; ++z) {
        std::map<int, long> total;
        for (auto [j, v] : bracket_all(chevalley::basis_bracket(x, y), z)) total[j] += v;
        for (auto [j, v] : bracket_all(chevalley::basis_bracket(y, z), x)) total[j] += v;
        for (auto [j, v] : bracket_all(chevalley::basis_bracket(z, x), y)) total[j] += v;
        for (auto [j, v] : total)
          if (v != 0) {
            c.expect(false, "Jacobi fails at triple " + std::to_string(x) + "," +
                                std::to_string(y) + "," + std::to_string(z));
            return;
          }
      }
    }

  // h_O(t) x_a(r) h_O(t)^{-1} = x_a(t^n r) for every orbit and every graded root.
  const Rat t(2);
  for (const auto& rec : orbits::catalog()) {
    if (rec.label == "0") continue;
    CocharWeight w = tori::torus_of_orbit(rec.diagram);
    AdjointElement h = chevalley::torus_power(w, t);
    AdjointElement hinv = chevalley::torus_power(w, Rat(1) / t);
    Grading g(rec.diagram);
    for (const auto& [lvl, lroots] : g.levels()) {
      Rat tn(1);
      for (int k = 0; k < lvl; ++k) tn *= t;
      for (const Root& a : lroots) {
        c.expect(rootsys::pairing(a, w) == lvl, rec.label + ": pairing != level at " + a.str());
        AdjointElement lhs = h * chevalley::unip(a, Rat(1)) * hinv;
        AdjointElement rhs = chevalley::unip(a, tn);
        if (lhs != rhs) {
          c.expect(false, rec.label + ": torus conjugation fails at " + a.str());
          return;
        }
      }
    }
  }
}

// --- criterion 6: displayed commutator relations ------------------------------

void crit_commutators(Check& c) {
  struct Fixture {
    const char* alpha;
    const char* beta;
    std::vector<std::pair<const char*, int>> terms;  // (root, |coefficient|)
  };
  const std::vector<Fixture> fixtures = {
      {"1110", "0010", {{"1120", 2}}},
      {"0110", "0010", {{"0120", 2}}},
      {"1100", "0010", {{"1110", 1}, {"1120", 1}}},
      {"0100", "0010", {{"0110", 1}, {"0120", 1}}},
      {"-1100", "1221", {{"0121", 1}, {"1342", 1}}},
  };
  for (const auto& f : fixtures) {
    auto exp = chevalley::commutator_formula(Root::parse(f.alpha), Root::parse(f.beta));
    std::map<Root, Int> got;
    for (const auto& term : exp) got[term.root] = abs(term.coeff);
    std::map<Root, Int> want;
    for (const auto& [r, m] : f.terms) want[Root::parse(r)] = m;
    c.expect(got == want, std::string("commutator [") + f.alpha + "," + f.beta + "] mismatch");
  }
}

// --- criterion 7: stabilizer computations ------------------------------------

void crit_stabilizers(Check& c) {
  using namespace stabilizers;
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> d(-4, 4);
  RatMat j(3, 3);
  j.at(0, 2) = 1;
  j.at(1, 1) = 1;
  j.at(2, 0) = 1;
  for (int trial = 0; trial < 100; ++trial) {
    Mat3J a, b;
    for (int k = 0; k < 6; ++k) {
      a.r[k] = d(rng);
      b.r[k] = d(rng);
    }
    c.expect(f4a3_stab(a, b).dimension >= 1, "kernel lost the trivial line");
    // Direct substitution of (h1, g1) = (-2 I2, I3): each residual must vanish.
    RatMat ma = a.matrix(), mb = b.matrix();
    RatMat res1 = ma + j * ma.transpose() * j - ma.scaled(2);           // a1 = -2, b1 = 0
    RatMat res2 = mb + j * mb.transpose() * j - mb.scaled(2);           // c1 = 0, d1 = -2
    c.expect(res1 == RatMat(3, 3) && res2 == RatMat(3, 3), "trivial solution residual nonzero");
  }
  // The two quoted characters have only the trivial solution.
  {
    Mat3J A, B;
    // A rows ((0,1,0),(0,0,1),(1,0,0)); B rows ((1,0,0),(1,0,0),(0,1,1)).
    A = Mat3J::from_matrix([] {
      RatMat m(3, 3);
      m.at(0, 1) = 1;
      m.at(1, 2) = 1;
      m.at(2, 0) = 1;
      return m;
    }());
    B = Mat3J::from_matrix([] {
      RatMat m(3, 3);
      m.at(0, 0) = 1;
      m.at(1, 0) = 1;
      m.at(2, 1) = 1;
      m.at(2, 2) = 1;
      return m;
    }());
    c.expect(f4a3_stab(A, B).dimension == 1, "C3(a1) character: expected trivial stabilizer");
  }
  {
    Mat3J A, B;
    A = Mat3J::from_matrix([] {
      RatMat m(3, 3);
      m.at(0, 2) = 1;
      m.at(1, 1) = 1;
      m.at(2, 0) = 1;
      return m;
    }());
    B = Mat3J::from_matrix([] {
      RatMat m(3, 3);
      m.at(1, 0) = 1;
      m.at(2, 1) = 1;
      return m;
    }());
    c.expect(f4a3_stab(A, B).dimension == 1, "B2 character: expected trivial stabilizer");
  }
  // Discriminant equivalence on the 125-point grid, and f(1,0,0) = -27.
  c.expect(f4a3_discriminant(1, 0, 0) == Rat(-27), "f(1,0,0) != -27");
  for (int m = -2; m <= 2; ++m)
    for (int n = -2; n <= 2; ++n)
      for (int z = -2; z <= 2; ++z) {
        Mat3J A, B;
        RatMat am(3, 3);
        am.at(0, 1) = m;
        am.at(0, 2) = n;
        am.at(1, 2) = m;
        am.at(2, 0) = 1;
        A = Mat3J::from_matrix(am);
        RatMat bm = RatMat::identity(3);
        bm.at(0, 2) = z;
        B = Mat3J::from_matrix(bm);
        Rat f = f4a3_discriminant(m, n, z);
        int dim = f4a3_stab(A, B).dimension;
        c.expect((f != 0) == (dim == 1),
                 "grid point (" + std::to_string(m) + "," + std::to_string(n) + "," +
                     std::to_string(z) + "): f and kernel disagree");
        Rat det = linalg::det(f4a3_reduced_system(m, n, z));
        c.expect(det == -f, "reduced-system determinant != -f on the grid");
      }
}

// --- criterion 8: dimension equations ----------------------------------------

void crit_dimension_equations(Check& c) {
  for (const auto& dc : descent::dim_examples())
    c.expect(descent::check_dim_equation(dc), "dimension identity fails: " + dc.description);

  auto conclusions = [](const PairReport& r, size_t dir) {
    std::vector<long> es;
    for (const auto& o : r.directions.at(dir).options)
      if (o.feasible) es.push_back(o.dim_e);
    std::sort(es.begin(), es.end());
    return es;
  };
  {
    auto r = descent::pair_feasibility("SL3,SL3");
    c.expect(conclusions(r, 0) == std::vector<long>{8}, "(SL3,SL3) conclusion");
  }
  {
    auto r = descent::pair_feasibility("SL2xSL2,Sp4");
    c.expect(conclusions(r, 0) == std::vector<long>{8}, "(SL2xSL2,Sp4) forward");
    c.expect(conclusions(r, 1) == std::vector<long>{8, 8}, "(SL2xSL2,Sp4) reverse");
  }
  {
    auto r = descent::pair_feasibility("SL2,SL4");
    c.expect(conclusions(r, 0) == std::vector<long>{8}, "(SL2,SL4) forward");
    c.expect(conclusions(r, 1).empty(), "(SL2,SL4) reverse must be infeasible");
    bool has10 = false;
    for (const auto& o : r.directions[1].options) has10 |= (o.dim_e == 10 && !o.feasible);
    c.expect(has10, "(SL2,SL4) reverse: dim E = 10 infeasibility flag");
  }
  {
    auto r = descent::pair_feasibility("SO3,G2");
    c.expect(conclusions(r, 0) == std::vector<long>{8}, "(SO3,G2) forward");
    c.expect(conclusions(r, 1).empty(), "(SO3,G2) reverse must be infeasible");
  }
  {
    auto r = descent::pair_feasibility("SL2,Sp6");
    c.expect(conclusions(r, 0) == std::vector<long>{8, 11}, "(SL2,Sp6) forward");
    c.expect(conclusions(r, 1) == std::vector<long>{14, 15}, "(SL2,Sp6) reverse");
    bool has13 = false;
    for (const auto& o : r.directions[1].options) has13 |= (o.dim_e == 13 && !o.feasible);
    c.expect(has13, "(SL2,Sp6) reverse: dim E = 13 infeasibility flag");
  }
  // Descent table.
  const std::map<std::pair<std::string, long>, std::pair<long, bool>> want = {
      {{"C3", 1}, {22, true}},     {{"B3", 1}, {22, true}},     {{"C3a1", 1}, {20, true}},
      {{"A2t+A1", 1}, {19, true}}, {{"B2", 2}, {20, true}},     {{"A2+A1t", 1}, {18, true}},
      {{"A2t", 6}, {21, true}},    {{"A2t", 5}, {20, true}},    {{"A2", 3}, {18, true}},
      {{"A1+A1t", 2}, {16, false}}, {{"A1t", 6}, {17, true}},   {{"A1", 9}, {17, true}},
      {{"A1", 8}, {16, false}},    {{"A1", 6}, {14, true}},
  };
  auto table = descent::descent_table();
  c.expect(table.size() == want.size(), "descent table size");
  for (const auto& row : table) {
    auto it = want.find({row.orbit, row.dim_sigma});
    if (it == want.end()) {
      c.expect(false, "unexpected descent row " + row.orbit);
      continue;
    }
    c.expect(row.dim_e == it->second.first && row.feasible == it->second.second,
             "descent row mismatch for " + row.orbit + " sigma=" + std::to_string(row.dim_sigma));
  }
}

// --- criterion 9: symplectic cross-checks -------------------------------------

void crit_symplectic(Check& c) {
  auto t4 = tori::sp_partition_torus(4, {4});
  c.expect(t4.exponents == std::vector<int>{3, 1, -1, -3}, "h_(4)");
  auto t211 = tori::sp_partition_torus(4, {2, 1, 1});
  c.expect(t211.exponents == std::vector<int>{1, 0, 0, -1}, "h_(21^2)");
  auto t222 = tori::sp_partition_torus(6, {2, 2, 2});
  c.expect(t222.exponents == std::vector<int>{1, 1, 1, -1, -1, -1}, "h_(2^3)");

  // (21^2) o (2) = (2^2) with no conjugation.
  std::vector<int> comp = t211.exponents;
  comp[1] += 1;
  comp[2] -= 1;
  c.expect(comp == tori::sp_partition_torus(4, {2, 2}).exponents, "(21^2) o (2) != (2^2)");

  // (2^3) o (3): composite diag exponents, then a signed permutation to (42).
  std::vector<int> comp6 = t222.exponents;
  const int so3[6] = {2, 0, -2, 2, 0, -2};
  for (int i = 0; i < 6; ++i) comp6[i] += so3[i];
  c.expect(comp6 == std::vector<int>({3, 1, -1, 1, -1, -3}), "(2^3) o (3) composite");
  auto witness = tori::sp_weyl_match(comp6, tori::sp_partition_torus(6, {4, 2}).exponents);
  c.expect(witness.has_value(), "(2^3) o (3): no signed permutation to (42)");
}

// --- criterion 10: exchange fixtures ------------------------------------------

void crit_exchange(Check& c) {
  for (const auto& name : exchange::builtin_fixture_names()) {
    auto fx = exchange::builtin_fixture(name);
    auto res = exchange::replay(fx.datum, fx.script);
    c.expect(res.completed, name + ": " + res.failure);
  }
}

CriterionResult run_one(int number, const std::string& title, double budget_seconds,
                        const std::function<void(Check&)>& fn) {
  CriterionResult r;
  r.number = number;
  r.title = title;
  Check c;
  auto start = std::chrono::steady_clock::now();
  try {
    fn(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_seconds > 0 && r.seconds >= budget_seconds)
    c.expect(false, "runtime " + std::to_string(r.seconds) + "s over budget");
  r.pass = c.ok;
  r.detail = c.errors.str();
  return r;
}

}  // namespace

std::vector<CriterionResult> run_all() {
  std::vector<CriterionResult> out;
  out.push_back(run_one(1, "torus table (15 orbits, closed form == linear solve)", 1.0,
                        crit_torus_table));
  out.push_back(run_one(2, "half-dimension table and defining identity", 1.0, crit_half_dims));
  out.push_back(run_one(3, "graded root sets match the displayed lists", 1.0, crit_gradings));
  out.push_back(run_one(4, "composition identities with Weyl witnesses", 5.0, crit_compositions));
  out.push_back(run_one(5, "Chevalley engine (1152 Weyl, |N|=p+1, Jacobi, torus eq)", 60.0,
                        crit_chevalley));
  out.push_back(run_one(6, "displayed commutator relations", 5.0, crit_commutators));
  out.push_back(run_one(7, "stabilizer systems and discriminant grid", 5.0, crit_stabilizers));
  out.push_back(run_one(8, "dimension equations, pair feasibility, descent table", 1.0,
                        crit_dimension_equations));
  out.push_back(run_one(9, "symplectic partition tori and cross-checks", 1.0, crit_symplectic));
  out.push_back(run_one(10, "root-exchange proof-chain fixtures", 1.0, crit_exchange));
  return out;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace f4::selftest
