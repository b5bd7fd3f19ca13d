#include "f4/tori.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "f4/rational.hpp"

namespace f4 {
namespace tori {

using rootsys::copair;
using rootsys::pairing;

int g_value(const Diagram& d, const Root& alpha) {
  if (!alpha.positive()) throw std::invalid_argument("g_value expects a positive root");
  return d.level(alpha);
}

namespace {

// Exact solve of the overdetermined system sum_i r_i <alpha, a_i^vee> = level(alpha).
std::optional<CocharWeight> solve_linear(const Diagram& d) {
  Grading g(d);
  std::vector<std::array<Rat, 5>> rows;  // coefficients | rhs
  for (const auto& [lvl, roots] : g.levels())
    for (const Root& a : roots) {
      std::array<Rat, 5> row;
      for (int i = 1; i <= 4; ++i) row[i - 1] = copair(a, i);
      row[4] = lvl;
      rows.push_back(row);
    }
  if (rows.empty()) return CocharWeight{0, 0, 0, 0};
  // Gaussian elimination; require rank 4 and a consistent system.
  int rank = 0;
  for (int col = 0; col < 4 && rank < (int)rows.size(); ++col) {
    int piv = -1;
    for (int r = rank; r < (int)rows.size(); ++r)
      if (rows[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    Rat p = rows[rank][col];
    for (auto& x : rows[rank]) x /= p;
    for (int r = 0; r < (int)rows.size(); ++r) {
      if (r == rank) continue;
      Rat f = rows[r][col];
      if (f == 0) continue;
      for (int j = col; j < 5; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  if (rank != 4) return std::nullopt;
  for (int r = rank; r < (int)rows.size(); ++r)
    if (rows[r][4] != 0) return std::nullopt;  // inconsistent
  CocharWeight w;
  for (int i = 0; i < 4; ++i) w.r[i] = rat_to_long(rows[i][4]);
  return w;
}

}  // namespace

CocharWeight torus_of_orbit(const Diagram& d) {
  if (d.eps == std::array<int, 4>{0, 0, 0, 0}) return {0, 0, 0, 0};
  long r1 = d.level(Root(2, 3, 4, 2));
  long r4 = d.level(Root(1, 2, 3, 2));
  long r2 = r1 + 2 * r4 - d.level(Root(1, 1, 2, 2));
  long num = r2 + d.level(Root(1, 2, 4, 2));
  if (num % 2 != 0)
    throw std::logic_error("non-integral torus exponent r3 for diagram " + d.str());
  CocharWeight closed{r1, r2, num / 2, r4};
  auto solved = solve_linear(d);
  if (!solved || *solved != closed)
    throw std::logic_error("torus closed form and linear solve disagree for " + d.str());
  return closed;
}

CocharWeight torus_of_orbit(const std::string& label) {
  return torus_of_orbit(orbits::by_label(label).diagram);
}

CocharWeight compose(const CocharWeight& a, const CocharWeight& b) { return a + b; }

std::optional<TorusMatch> match_to_orbit(const CocharWeight& r) {
  static const std::vector<std::pair<std::string, CocharWeight>> targets = [] {
    std::vector<std::pair<std::string, CocharWeight>> t;
    for (const auto& rec : orbits::catalog())
      if (rec.label != "0") t.emplace_back(rec.label, torus_of_orbit(rec.diagram));
    return t;
  }();
  for (const WeylElement& w : rootsys::weyl_elements()) {
    CocharWeight image = rootsys::weyl_apply_cochar(w.word, r);
    for (const auto& [label, target] : targets)
      if (image == target) return TorusMatch{label, w.word};
  }
  return std::nullopt;
}

const std::vector<SubTorusEntry>& sub_torus_table() {
  static const std::vector<SubTorusEntry> table = {
      {"C3", "(2)", {0, 1, 0, 0}, 1, {Root(0, 0, 0, 1), Root(1, 1, 1, 0), Root(0, 1, 2, 0)}},
      {"B3", "(3)", {0, 0, 2, 2}, 1, {Root(0, 1, 1, 1), Root(0, 1, 2, 0), Root(1, 0, 0, 0)}},
      {"C3a1", "(2)", {0, 1, 0, 0}, 1, {Root(0, 1, 2, 1), Root(1, 1, 1, 0), Root(1, 1, 1, 1)}},
      {"B2", "(2|2)", {0, 2, 1, 0}, 2, {Root(1, 1, 1, 0), Root(0, 1, 2, 2)}},
      {"A2+A1t", "(2)", {2, 2, 0, 1}, 1, {Root(0, 1, 2, 2), Root(1, 1, 2, 1), Root(1, 2, 2, 0)}},
      {"A2t", "G2", {6, 10, 6, 0}, 6, {Root(0, 1, 2, 1), Root(1, 1, 1, 1)}},
      {"A2t", "G2(a1)", {2, 4, 2, 0}, 5, {Root(0, 1, 2, 1), Root(1, 1, 1, 1)}},
  };
  return table;
}

const SubTorusEntry& sub_torus(const std::string& host, const std::string& tag) {
  const auto& hostrec = orbits::by_label(host);
  std::string t = tag;
  t.erase(std::remove(t.begin(), t.end(), ' '), t.end());
  for (const auto& e : sub_torus_table()) {
    std::string et = e.tag;
    et.erase(std::remove(et.begin(), et.end(), ' '), et.end());
    if (e.host == hostrec.label && (et == t || ("(" + t + ")") == et || et == t + ")"))
      return e;
  }
  // Accept "G2a1" for "G2(a1)".
  for (const auto& e : sub_torus_table()) {
    std::string et = e.tag;
    et.erase(std::remove_if(et.begin(), et.end(),
                            [](char c) { return c == '(' || c == ')' || c == ' '; }),
             et.end());
    std::string tt = t;
    tt.erase(std::remove_if(tt.begin(), tt.end(),
                            [](char c) { return c == '(' || c == ')' || c == ' '; }),
             tt.end());
    if (e.host == hostrec.label && et == tt) return e;
  }
  throw std::invalid_argument("no sub-torus entry for host " + host + ", tag " + tag);
}

PartitionTorus sp_partition_torus(int two_n, const std::vector<int>& partition) {
  if (two_n <= 0 || two_n % 2 != 0) throw std::invalid_argument("group size must be even");
  int sum = std::accumulate(partition.begin(), partition.end(), 0);
  if (sum != two_n) throw std::invalid_argument("partition does not sum to the group size");
  std::map<int, int> mult;
  for (int p : partition) {
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
    mult[p]++;
  }
  for (const auto& [p, m] : mult)
    if (p % 2 == 1 && m % 2 == 1)
      throw std::invalid_argument("not a symplectic partition: odd part with odd multiplicity");
  PartitionTorus t;
  t.two_n = two_n;
  t.partition = partition;
  std::sort(t.partition.rbegin(), t.partition.rend());
  for (int p : t.partition)
    for (int k = p - 1; k >= 1 - p; k -= 2) t.exponents.push_back(k);
  std::sort(t.exponents.rbegin(), t.exponents.rend());
  return t;
}

std::optional<std::vector<int>> sp_weyl_match(const std::vector<int>& from,
                                              const std::vector<int>& to) {
  if (from.size() != to.size() || from.size() % 2 != 0)
    throw std::invalid_argument("exponent vectors must have equal even length");
  int n = (int)from.size() / 2;
  auto symmetric = [&](const std::vector<int>& v) {
    for (int i = 0; i < n; ++i)
      if (v[i] != -v[2 * n - 1 - i]) return false;
    return true;
  };
  if (!symmetric(from) || !symmetric(to))
    throw std::invalid_argument("exponent vector is not symplectic-symmetric");
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end());
  do {
    for (int signs = 0; signs < (1 << n); ++signs) {
      std::vector<int> image(2 * n);
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        int v = from[idx[i]];
        if (signs & (1 << i)) v = -v;
        image[i] = v;
        image[2 * n - 1 - i] = -v;
      }
      if (image == to) {
        std::vector<int> witness(n);
        for (int i = 0; i < n; ++i) witness[i] = (signs & (1 << i)) ? -(idx[i] + 1) : (idx[i] + 1);
        return witness;
      }
    }
  } while (std::next_permutation(idx.begin(), idx.end()));
  return std::nullopt;
}

}  // namespace tori
}  // namespace f4
