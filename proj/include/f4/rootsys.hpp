#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace f4 {

// A root of F4 written in the basis of simple roots, n1*a1 + n2*a2 + n3*a3 + n4*a4.
// Only the 48 coefficient vectors that are actual roots can be constructed.
struct Root {
  std::array<int, 4> n{0, 0, 0, 0};

  Root() = default;
  explicit Root(std::array<int, 4> coeffs);
  Root(int n1, int n2, int n3, int n4) : Root(std::array<int, 4>{n1, n2, n3, n4}) {}

  int height() const { return n[0] + n[1] + n[2] + n[3]; }
  bool positive() const { return height() > 0; }
  Root operator-() const;
  bool operator==(const Root& o) const { return n == o.n; }
  bool operator!=(const Root& o) const { return n != o.n; }
  bool operator<(const Root& o) const;  // canonical order: height, then lex

  // Text form "n1n2n3n4", with a leading '-' for negative roots, e.g. "-1100".
  std::string str() const;
  static Root parse(const std::string& s);
};

// A word in the simple reflections, printed as w[i1 i2 ... im].  The word
// denotes the product of the simple reflections in the listed order; as a
// group element it acts with the rightmost letter applied first.
struct WeylWord {
  std::vector<int> letters;  // values in 1..4

  WeylWord() = default;
  explicit WeylWord(std::vector<int> l);

  bool empty() const { return letters.empty(); }
  std::string str() const;                       // "w[1234]", "e" for the empty word
  static WeylWord parse(const std::string& s);   // accepts "w[1234]", "[1234]", "1234", "e"
};

// Exponent vector (r1..r4) of a one-parameter torus t -> h(t^r1, t^r2, t^r3, t^r4).
struct CocharWeight {
  std::array<long, 4> r{0, 0, 0, 0};

  CocharWeight() = default;
  CocharWeight(long r1, long r2, long r3, long r4) : r{r1, r2, r3, r4} {}

  CocharWeight operator+(const CocharWeight& o) const {
    return {r[0] + o.r[0], r[1] + o.r[1], r[2] + o.r[2], r[3] + o.r[3]};
  }
  bool operator==(const CocharWeight& o) const { return r == o.r; }
  bool operator!=(const CocharWeight& o) const { return r != o.r; }
  std::string str() const;
  static CocharWeight parse(const std::string& s);  // "r1,r2,r3,r4"
};

// One Weyl group element: its permutation of the 48 roots plus one
// representative word (shortest, from the breadth-first enumeration).
struct WeylElement {
  std::array<std::uint8_t, 48> perm{};  // root id -> root id
  WeylWord word;
};

namespace rootsys {

inline constexpr int kNumRoots = 48;
inline constexpr int kNumPositive = 24;
inline constexpr int kWeylOrder = 1152;

bool is_root(const std::array<int, 4>& n);

// The 24 positive roots in canonical order (height, then lex on coefficients).
const std::vector<Root>& positive_roots();
// All 48 roots: positives in canonical order, then their negatives in the same order.
const std::vector<Root>& all_roots();

int root_id(const Root& r);          // index into all_roots()
const Root& root_of_id(int id);

// Simple root a_i, i in 1..4.
Root simple_root(int i);

// Coroot pairing <alpha, a_i^vee> = 2(alpha, a_i)/(a_i, a_i).
int copair(const Root& alpha, int i);

// Twice the squared length; 4 for long roots, 2 for short ones.
int norm2x(const Root& alpha);
bool is_long(const Root& alpha);

// Simple reflection s_i(alpha) = alpha - <alpha, a_i^vee> a_i.
Root reflect(int i, const Root& alpha);

// Apply a word to a root / cocharacter weight (rightmost letter first).
Root weyl_apply(const WeylWord& w, const Root& alpha);
CocharWeight weyl_apply_cochar(const WeylWord& w, const CocharWeight& r);

// Conjugation exponent of the torus h(t^r) on the root space of alpha:
// <alpha, r> = sum_i r_i <alpha, a_i^vee>.
long pairing(const Root& alpha, const CocharWeight& r);

// All 1152 Weyl elements, deduplicated by their root permutation, in
// breadth-first order (word length, then letter-lexicographic).
const std::vector<WeylElement>& weyl_elements();

Root apply_element(const WeylElement& w, const Root& alpha);

}  // namespace rootsys
}  // namespace f4
