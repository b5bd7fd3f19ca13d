#include "f4/chevalley.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace f4 {

using rootsys::all_roots;
using rootsys::copair;
using rootsys::is_root;
using rootsys::norm2x;
using rootsys::positive_roots;
using rootsys::root_id;
using rootsys::root_of_id;

AdjointElement::AdjointElement() : m_(kLieDim * kLieDim, Rat(0)) {
  for (int i = 0; i < kLieDim; ++i) at(i, i) = 1;
}

AdjointElement AdjointElement::zero() {
  AdjointElement z;
  for (int i = 0; i < kLieDim; ++i) z.at(i, i) = 0;
  return z;
}

AdjointElement AdjointElement::operator*(const AdjointElement& o) const {
  AdjointElement r = zero();
  for (int i = 0; i < kLieDim; ++i)
    for (int k = 0; k < kLieDim; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < kLieDim; ++j) {
        const Rat& b = o.at(k, j);
        if (b == 0) continue;
        r.at(i, j) += a * b;
      }
    }
  return r;
}

AdjointElement AdjointElement::inverse() const {
  AdjointElement a = *this;
  AdjointElement inv;
  for (int col = 0; col < kLieDim; ++col) {
    int piv = -1;
    for (int r = col; r < kLieDim; ++r)
      if (a.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("singular adjoint element");
    if (piv != col)
      for (int j = 0; j < kLieDim; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    Rat d = a.at(col, col);
    for (int j = 0; j < kLieDim; ++j) {
      a.at(col, j) /= d;
      inv.at(col, j) /= d;
    }
    for (int r = 0; r < kLieDim; ++r) {
      if (r == col) continue;
      Rat f = a.at(r, col);
      if (f == 0) continue;
      for (int j = 0; j < kLieDim; ++j) {
        a.at(r, j) -= f * a.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

bool AdjointElement::is_identity() const {
  static const AdjointElement id;
  return *this == id;
}

namespace chevalley {
namespace {

int add_root_id(int a, int b) {
  std::array<int, 4> s;
  const Root &ra = root_of_id(a), &rb = root_of_id(b);
  for (int k = 0; k < 4; ++k) s[k] = ra.n[k] + rb.n[k];
  if (!is_root(s)) return -1;
  Root r;
  r.n = s;
  return root_id(r);
}

bool is_zero_sum(int a, int b) {
  const Root &ra = root_of_id(a), &rb = root_of_id(b);
  for (int k = 0; k < 4; ++k)
    if (ra.n[k] + rb.n[k] != 0) return false;
  return true;
}

// Structure-constant table, built once.  Signs follow the extraspecial-pair
// convention: positive roots in canonical order; for each non-simple positive
// root v the pair (r,s), r+s=v with r minimal, gets N_{r,s} = p+1 > 0.  All
// other constants are forced by
//   N_{b,a} = -N_{a,b},   N_{-a,-b} = -N_{a,b},
//   a+b+c=0  =>  N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b),
// and, for a special pair (a,b) with extraspecial (a1,b1), the Jacobi
// identity on (e_{-a}, e_{-b}, e_{b1}):
//   N(-b,b1) N(-a,b1-b) + N(b1,-a) N(-b,b1-a) + N(-a,-b) N(b1,-v) = 0.
struct ConstantTable {
  std::array<std::array<int, 48>, 48> n{};  // 0 when a+b not a root
  std::array<int, 24> extra_first{};        // extraspecial pair per positive non-simple root

  ConstantTable() {
    std::map<std::pair<int, int>, Rat> memo;
    for (auto& row : n) row.fill(0);
    extra_first.fill(-1);
    for (int a = 0; a < 48; ++a)
      for (int b = 0; b < 48; ++b) {
        if (a == b || is_zero_sum(a, b)) continue;
        if (add_root_id(a, b) < 0) continue;
        Rat v = value(a, b, memo);
        if (v.get_den() != 1 || !v.get_num().fits_sint_p())
          throw std::logic_error("non-integral structure constant");
        n[a][b] = (int)v.get_num().get_si();
      }
  }

  static int string_down_ids(int a, int b) {
    const Root &ra = root_of_id(a), &rb = root_of_id(b);
    int p = 0;
    while (true) {
      std::array<int, 4> s;
      for (int k = 0; k < 4; ++k) s[k] = rb.n[k] - (p + 1) * ra.n[k];
      bool zero = s == std::array<int, 4>{0, 0, 0, 0};
      if (zero || !is_root(s)) break;
      ++p;
    }
    return p;
  }

  Rat value(int a, int b, std::map<std::pair<int, int>, Rat>& memo) {
    auto key = std::make_pair(a, b);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Rat v = compute(a, b, memo);
    memo[key] = v;
    return v;
  }

  Rat value_or_zero(int a, int b, std::map<std::pair<int, int>, Rat>& memo) {
    if (a == b || is_zero_sum(a, b) || add_root_id(a, b) < 0) return Rat(0);
    return value(a, b, memo);
  }

  Rat compute(int a, int b, std::map<std::pair<int, int>, Rat>& memo) {
    const Root &ra = root_of_id(a), &rb = root_of_id(b);
    bool pa = ra.positive(), pb = rb.positive();
    if (!pa && !pb) return -value(root_id(-ra), root_id(-rb), memo);
    if (pa && pb) return positive_pair(a, b, memo);
    // Mixed pair: rotate a+b+c=0 into a pair of like signs.
    int vid = add_root_id(a, b);
    const Root& rv = root_of_id(vid);
    int c = root_id(-rv);
    if (rv.positive()) {
      if (pa) {
        // N(a,b) = (c,c)/(a,a) N(b,c), with b, c both negative.
        return frac(norm2x(rv), norm2x(ra)) * value(b, c, memo);
      }
      return -value(b, a, memo);
    }
    // v negative: (c, a) both positive when a>0.
    if (pa) return frac(norm2x(rv), norm2x(rb)) * value(c, a, memo);
    return -value(b, a, memo);
  }

  Rat positive_pair(int a, int b, std::map<std::pair<int, int>, Rat>& memo) {
    if (root_of_id(b) < root_of_id(a)) return -value(b, a, memo);
    int vid = add_root_id(a, b);
    int a1 = extraspecial_first(vid);
    if (a == a1) return Rat(string_down_ids(a, b) + 1);
    int b1 = vid_minus(vid, a1);
    int na = root_id(-root_of_id(a)), nb = root_id(-root_of_id(b));
    int nv = root_id(-root_of_id(vid));
    Rat t2(0), t3(0);
    if (add_root_id(nb, b1) >= 0)
      t2 = value(nb, b1, memo) * value_or_zero(na, add_root_id(nb, b1), memo);
    if (add_root_id(b1, na) >= 0)
      t3 = value(b1, na, memo) * value_or_zero(nb, add_root_id(b1, na), memo);
    Rat denom = value(b1, nv, memo);  // proportional to the extraspecial base, never zero
    return (t2 + t3) / denom;
  }

  int vid_minus(int vid, int a) {
    std::array<int, 4> s;
    for (int k = 0; k < 4; ++k) s[k] = root_of_id(vid).n[k] - root_of_id(a).n[k];
    Root r;
    r.n = s;
    return root_id(r);
  }

  int extraspecial_first(int vid) {
    if (extra_first[vid] >= 0) return extra_first[vid];
    const Root& v = root_of_id(vid);
    for (int a = 0; a < 24; ++a) {  // canonical order scan: first hit is minimal
      std::array<int, 4> s;
      for (int k = 0; k < 4; ++k) s[k] = v.n[k] - root_of_id(a).n[k];
      if (s == std::array<int, 4>{0, 0, 0, 0}) continue;
      if (is_root(s)) {
        Root r;
        r.n = s;
        if (r.positive()) {
          extra_first[vid] = a;
          return a;
        }
      }
    }
    throw std::logic_error("no extraspecial pair for " + v.str());
  }
};

const ConstantTable& constants() {
  static const ConstantTable t;
  return t;
}

}  // namespace

int structure_constant(const Root& alpha, const Root& beta) {
  std::array<int, 4> s;
  for (int k = 0; k < 4; ++k) s[k] = alpha.n[k] + beta.n[k];
  if (!is_root(s)) return 0;
  return constants().n[root_id(alpha)][root_id(beta)];
}

int string_down(const Root& alpha, const Root& beta) {
  return ConstantTable::string_down_ids(root_id(alpha), root_id(beta));
}

std::array<int, 4> coroot_coords(const Root& alpha) {
  // alpha^vee = sum_i n_i (a_i,a_i)/(alpha,alpha) a_i^vee.
  std::array<int, 4> c;
  int d = norm2x(alpha);
  static const int di[4] = {4, 4, 2, 2};
  for (int i = 0; i < 4; ++i) {
    int num = alpha.n[i] * di[i];
    if (num % d != 0) throw std::logic_error("non-integral coroot");
    c[i] = num / d;
  }
  return c;
}

std::vector<std::pair<int, int>> basis_bracket(int a, int b) {
  std::vector<std::pair<int, int>> out;
  if (a >= 48 && b >= 48) return out;  // Cartan is abelian
  if (a >= 48) {  // [h_i, e_beta] = <beta, a_i^vee> e_beta
    int c = copair(root_of_id(b), a - 48 + 1);
    if (c != 0) out.emplace_back(b, c);
    return out;
  }
  if (b >= 48) {
    int c = copair(root_of_id(a), b - 48 + 1);
    if (c != 0) out.emplace_back(a, -c);
    return out;
  }
  if (is_zero_sum(a, b)) {  // [e_a, e_{-a}] = a^vee
    auto cc = coroot_coords(root_of_id(a));
    for (int i = 0; i < 4; ++i)
      if (cc[i] != 0) out.emplace_back(48 + i, cc[i]);
    return out;
  }
  int s = add_root_id(a, b);
  if (s >= 0) {
    int n = constants().n[a][b];
    if (n != 0) out.emplace_back(s, n);
  }
  return out;
}

const AdjointElement& ad_matrix(const Root& alpha) {
  static std::map<int, AdjointElement> cache;
  int id = root_id(alpha);
  auto it = cache.find(id);
  if (it != cache.end()) return it->second;
  AdjointElement m = AdjointElement::zero();
  for (int b = 0; b < kLieDim; ++b)
    for (auto [row, c] : basis_bracket(id, b)) m.at(row, b) = c;
  return cache.emplace(id, std::move(m)).first->second;
}

AdjointElement unip(const Root& alpha, const Rat& t) {
  const AdjointElement& ad = ad_matrix(alpha);
  AdjointElement result;  // identity
  AdjointElement power = ad;
  Rat fact(1);
  for (int k = 1;; ++k) {
    fact *= Rat(1, k) * t;
    bool zero = true;
    for (int i = 0; i < kLieDim && zero; ++i)
      for (int j = 0; j < kLieDim; ++j)
        if (power.at(i, j) != 0) {
          zero = false;
          break;
        }
    if (zero) break;
    for (int i = 0; i < kLieDim; ++i)
      for (int j = 0; j < kLieDim; ++j)
        if (power.at(i, j) != 0) result.at(i, j) += fact * power.at(i, j);
    if (k > 8) throw std::logic_error("ad e_alpha not nilpotent");
    power = power * ad;
  }
  return result;
}

AdjointElement torus(const std::array<Rat, 4>& t) {
  for (const Rat& x : t)
    if (x == 0) throw std::invalid_argument("torus parameter must be nonzero");
  AdjointElement m;
  for (int a = 0; a < 48; ++a) {
    Rat v(1);
    for (int i = 1; i <= 4; ++i) {
      int e = copair(root_of_id(a), i);
      for (int k = 0; k < e; ++k) v *= t[i - 1];
      for (int k = 0; k < -e; ++k) v /= t[i - 1];
    }
    m.at(a, a) = v;
  }
  return m;
}

AdjointElement torus_power(const CocharWeight& r, const Rat& t) {
  if (t == 0) throw std::invalid_argument("torus parameter must be nonzero");
  std::array<Rat, 4> v;
  for (int i = 0; i < 4; ++i) {
    Rat x(1);
    for (long k = 0; k < r.r[i]; ++k) x *= t;
    for (long k = 0; k < -r.r[i]; ++k) x /= t;
    v[i] = x;
  }
  return torus(v);
}

AdjointElement weyl_rep(int i) {
  Root a = rootsys::simple_root(i);
  return unip(a, 1) * unip(-a, -1) * unip(a, 1);
}

AdjointElement weyl_rep(const WeylWord& w) {
  AdjointElement m;
  for (int i : w.letters) m = m * weyl_rep(i);
  return m;
}

AdjointElement unipotent_log(const AdjointElement& g) {
  AdjointElement n = g;
  for (int i = 0; i < kLieDim; ++i) n.at(i, i) -= 1;
  AdjointElement log = AdjointElement::zero();
  AdjointElement power = n;
  for (int k = 1;; ++k) {
    bool zero = true;
    for (int i = 0; i < kLieDim && zero; ++i)
      for (int j = 0; j < kLieDim; ++j)
        if (power.at(i, j) != 0) {
          zero = false;
          break;
        }
    if (zero) break;
    if (k > 30) throw std::domain_error("matrix is not unipotent");
    Rat c(((k + 1) % 2 == 0) ? 1 : -1, k);
    for (int i = 0; i < kLieDim; ++i)
      for (int j = 0; j < kLieDim; ++j)
        if (power.at(i, j) != 0) log.at(i, j) += c * power.at(i, j);
    power = power * n;
  }
  return log;
}

Rat log_coefficient(const AdjointElement& log_g, const Root& alpha) {
  // ad(e_alpha) is the only basis element with a nonzero (e_alpha, h_i) entry.
  int a = root_id(alpha);
  for (int i = 1; i <= 4; ++i) {
    int c = copair(alpha, i);
    if (c != 0) return log_g.at(a, 48 + i - 1) / Rat(-c);
  }
  throw std::logic_error("root with zero pairing against every coroot");
}

CommutatorExpansion commutator_formula(const Root& alpha, const Root& beta) {
  if (alpha == beta || alpha == -beta)
    throw std::invalid_argument("commutator_formula requires alpha != +-beta");
  Rat r(1), s(1);
  AdjointElement ua = unip(alpha, r), ub = unip(beta, s);
  AdjointElement c = ub.inverse() * ua.inverse() * ub * ua;
  AdjointElement log = unipotent_log(c);
  CommutatorExpansion out;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      std::array<int, 4> v;
      for (int k = 0; k < 4; ++k) v[k] = i * alpha.n[k] + j * beta.n[k];
      if (!is_root(v)) continue;
      Root rv;
      rv.n = v;
      Rat coeff = log_coefficient(log, rv);
      if (coeff == 0) continue;
      if (coeff.get_den() != 1) throw std::logic_error("non-integral commutator coefficient");
      out.push_back({rv, coeff.get_num(), i, j});
    }
  std::sort(out.begin(), out.end(),
            [](const CommutatorTerm& x, const CommutatorTerm& y) { return x.root < y.root; });
  // The listed factors must reproduce the commutator exactly.
  AdjointElement check;
  for (const auto& term : out) check = check * unip(term.root, Rat(term.coeff));
  if (check != c) throw std::logic_error("commutator expansion failed to collect");
  return out;
}

std::vector<std::pair<Root, Rat>> normal_form(const AdjointElement& g) {
  std::vector<std::pair<Root, Rat>> coeffs;
  for (const Root& a : positive_roots()) coeffs.emplace_back(a, Rat(0));
  AdjointElement rest = g;
  // Peel off factors height by height; commutator corrections always land in
  // strictly greater height, so each pass fixes one layer for good.
  for (int h = 1; h <= 11; ++h) {
    if (rest.is_identity()) break;
    AdjointElement log = unipotent_log(rest);  // throws if not unipotent
    AdjointElement peel;
    for (auto& [root, c] : coeffs) {
      if (root.height() != h) continue;
      c = log_coefficient(log, root);
      if (c != 0) peel = peel * unip(root, c);
    }
    rest = peel.inverse() * rest;
  }
  if (!rest.is_identity())
    throw std::domain_error("element is not in the positive unipotent subgroup");
  return coeffs;
}

}  // namespace chevalley
}  // namespace f4
