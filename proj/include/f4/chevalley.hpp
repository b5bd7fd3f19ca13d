#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "f4/rational.hpp"
#include "f4/rootsys.hpp"

namespace f4 {

// Basis of the 52-dimensional Lie algebra: e_alpha for the 48 roots in
// rootsys::all_roots() order, then h_1..h_4 (simple coroots).
inline constexpr int kLieDim = 52;

// Exact 52x52 rational matrix acting on the adjoint module.  The adjoint
// representation is faithful (trivial center), so group identities can be
// checked as matrix identities.
class AdjointElement {
 public:
  AdjointElement();  // identity
  static AdjointElement zero();

  Rat& at(int i, int j) { return m_[i * kLieDim + j]; }
  const Rat& at(int i, int j) const { return m_[i * kLieDim + j]; }

  AdjointElement operator*(const AdjointElement& o) const;
  bool operator==(const AdjointElement& o) const { return m_ == o.m_; }
  bool operator!=(const AdjointElement& o) const { return !(*this == o); }

  AdjointElement inverse() const;  // exact Gauss-Jordan
  bool is_identity() const;

 private:
  std::vector<Rat> m_;  // row-major
};

struct CommutatorTerm {
  Root root;       // i*alpha + j*beta
  Int coeff;       // exact integer coefficient c_ij
  int deg_i = 0;   // multiplicity of alpha
  int deg_j = 0;   // multiplicity of beta
};

// Ordered by height of the target root; the terms commute in F4, so the
// product order is immaterial.
using CommutatorExpansion = std::vector<CommutatorTerm>;

namespace chevalley {

// Structure constant N_{alpha,beta} with [e_a, e_b] = N e_{a+b}; zero when
// a+b is neither zero nor a root.  Signs fixed by the extraspecial pairs in
// canonical root order (positive for every extraspecial pair).
int structure_constant(const Root& alpha, const Root& beta);

// Largest k >= 0 with beta - k*alpha a root (the string length downward).
int string_down(const Root& alpha, const Root& beta);

// Coroot alpha^vee in the basis h_1..h_4.
std::array<int, 4> coroot_coords(const Root& alpha);

// Bracket of basis elements as a sparse vector over the 52-dim basis.
// Index convention matches AdjointElement.
std::vector<std::pair<int, int>> basis_bracket(int a, int b);

// ad(e_alpha) as a matrix (integer entries, stored rationally).
const AdjointElement& ad_matrix(const Root& alpha);

// x_alpha(t) = exp(t ad e_alpha); exact, ad e_alpha is nilpotent.
AdjointElement unip(const Root& alpha, const Rat& t);

// h(t1,..,t4); every t_i must be nonzero.
AdjointElement torus(const std::array<Rat, 4>& t);
AdjointElement torus_power(const CocharWeight& r, const Rat& t);  // h(t^r1,..,t^r4)

// Representative x_i(1) x_{-i}(-1) x_i(1) of the simple reflection s_i.
AdjointElement weyl_rep(int i);
AdjointElement weyl_rep(const WeylWord& w);

// Expansion of unip(beta,s)^-1 unip(alpha,r)^-1 unip(beta,s) unip(alpha,r)
// as a product of unip(i*alpha + j*beta, c_ij r^i s^j).
CommutatorExpansion commutator_formula(const Root& alpha, const Root& beta);

// Unique coefficients t_alpha, in canonical positive-root order, with
// g = prod_alpha unip(alpha, t_alpha); throws if g is not in the positive
// unipotent subgroup.
std::vector<std::pair<Root, Rat>> normal_form(const AdjointElement& g);

// Exact matrix logarithm of a unipotent element (finite series).
AdjointElement unipotent_log(const AdjointElement& g);

// Coefficient of e_alpha in a Lie-algebra element given as a matrix in the
// adjoint representation.
Rat log_coefficient(const AdjointElement& log_g, const Root& alpha);

}  // namespace chevalley
}  // namespace f4
