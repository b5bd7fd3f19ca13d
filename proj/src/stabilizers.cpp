#include "f4/stabilizers.hpp"

#include <stdexcept>

namespace f4 {

namespace {

RatMat j3() {
  RatMat j(3, 3);
  j.at(0, 2) = 1;
  j.at(1, 1) = 1;
  j.at(2, 0) = 1;
  return j;
}

// X -> J3 X^t J3, the antidiagonal transpose.
RatMat jt(const RatMat& x) { return j3() * x.transpose() * j3(); }

}  // namespace

RatMat Mat3J::matrix() const {
  RatMat m(3, 3);
  m.at(0, 0) = r[3];
  m.at(0, 1) = r[4];
  m.at(0, 2) = r[5];
  m.at(1, 0) = r[1];
  m.at(1, 1) = r[2];
  m.at(1, 2) = r[4];
  m.at(2, 0) = r[0];
  m.at(2, 1) = r[1];
  m.at(2, 2) = r[3];
  return m;
}

Mat3J Mat3J::from_matrix(const RatMat& m) {
  if (m.rows != 3 || m.cols != 3) throw std::invalid_argument("Mat3J expects a 3x3 matrix");
  if (!((j3() * m) == (m.transpose() * j3())))
    throw std::invalid_argument("matrix is not J3-symmetric");
  Mat3J x;
  x.r = {m.at(2, 0), m.at(1, 0), m.at(1, 1), m.at(0, 0), m.at(0, 1), m.at(0, 2)};
  return x;
}

RatMat F4a2Char::matrix() const {
  RatMat m(4, 2);
  m.at(0, 0) = a[0];
  m.at(0, 1) = a[1];
  m.at(1, 0) = a[2];
  m.at(1, 1) = a[3];
  m.at(2, 0) = a[4];
  m.at(2, 1) = a[0];
  m.at(3, 0) = a[5];
  m.at(3, 1) = -a[2];
  return m;
}

F4a2Char F4a2Char::from_matrix(const RatMat& m, const Rat& g1, const Rat& g2) {
  if (m.rows != 4 || m.cols != 2) throw std::invalid_argument("expected a 4x2 matrix");
  if (m.at(2, 1) != m.at(0, 0) || m.at(3, 1) != -m.at(1, 0))
    throw std::invalid_argument("matrix does not have the constrained shape");
  F4a2Char c;
  c.a = {m.at(0, 0), m.at(0, 1), m.at(1, 0), m.at(1, 1), m.at(2, 0), m.at(3, 0)};
  c.gamma1 = g1;
  c.gamma2 = g2;
  return c;
}

std::array<Rat, 8> F4a2Char::root_coefficients() const {
  // tr(A R) with R = [[r3,r4,r5,r6],[r1,r2,r3,-r4]] pairs the character with
  // the coordinates on (0100)..(1120); gammas sit on (0001), (0011).
  return {a[1], a[3], 2 * a[0], 2 * a[2], a[4], a[5], gamma1, gamma2};
}

F4a2Char F4a2Char::from_root_coefficients(const std::array<Rat, 8>& c) {
  F4a2Char out;
  out.a = {c[2] / 2, c[0], c[3] / 2, c[1], c[4], c[5]};
  out.gamma1 = c[6];
  out.gamma2 = c[7];
  return out;
}

namespace stabilizers {

StabResult f4a3_stab(const Mat3J& A, const Mat3J& B) {
  RatMat ma = A.matrix(), mb = B.matrix();
  // Unknowns: x = (a1, b1, c1, d1, g11, g12, ..., g33).
  RatMat sys(18, 13);
  auto g_entry = [](int i, int j) { return 4 + 3 * i + j; };
  for (int eq = 0; eq < 2; ++eq) {
    const RatMat& lead = eq == 0 ? ma : mb;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        int row = 9 * eq + 3 * i + j;
        // (g1 X)_{ij} = sum_k g_{ik} X_{kj}
        for (int k = 0; k < 3; ++k) sys.at(row, g_entry(i, k)) += lead.at(k, j);
        // (X J3 g1^t J3)_{ij} = sum_k X_{ik} (J g^t J)_{kj} = sum_k X_{ik} g_{3-j,3-k}
        for (int k = 0; k < 3; ++k) sys.at(row, g_entry(2 - j, 2 - k)) += lead.at(i, k);
        if (eq == 0) {
          sys.at(row, 0) += ma.at(i, j);  // a1 A
          sys.at(row, 1) += mb.at(i, j);  // b1 B
        } else {
          sys.at(row, 2) += ma.at(i, j);  // c1 A
          sys.at(row, 3) += mb.at(i, j);  // d1 B
        }
      }
  }
  auto basis = linalg::nullspace(sys);
  StabResult res;
  res.dimension = (int)basis.size();
  for (const auto& v : basis) {
    std::array<Rat, 13> b;
    for (int k = 0; k < 13; ++k) b[k] = v[k];
    res.basis.push_back(std::move(b));
  }
  return res;
}

Rat f4a3_discriminant(const Rat& m, const Rat& n, const Rat& z) {
  return -27 * m * m * m * m + 18 * n * m * m * z + 4 * m * m * z * z * z + 4 * n * n * n +
         n * n * z * z;
}

RatMat f4a3_reduced_system(const Rat& m, const Rat& n, const Rat& z) {
  RatMat s(3, 3);
  s.at(0, 0) = -(2 * n + z * z);
  s.at(0, 1) = -3 * m;
  s.at(0, 2) = -z;
  s.at(1, 0) = -m * z;
  s.at(1, 1) = -n;
  s.at(1, 2) = -3 * m;
  s.at(2, 0) = 3 * m * m - n * z;
  s.at(2, 1) = 2 * m * z;
  s.at(2, 2) = -2 * n;
  return s;
}

namespace {

// diag(g, g*) with g* = D g D, D = diag(1,-1); the twist keeps the
// constrained 4x2 shape stable for every g in SL2, and agrees with the
// one-parameter subgroups x_{1000}(m), h(t,1,1,1).
RatMat long_block(const std::array<Rat, 4>& g) {
  RatMat m(4, 4);
  m.at(0, 0) = g[0];
  m.at(0, 1) = g[1];
  m.at(1, 0) = g[2];
  m.at(1, 1) = g[3];
  m.at(2, 2) = g[0];
  m.at(2, 3) = -g[1];
  m.at(3, 2) = -g[2];
  m.at(3, 3) = g[3];
  return m;
}

}  // namespace

F4a2Char f4a2_act(const F4a2Action& elem, const F4a2Char& chi) {
  RatMat A = chi.matrix();
  if (const auto* g = std::get_if<SL2Long>(&elem)) {
    Rat det = g->g[0] * g->g[3] - g->g[1] * g->g[2];
    if (det != 1) throw std::invalid_argument("long SL2 element must have determinant 1");
    RatMat B = long_block(g->g) * A;
    return F4a2Char::from_matrix(B, chi.gamma1, chi.gamma2);
  }
  if (const auto* u = std::get_if<ShortUnip>(&elem)) {
    RatMat m4 = RatMat::identity(4);
    m4.at(0, 2) = u->m;
    m4.at(1, 3) = -u->m;
    RatMat m2 = RatMat::identity(2);
    m2.at(0, 1) = u->m;
    RatMat B = m4 * A * m2;
    return F4a2Char::from_matrix(B, chi.gamma1, u->m * chi.gamma1 + chi.gamma2);
  }
  const auto& t = std::get<TorusElem>(elem).t;
  for (const Rat& x : t)
    if (x == 0) throw std::invalid_argument("singular torus parameter");
  RatMat t1(4, 4), t2(2, 2);
  t1.at(0, 0) = t[1] * t[3] / (t[0] * t[2]);
  t1.at(1, 1) = t[0] * t[3] / t[2];
  t1.at(2, 2) = t[2] / t[0];
  t1.at(3, 3) = t[0] * t[2] / t[1];
  t2.at(0, 0) = t[2] / (t[3] * t[3]);
  t2.at(1, 1) = t[1] / (t[2] * t[3]);
  RatMat B = t1 * A * t2;
  return F4a2Char::from_matrix(B, t[3] * t[3] / t[2] * chi.gamma1,
                               t[1] / (t[2] * t[3]) * chi.gamma2);
}

int f4a2_stab_dim(const F4a2Char& chi) {
  RatMat A = chi.matrix();
  // Nine one-parameter directions spanning the 8-dimensional algebra of
  // M_{a1,a3}: long sl2 (e, f, h), short sl2 (e, f), and the 4 torus axes.
  // Each yields (dA, dgamma); the stabilizer dimension is 8 - rank.
  struct Deriv {
    RatMat dA;
    Rat dg1, dg2;
  };
  std::vector<Deriv> derivs;
  auto push = [&](RatMat left4, RatMat right2, Rat dg1, Rat dg2) {
    Deriv d;
    d.dA = left4 * A + A * right2;
    d.dg1 = dg1;
    d.dg2 = dg2;
    derivs.push_back(std::move(d));
  };
  RatMat z2(2, 2), z4(4, 4);
  {  // long e: d/dm of diag(g, DgD) A at g = x(m)
    RatMat l(4, 4);
    l.at(0, 1) = 1;
    l.at(2, 3) = -1;
    push(l, z2, 0, 0);
  }
  {  // long f
    RatMat l(4, 4);
    l.at(1, 0) = 1;
    l.at(3, 2) = -1;
    push(l, z2, 0, 0);
  }
  {  // long h
    RatMat l(4, 4);
    l.at(0, 0) = 1;
    l.at(1, 1) = -1;
    l.at(2, 2) = 1;
    l.at(3, 3) = -1;
    push(l, z2, 0, 0);
  }
  {  // short e: x_{0010}(m)
    RatMat l(4, 4);
    l.at(0, 2) = 1;
    l.at(1, 3) = -1;
    RatMat r(2, 2);
    r.at(0, 1) = 1;
    push(l, r, 0, chi.gamma1);
  }
  {  // short f: the transpose family
    RatMat l(4, 4);
    l.at(2, 0) = 1;
    l.at(3, 1) = -1;
    RatMat r(2, 2);
    r.at(1, 0) = 1;
    push(l, r, chi.gamma2, 0);
  }
  for (int axis = 0; axis < 4; ++axis) {  // torus directions
    std::array<Rat, 4> s{};
    s[axis] = 1;
    RatMat l(4, 4), r(2, 2);
    l.at(0, 0) = -s[0] + s[1] - s[2] + s[3];
    l.at(1, 1) = s[0] - s[2] + s[3];
    l.at(2, 2) = -s[0] + s[2];
    l.at(3, 3) = s[0] - s[1] + s[2];
    r.at(0, 0) = s[2] - 2 * s[3];
    r.at(1, 1) = s[1] - s[2] - s[3];
    push(l, r, (-s[2] + 2 * s[3]) * chi.gamma1, (s[1] - s[2] - s[3]) * chi.gamma2);
  }
  // Assemble the 9x8 image matrix in the shape coordinates (a1..a6, g1, g2).
  RatMat img((int)derivs.size(), 8);
  for (int k = 0; k < (int)derivs.size(); ++k) {
    const RatMat& d = derivs[k].dA;
    if (d.at(2, 1) != d.at(0, 0) || d.at(3, 1) != -d.at(1, 0))
      throw std::logic_error("action derivative left the constrained shape");
    img.at(k, 0) = d.at(0, 0);
    img.at(k, 1) = d.at(0, 1);
    img.at(k, 2) = d.at(1, 0);
    img.at(k, 3) = d.at(1, 1);
    img.at(k, 4) = d.at(2, 0);
    img.at(k, 5) = d.at(3, 0);
    img.at(k, 6) = derivs[k].dg1;
    img.at(k, 7) = derivs[k].dg2;
  }
  return 8 - linalg::rank(img);
}

}  // namespace stabilizers
}  // namespace f4
