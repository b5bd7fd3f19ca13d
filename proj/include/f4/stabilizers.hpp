#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "f4/linalg.hpp"
#include "f4/rational.hpp"

namespace f4 {

// 3x3 rational matrix X with J3 X = X^t J3 (symmetry across the antidiagonal);
// parametrized by the six free entries (r1..r6) as
//   [ r4 r5 r6 ]
//   [ r2 r3 r5 ]
//   [ r1 r2 r4 ].
struct Mat3J {
  std::array<Rat, 6> r{};

  Mat3J() = default;
  explicit Mat3J(std::array<Rat, 6> params) : r(std::move(params)) {}
  static Mat3J from_matrix(const RatMat& m);  // validates the symmetry
  RatMat matrix() const;
};

// Character datum for the F4(a2) coefficient: a constrained 4x2 matrix
//   [ a1  a2 ]
//   [ a3  a4 ]
//   [ a5  a1 ]
//   [ a6 -a3 ]
// together with gamma1, gamma2.
struct F4a2Char {
  std::array<Rat, 6> a{};
  Rat gamma1 = 0, gamma2 = 0;

  RatMat matrix() const;  // the 4x2 matrix
  static F4a2Char from_matrix(const RatMat& m, const Rat& g1, const Rat& g2);
  // Coefficients on the eight level-two roots, in the order
  // (0100) (0110) (0120) (1100) (1110) (1120) (0001) (0011).
  std::array<Rat, 8> root_coefficients() const;
  static F4a2Char from_root_coefficients(const std::array<Rat, 8>& c);
};

struct StabResult {
  int dimension = 0;
  // Basis of solutions, each as (h1 entries a1,b1,c1,d1 | g1 row-major 9).
  std::vector<std::array<Rat, 13>> basis;
};

// Group elements acting on F4(a2) characters.
struct SL2Long {
  std::array<Rat, 4> g;  // row-major 2x2, det 1
};
struct ShortUnip {
  Rat m;  // x_{0010}(m)
};
struct TorusElem {
  std::array<Rat, 4> t;
};
using F4a2Action = std::variant<SL2Long, ShortUnip, TorusElem>;

namespace stabilizers {

// Kernel of the linearized stabilizer equations
//   g1 A + A J3 g1^t J3 + a1 A + b1 B = 0
//   g1 B + B J3 g1^t J3 + c1 A + d1 B = 0
// in the 13 unknowns (4 for h1, 9 for g1).  The line
// (h1, g1) = (-2t I2, t I3) is always contained.
StabResult f4a3_stab(const Mat3J& A, const Mat3J& B);

Rat f4a3_discriminant(const Rat& m, const Rat& n, const Rat& z);

// Coefficient matrix of the reduced 3x3 system in (c1, c2, c4); its
// determinant is -f(m,n,z).
RatMat f4a3_reduced_system(const Rat& m, const Rat& n, const Rat& z);

F4a2Char f4a2_act(const F4a2Action& elem, const F4a2Char& chi);

// Dimension of the infinitesimal stabilizer of chi inside the 8-dimensional
// Lie algebra of M_{a1,a3} (two sl2's plus a 2-dimensional torus).
int f4a2_stab_dim(const F4a2Char& chi);

}  // namespace stabilizers
}  // namespace f4
