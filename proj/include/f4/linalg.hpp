#pragma once

#include <vector>

#include "f4/rational.hpp"

namespace f4 {

// Dense rational matrix, row major.  Small sizes only; everything exact.
struct RatMat {
  int rows = 0, cols = 0;
  std::vector<Rat> a;

  RatMat() = default;
  RatMat(int r, int c) : rows(r), cols(c), a(r * c, Rat(0)) {}

  Rat& at(int i, int j) { return a[i * cols + j]; }
  const Rat& at(int i, int j) const { return a[i * cols + j]; }

  static RatMat identity(int n);
  RatMat operator*(const RatMat& o) const;
  RatMat operator+(const RatMat& o) const;
  RatMat operator-(const RatMat& o) const;
  RatMat scaled(const Rat& c) const;
  RatMat transpose() const;
  bool operator==(const RatMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

namespace linalg {

// In-place reduced row echelon form; returns the rank.
int rref(RatMat& m);
int rank(const RatMat& m);
Rat det(const RatMat& m);

// Basis of the right nullspace {x : m x = 0}, one column vector per element.
std::vector<std::vector<Rat>> nullspace(const RatMat& m);

}  // namespace linalg
}  // namespace f4
