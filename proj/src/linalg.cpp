#include "f4/linalg.hpp"

#include <stdexcept>

namespace f4 {

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMat RatMat::operator*(const RatMat& o) const {
  if (cols != o.rows) throw std::invalid_argument("matrix shape mismatch");
  RatMat r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      if (at(i, k) == 0) continue;
      for (int j = 0; j < o.cols; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

RatMat RatMat::operator+(const RatMat& o) const {
  if (rows != o.rows || cols != o.cols) throw std::invalid_argument("matrix shape mismatch");
  RatMat r = *this;
  for (size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
  return r;
}

RatMat RatMat::operator-(const RatMat& o) const {
  if (rows != o.rows || cols != o.cols) throw std::invalid_argument("matrix shape mismatch");
  RatMat r = *this;
  for (size_t i = 0; i < a.size(); ++i) r.a[i] -= o.a[i];
  return r;
}

RatMat RatMat::scaled(const Rat& c) const {
  RatMat r = *this;
  for (auto& x : r.a) x *= c;
  return r;
}

RatMat RatMat::transpose() const {
  RatMat r(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

namespace linalg {

int rref(RatMat& m) {
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int piv = -1;
    for (int r = rank; r < m.rows; ++r)
      if (m.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    Rat p = m.at(rank, col);
    for (int j = 0; j < m.cols; ++j) m.at(rank, j) /= p;
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank) continue;
      Rat f = m.at(r, col);
      if (f == 0) continue;
      for (int j = 0; j < m.cols; ++j) m.at(r, j) -= f * m.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

int rank(const RatMat& m) {
  RatMat c = m;
  return rref(c);
}

Rat det(const RatMat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("det of non-square matrix");
  RatMat c = m;
  Rat d(1);
  for (int col = 0; col < c.cols; ++col) {
    int piv = -1;
    for (int r = col; r < c.rows; ++r)
      if (c.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      for (int j = 0; j < c.cols; ++j) std::swap(c.at(piv, j), c.at(col, j));
      d = -d;
    }
    d *= c.at(col, col);
    Rat p = c.at(col, col);
    for (int r = col + 1; r < c.rows; ++r) {
      Rat f = c.at(r, col) / p;
      if (f == 0) continue;
      for (int j = col; j < c.cols; ++j) c.at(r, j) -= f * c.at(col, j);
    }
  }
  return d;
}

std::vector<std::vector<Rat>> nullspace(const RatMat& m) {
  RatMat r = m;
  rref(r);
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(m.cols, false);
  for (int row = 0; row < r.rows; ++row) {
    for (int col = 0; col < r.cols; ++col)
      if (r.at(row, col) != 0) {
        pivot_col.push_back(col);
        is_pivot[col] = true;
        break;
      }
  }
  std::vector<std::vector<Rat>> basis;
  for (int freec = 0; freec < m.cols; ++freec) {
    if (is_pivot[freec]) continue;
    std::vector<Rat> v(m.cols, Rat(0));
    v[freec] = 1;
    for (size_t row = 0; row < pivot_col.size(); ++row) v[pivot_col[row]] = -r.at((int)row, freec);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace linalg
}  // namespace f4
