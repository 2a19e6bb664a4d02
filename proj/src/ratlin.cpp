#include <mgo/ratlin.hpp>

#include <stdexcept>
#include <utility>

namespace mgo {

int rref(RationalMatrix& m) {
  int pivot_row = 0;
  for (int col = 0; col < m.cols && pivot_row < m.rows; ++col) {
    int sel = -1;
    for (int r = pivot_row; r < m.rows; ++r)
      if (m.at(r, col) != 0) {
        sel = r;
        break;
      }
    if (sel == -1) continue;
    if (sel != pivot_row)
      for (int c = 0; c < m.cols; ++c)
        std::swap(m.at(sel, c), m.at(pivot_row, c));
    Rational inv = m.at(pivot_row, col);
    for (int c = col; c < m.cols; ++c) m.at(pivot_row, c) /= inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == pivot_row || m.at(r, col) == 0) continue;
      Rational f = m.at(r, col);
      for (int c = col; c < m.cols; ++c)
        m.at(r, c) -= f * m.at(pivot_row, c);
    }
    ++pivot_row;
  }
  return pivot_row;
}

int rank(RationalMatrix m) { return rref(m); }

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
  RationalMatrix r = m;
  int rk = rref(r);

  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(m.cols, false);
  for (int row = 0, col = 0; row < rk; ++row) {
    while (col < m.cols && r.at(row, col) == 0) ++col;
    pivot_col.push_back(col);
    is_pivot[col] = true;
  }

  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols, Rational(0));
    v[free] = 1;
    for (int row = 0; row < rk; ++row) v[pivot_col[row]] = -r.at(row, free);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return basis;

  // Canonicalize: RREF of the basis itself, then integer-clear each row.
  RationalMatrix b(static_cast<int>(basis.size()), m.cols);
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < b.cols; ++j) b.at(i, j) = basis[i][j];
  rref(b);
  for (int i = 0; i < b.rows; ++i) {
    std::vector<Rational> row(b.data.begin() + std::size_t(i) * b.cols,
                              b.data.begin() + std::size_t(i + 1) * b.cols);
    normalize_integer_vector(row);
    basis[i] = std::move(row);
  }
  return basis;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (m.rows != m.cols)
    throw std::invalid_argument("inverse: matrix not square");
  int n = m.rows;
  RationalMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  if (rref(aug) != n) throw std::invalid_argument("inverse: singular matrix");
  RationalMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  return out;
}

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols != b.rows)
    throw std::invalid_argument("matmul: dimension mismatch");
  RationalMatrix out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols; ++j)
        out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

RationalMatrix transpose(const RationalMatrix& m) {
  RationalMatrix out(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out.at(j, i) = m.at(i, j);
  return out;
}

RationalMatrix identity_matrix(int n) {
  RationalMatrix out(n, n);
  for (int i = 0; i < n; ++i) out.at(i, i) = 1;
  return out;
}

Rational determinant(RationalMatrix m) {
  if (m.rows != m.cols)
    throw std::invalid_argument("determinant: matrix not square");
  Rational det = 1;
  for (int col = 0; col < m.cols; ++col) {
    int sel = -1;
    for (int r = col; r < m.rows; ++r)
      if (m.at(r, col) != 0) {
        sel = r;
        break;
      }
    if (sel == -1) return Rational(0);
    if (sel != col) {
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(col, c));
      det = -det;
    }
    det *= m.at(col, col);
    Rational inv = m.at(col, col);
    for (int r = col + 1; r < m.rows; ++r) {
      if (m.at(r, col) == 0) continue;
      Rational f = m.at(r, col) / inv;
      for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(col, c);
    }
  }
  return det;
}

}  // namespace mgo
