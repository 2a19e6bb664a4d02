#pragma once

#include <mgo/rational.hpp>

#include <vector>

namespace mgo {

// Dense row-major matrix over the rationals.
struct RationalMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> data;

  RationalMatrix() = default;
  RationalMatrix(int r, int c) : rows(r), cols(c), data(std::size_t(r) * c) {}

  Rational& at(int r, int c) { return data[std::size_t(r) * cols + c]; }
  const Rational& at(int r, int c) const {
    return data[std::size_t(r) * cols + c];
  }
};

// In-place reduced row echelon form; returns the rank. Pivot entries become
// 1, pivot columns are cleared above and below.
int rref(RationalMatrix& m);

int rank(RationalMatrix m);

// Basis of {x : m x = 0}, returned as rows in RREF with integer-cleared,
// lead-positive entries. Empty when the kernel is trivial.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

// Gauss-Jordan inverse. Throws std::invalid_argument if singular or
// non-square.
RationalMatrix inverse(const RationalMatrix& m);

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b);

RationalMatrix transpose(const RationalMatrix& m);

RationalMatrix identity_matrix(int n);

Rational determinant(RationalMatrix m);

}  // namespace mgo
