#pragma once

#include <mgo/polynomial.hpp>
#include <mgo/ratlin.hpp>

#include <vector>

namespace mgo {

// x -> Q x + b with Q exactly orthogonal over the rationals. The
// constructor rejects anything else.
struct AffineIsometry {
  RationalMatrix q;
  std::vector<Rational> b;

  AffineIsometry(RationalMatrix rotation, std::vector<Rational> translation);

  int dim() const { return q.rows; }
  std::vector<Rational> apply(const std::vector<Rational>& x) const;
};

// (I - S)(I + S)^{-1} for skew-symmetric S: a rational orthogonal matrix of
// determinant +1. Throws std::invalid_argument when S is not skew.
RationalMatrix cayley_orthogonal(const RationalMatrix& s);

// diag(-1, 1, ..., 1): the standard orientation-reversing isometry.
RationalMatrix reflection_matrix(int dim);

// f(Q x + b), computed by exact substitution.
Polynomial compose_with_isometry(const Polynomial& f, const AffineIsometry& phi);

}  // namespace mgo
