#include <mgo/isometry.hpp>

#include <stdexcept>

namespace mgo {

AffineIsometry::AffineIsometry(RationalMatrix rotation,
                               std::vector<Rational> translation)
    : q(std::move(rotation)), b(std::move(translation)) {
  if (q.rows != q.cols || q.rows < 1)
    throw std::invalid_argument("isometry: matrix must be square");
  if (static_cast<int>(b.size()) != q.rows)
    throw std::invalid_argument("isometry: translation dimension mismatch");
  for (int i = 0; i < q.rows; ++i)
    for (int j = 0; j < q.cols; ++j) {
      Rational dot = 0;
      for (int k = 0; k < q.rows; ++k) dot += q.at(k, i) * q.at(k, j);
      if (dot != (i == j ? 1 : 0))
        throw std::invalid_argument("isometry: matrix is not orthogonal");
    }
}

std::vector<Rational> AffineIsometry::apply(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != dim())
    throw std::invalid_argument("isometry apply: dimension mismatch");
  std::vector<Rational> out(dim());
  for (int i = 0; i < dim(); ++i) {
    Rational acc = b[i];
    for (int j = 0; j < dim(); ++j) acc += q.at(i, j) * x[j];
    out[i] = std::move(acc);
  }
  return out;
}

RationalMatrix cayley_orthogonal(const RationalMatrix& s) {
  if (s.rows != s.cols)
    throw std::invalid_argument("cayley: matrix must be square");
  for (int i = 0; i < s.rows; ++i)
    for (int j = 0; j < s.cols; ++j)
      if (s.at(i, j) != -s.at(j, i))
        throw std::invalid_argument("cayley: matrix is not skew-symmetric");
  int n = s.rows;
  RationalMatrix plus = identity_matrix(n);
  RationalMatrix minus = identity_matrix(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      plus.at(i, j) += s.at(i, j);
      minus.at(i, j) -= s.at(i, j);
    }
  // I + S is invertible for skew S: x^T (I+S) x = |x|^2.
  return matmul(minus, inverse(plus));
}

RationalMatrix reflection_matrix(int dim) {
  RationalMatrix m = identity_matrix(dim);
  m.at(0, 0) = -1;
  return m;
}

Polynomial compose_with_isometry(const Polynomial& f, const AffineIsometry& phi) {
  if (f.dim != phi.dim())
    throw std::invalid_argument("compose: dimension mismatch");
  const int n = f.dim;

  // Coordinate images and their power tables up to the needed exponent.
  std::vector<Polynomial> image;
  for (int i = 0; i < n; ++i) {
    Polynomial li = Polynomial::constant(n, phi.b[i]);
    for (int j = 0; j < n; ++j)
      li = li + Polynomial::variable(n, j) * phi.q.at(i, j);
    image.push_back(std::move(li));
  }
  std::vector<int> max_expo(n, 0);
  for (const auto& [e, c] : f.terms)
    for (int i = 0; i < n; ++i) max_expo[i] = std::max(max_expo[i], e[i]);
  std::vector<std::vector<Polynomial>> powers(n);
  for (int i = 0; i < n; ++i) {
    powers[i].push_back(Polynomial::constant(n, 1));
    for (int e = 1; e <= max_expo[i]; ++e)
      powers[i].push_back(powers[i].back() * image[i]);
  }

  Polynomial out(n);
  for (const auto& [e, c] : f.terms) {
    Polynomial mono = Polynomial::constant(n, c);
    for (int i = 0; i < n; ++i)
      if (e[i] > 0) mono = mono * powers[i][e[i]];
    out = out + mono;
  }
  return out;
}

}  // namespace mgo
