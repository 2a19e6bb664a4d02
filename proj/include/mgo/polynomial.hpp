#pragma once

#include <mgo/rational.hpp>
#include <mgo/rng.hpp>

#include <map>
#include <string>
#include <vector>

namespace mgo {

// Multivariate polynomial with exact rational coefficients. Keys are
// exponent vectors of length dim; zero coefficients are never stored.
struct Polynomial {
  int dim = 0;
  std::map<std::vector<int>, Rational> terms;

  explicit Polynomial(int d = 0) : dim(d) {}
  static Polynomial constant(int dim, const Rational& c);
  static Polynomial variable(int dim, int index);  // 0-based

  void add_term(const std::vector<int>& expo, const Rational& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial pow(int e) const;

  Polynomial derivative(int var) const;
  Rational evaluate(const std::vector<Rational>& x) const;
  int total_degree() const;
  bool is_zero() const { return terms.empty(); }

  // Reparseable rendering ("2*x1^2 - 1/2*x2").
  std::string to_string() const;

  bool operator==(const Polynomial&) const = default;
};

// Grammar: +, -, *, ^, parentheses, integer and a/b literals, variables
// x1..xdim. Juxtaposition multiplies ("3x1^2"). Throws
// std::invalid_argument with a position on malformed input.
Polynomial parse_polynomial(const std::string& text, int dim);

// All partial derivatives through max_order evaluated at a point, the
// 0th-order entry included. Keys are exponent multi-indices; entry()
// accepts the sorted-index-tuple form used by contraction.
struct Jet {
  int dim = 0;
  int max_order = 0;
  std::vector<Rational> point;
  std::map<std::vector<int>, Rational> values;

  // indices: 1-based differentiation indices in any order; empty = f itself.
  const Rational& entry(const std::vector<int>& indices) const;
  const Rational& entry_exponent(const std::vector<int>& expo) const;
};

Jet jet(const Polynomial& f, const std::vector<Rational>& x, int max_order);

// Dense polynomial of the given total degree, integer coefficients drawn
// uniformly from [-9, 9].
Polynomial random_polynomial(int dim, int degree, Rng& rng);

Rational rational_pow(const Rational& base, int e);

}  // namespace mgo
