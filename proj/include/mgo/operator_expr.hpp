#pragma once

#include <mgo/isometry.hpp>
#include <mgo/multigraph.hpp>
#include <mgo/polynomial.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace mgo {

// One scaled graph contraction: coeff * f^beta0 * (contraction of graph).
// Graphs are canonical with isolated vertices folded into beta0.
struct OperatorTerm {
  Rational coeff;
  int beta0 = 0;
  Multigraph graph;
};

// Finite rational combination of graph operators; equal (beta0, graph)
// terms are merged, zero coefficients dropped.
struct OperatorExpr {
  std::vector<OperatorTerm> terms;

  OperatorExpr& add(const Rational& coeff, int beta0, const Multigraph& g);
  int max_vertex_degree() const;
};

OperatorExpr compile(const Multigraph& g, int beta0 = 0,
                     const Rational& coeff = Rational(1));

// Sum over labelings of the edges by 1..d; each vertex contributes the jet
// entry keyed by the sorted labels of its incident edge ends (loops count
// twice), each term scaled by coeff * f(x)^beta0. Throws
// std::invalid_argument when the jet is too shallow or of the wrong
// dimension.
Rational evaluate(const OperatorExpr& expr, const Jet& jet);

struct EquivarianceResult {
  bool ok = true;
  std::optional<std::vector<Rational>> violating_point;
};

// Exact comparison of evaluate on the jet of f.phi at x against evaluate on
// the jet of f at phi(x), for every given point.
EquivarianceResult check_equivariance(
    const OperatorExpr& expr, const Polynomial& f, const AffineIsometry& phi,
    const std::vector<std::vector<Rational>>& points);

// Rank of the trials x classes matrix whose (t, c) entry is class c
// evaluated on the jet of the t-th seeded random polynomial (dense, total
// degree max-vertex-degree + 1) at the origin. Pre: trials >= classes size.
int independence_rank(const std::vector<std::pair<int, Multigraph>>& classes,
                      int d, int trials, std::uint64_t seed);
int independence_rank(const std::vector<Multigraph>& classes, int d,
                      int trials, std::uint64_t seed);

}  // namespace mgo
