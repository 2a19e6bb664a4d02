#include <mgo/operator_expr.hpp>

#include <mgo/ratlin.hpp>

#include <algorithm>
#include <stdexcept>

namespace mgo {

OperatorExpr& OperatorExpr::add(const Rational& coeff, int beta0,
                                const Multigraph& g) {
  if (beta0 < 0) throw std::invalid_argument("operator term: negative beta0");
  if (coeff == 0) return *this;

  // Canonicalize and fold isolated vertices (leading under the canonical
  // degree order) into beta0.
  Multigraph canon = canonical_form(g);
  int iso = 0;
  auto deg = canon.degrees();
  while (iso < canon.num_vertices && deg[iso] == 0) ++iso;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(canon.edges.size());
  for (const auto& [i, j] : canon.edges) edges.emplace_back(i - iso, j - iso);
  Multigraph core(canon.num_vertices - iso, std::move(edges));
  int b0 = beta0 + iso;

  for (auto& t : terms)
    if (t.beta0 == b0 && t.graph == core) {
      t.coeff += coeff;
      if (t.coeff == 0)
        terms.erase(terms.begin() + (&t - terms.data()));
      return *this;
    }
  terms.push_back({coeff, b0, std::move(core)});
  return *this;
}

int OperatorExpr::max_vertex_degree() const {
  int k = 0;
  for (const auto& t : terms) k = std::max(k, t.graph.max_degree());
  return k;
}

OperatorExpr compile(const Multigraph& g, int beta0, const Rational& coeff) {
  OperatorExpr expr;
  expr.add(coeff, beta0, g);
  return expr;
}

namespace {

Rational evaluate_term(const OperatorTerm& term, const Jet& jet) {
  const Multigraph& g = term.graph;
  const int d = jet.dim;
  const int p = g.num_edges();

  if (jet.max_order < g.max_degree())
    throw std::invalid_argument("evaluate: jet order below max vertex degree");

  Rational f_at_x = jet.entry_exponent(std::vector<int>(d, 0));
  Rational prefactor = term.coeff * rational_pow(f_at_x, term.beta0);
  if (p == 0 && g.num_vertices == 0) return prefactor;

  std::vector<int> labels(p, 1);
  std::vector<std::vector<int>> expo(g.num_vertices, std::vector<int>(d));
  Rational sum = 0;
  for (;;) {
    for (auto& e : expo) std::fill(e.begin(), e.end(), 0);
    for (int e = 0; e < p; ++e) {
      ++expo[g.edges[e].first][labels[e] - 1];
      ++expo[g.edges[e].second][labels[e] - 1];
    }
    Rational prod = 1;
    for (int v = 0; v < g.num_vertices && prod != 0; ++v)
      prod *= jet.entry_exponent(expo[v]);
    sum += prod;

    int i = p - 1;
    while (i >= 0 && labels[i] == d) labels[i--] = 1;
    if (i < 0) break;
    ++labels[i];
  }
  return prefactor * sum;
}

}  // namespace

Rational evaluate(const OperatorExpr& expr, const Jet& jet) {
  Rational sum = 0;
  for (const auto& t : expr.terms) sum += evaluate_term(t, jet);
  return sum;
}

EquivarianceResult check_equivariance(
    const OperatorExpr& expr, const Polynomial& f, const AffineIsometry& phi,
    const std::vector<std::vector<Rational>>& points) {
  const int k = expr.max_vertex_degree();
  Polynomial pulled = compose_with_isometry(f, phi);
  for (const auto& x : points) {
    Rational lhs = evaluate(expr, jet(pulled, x, k));
    Rational rhs = evaluate(expr, jet(f, phi.apply(x), k));
    if (lhs != rhs) return {false, x};
  }
  return {true, std::nullopt};
}

int independence_rank(const std::vector<std::pair<int, Multigraph>>& classes,
                      int d, int trials, std::uint64_t seed) {
  if (classes.empty())
    throw std::invalid_argument("independence_rank: empty class list");
  if (trials < static_cast<int>(classes.size()))
    throw std::invalid_argument(
        "independence_rank: trials must be >= number of classes");

  std::vector<OperatorExpr> exprs;
  int max_deg = 0;
  for (const auto& [beta0, g] : classes) {
    exprs.push_back(compile(g, beta0));
    max_deg = std::max(max_deg, g.max_degree());
  }

  Rng rng(seed);
  std::vector<Rational> origin(d, Rational(0));
  RationalMatrix m(trials, static_cast<int>(classes.size()));
  for (int t = 0; t < trials; ++t) {
    Polynomial f = random_polynomial(d, max_deg + 1, rng);
    Jet j = jet(f, origin, max_deg);
    for (std::size_t c = 0; c < exprs.size(); ++c)
      m.at(t, static_cast<int>(c)) = evaluate(exprs[c], j);
  }
  return rank(std::move(m));
}

int independence_rank(const std::vector<Multigraph>& classes, int d,
                      int trials, std::uint64_t seed) {
  std::vector<std::pair<int, Multigraph>> with_beta0;
  with_beta0.reserve(classes.size());
  for (const auto& g : classes) with_beta0.emplace_back(0, g);
  return independence_rank(with_beta0, d, trials, seed);
}

}  // namespace mgo
