#include <mgo/identity.hpp>

#include <mgo/errors.hpp>
#include <mgo/ratlin.hpp>
#include <mgo/rng.hpp>

#include <algorithm>
#include <stdexcept>

namespace mgo {

OperatorExpr identity_expression(const Identity& id, int beta0) {
  OperatorExpr expr;
  for (const auto& [g, c] : id.class_coeffs) expr.add(c, beta0, g);
  return expr;
}

std::vector<Identity> discover(int d, int p, unsigned long long max_cells) {
  if (d < 1 || p < 1)
    throw std::invalid_argument("discover: need d >= 1, p >= 1");

  KernelBasis kb = kernel(p, d, max_cells);
  std::vector<Identity> out;
  if (kb.dimension() == 0) return out;

  for (const auto& beta : enumerate_degree_vectors(p)) {
    auto orbs = orbits(beta);
    auto reps = orbit_representatives(beta);
    const int num_orbits = static_cast<int>(orbs.size());

    // Eliminate averaged rows in kernel order; each new pivot row records
    // the kernel row that introduced it.
    std::vector<std::vector<Rational>> pivots;
    std::vector<int> pivot_cols;
    for (int row = 0; row < kb.dimension(); ++row) {
      std::vector<Rational> avg = average_over_symmetry(kb.basis[row], beta);
      for (std::size_t i = 0; i < pivots.size(); ++i) {
        const Rational& lead = avg[pivot_cols[i]];
        if (lead == 0) continue;
        Rational f = lead / pivots[i][pivot_cols[i]];
        for (int c = 0; c < num_orbits; ++c) avg[c] -= f * pivots[i][c];
      }
      int lead_col = -1;
      for (int c = 0; c < num_orbits; ++c)
        if (avg[c] != 0) {
          lead_col = c;
          break;
        }
      if (lead_col == -1) continue;

      std::vector<Rational> coeffs = avg;
      normalize_integer_vector(coeffs);

      Identity id;
      id.dim = d;
      id.beta = beta;
      id.kernel_row = row;
      for (int c = 0; c < num_orbits; ++c)
        if (coeffs[c] != 0) id.class_coeffs.emplace_back(reps[c], coeffs[c]);
      id.matching_coeffs.assign(kb.matching_order.size(), Rational(0));
      for (int c = 0; c < num_orbits; ++c) {
        if (coeffs[c] == 0) continue;
        Rational per = coeffs[c] / int(orbs[c].matching_indices.size());
        for (int idx : orbs[c].matching_indices) id.matching_coeffs[idx] = per;
      }
      out.push_back(std::move(id));

      pivots.push_back(std::move(avg));
      pivot_cols.push_back(lead_col);
    }
  }
  return out;
}

namespace {

std::vector<Rational> random_point(int dim, Rng& rng) {
  std::vector<Rational> x(dim);
  for (auto& xi : x) xi = Rational(rng.uniform_int(-3, 3));
  return x;
}

std::string point_to_string(const std::vector<Rational>& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ", ";
    s += rational_to_string(x[i]);
  }
  return s + ")";
}

}  // namespace

Identity verify_identity(const Identity& id, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("verify_identity: trials < 1");

  int max_deg = 0;
  for (const auto& [g, c] : id.class_coeffs)
    max_deg = std::max(max_deg, g.max_degree());
  OperatorExpr base[3] = {identity_expression(id, 0), identity_expression(id, 1),
                          identity_expression(id, 2)};

  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    Polynomial f = random_polynomial(id.dim, max_deg + 1, rng);
    for (int pt = 0; pt < 3; ++pt) {
      std::vector<Rational> x = random_point(id.dim, rng);
      Jet j = jet(f, x, max_deg);
      for (int beta0 = 0; beta0 < 3; ++beta0) {
        Rational value = evaluate(base[beta0], j);
        if (value != 0)
          throw VerificationFailure(
              "identity evaluation nonzero (" + rational_to_string(value) +
                  ") at beta0=" + std::to_string(beta0),
              f.to_string(), point_to_string(x));
      }
    }
  }
  Identity ok = id;
  ok.status = IdentityStatus{IdentityStatusKind::verified_zero, id.dim, trials,
                             "", {}, Rational(0)};
  return ok;
}

Identity witness_nonzero(const Identity& id, int d_prime, int budget,
                         std::uint64_t seed) {
  if (d_prime < 1) throw std::invalid_argument("witness_nonzero: d_prime < 1");
  if (budget < 1) throw std::invalid_argument("witness_nonzero: budget < 1");

  int max_deg = 0;
  for (const auto& [g, c] : id.class_coeffs)
    max_deg = std::max(max_deg, g.max_degree());
  OperatorExpr expr;
  for (const auto& [g, c] : id.class_coeffs) expr.add(c, 0, g);

  Rng rng(seed);
  std::vector<Rational> origin(d_prime, Rational(0));
  std::vector<Rational> ones(d_prime, Rational(1));

  int spent = 0;
  while (spent < budget) {
    int degree = spent < budget / 2 ? 2 : 3;
    Polynomial f(d_prime);
    std::vector<int> expo(d_prime, 0);
    auto rec = [&](auto&& self, int var, int remaining) -> void {
      if (var == d_prime) {
        f.add_term(expo, Rational(rng.uniform_int(-2, 2)));
        return;
      }
      for (int e = 0; e <= remaining; ++e) {
        expo[var] = e;
        self(self, var + 1, remaining - e);
      }
      expo[var] = 0;
    };
    rec(rec, 0, degree);

    for (const auto& x : {origin, ones}) {
      if (spent++ >= budget) break;
      Rational value = evaluate(expr, jet(f, x, max_deg));
      if (value != 0) {
        Identity hit = id;
        hit.status =
            IdentityStatus{IdentityStatusKind::witnessed_nonzero, d_prime, 0,
                           f.to_string(), x, value};
        return hit;
      }
    }
  }
  throw VerificationFailure(
      "no nonzero witness found within budget " + std::to_string(budget) +
          " in dimension " + std::to_string(d_prime),
      "", "");
}

bool cayley_hamilton_check(int trials, std::uint64_t seed) {
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    RationalMatrix a(2, 2);
    a.at(0, 0) = Rational(rng.uniform_int(-9, 9));
    a.at(1, 1) = Rational(rng.uniform_int(-9, 9));
    a.at(0, 1) = a.at(1, 0) = Rational(rng.uniform_int(-9, 9));
    RationalMatrix a2 = matmul(a, a);
    RationalMatrix a3 = matmul(a2, a);
    Rational p1 = a.at(0, 0) + a.at(1, 1);
    Rational p2 = a2.at(0, 0) + a2.at(1, 1);
    Rational p3 = a3.at(0, 0) + a3.at(1, 1);
    if (p1 * p1 * p1 - 3 * p2 * p1 + 2 * p3 != 0) return false;
  }
  return true;
}

}  // namespace mgo
