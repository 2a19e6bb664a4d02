#include <doctest.h>

#include <mgo/errors.hpp>
#include <mgo/identity.hpp>
#include <mgo/json_io.hpp>
#include <mgo/ratlin.hpp>
#include <mgo/rng.hpp>

#include <map>
#include <string>
#include <vector>

using namespace mgo;

namespace {

std::vector<Rational> pt(std::vector<int> coords) {
  std::vector<Rational> x;
  for (int c : coords) x.emplace_back(c);
  return x;
}

std::map<std::string, Rational> coeffs_by_name(const Identity& id) {
  std::map<std::string, Rational> out;
  for (const auto& [g, c] : id.class_coeffs) out[class_display_name(g)] = c;
  return out;
}

}  // namespace

TEST_CASE("discover finds the two p = 3 relations in dimension 2") {
  auto ids = discover(2, 3);
  REQUIRE(ids.size() == 2);

  const Identity& q = ids[0];
  CHECK(q.dim == 2);
  CHECK(q.beta == DegreeVector(0, {0, 3}));
  CHECK(q.kernel_row == 0);
  auto qc = coeffs_by_name(q);
  REQUIRE(qc.size() == 3);
  CHECK(qc.at("three loops") == 1);
  CHECK(qc.at("double edge and a loop") == -3);
  CHECK(qc.at("triangle") == 2);

  const Identity& p = ids[1];
  CHECK(p.dim == 2);
  CHECK(p.beta == DegreeVector(0, {2, 2}));
  CHECK(p.kernel_row == 0);
  auto pc = coeffs_by_name(p);
  REQUIRE(pc.size() == 4);
  CHECK(pc.at("edge and two loops") == 1);
  CHECK(pc.at("edge and a double edge") == -1);
  CHECK(pc.at("path of length three") == 2);
  CHECK(pc.at("path of length two and a loop") == -2);

  // Class lists follow orbit order, so the leading coefficient is positive.
  for (const auto& id : ids) {
    REQUIRE_FALSE(id.class_coeffs.empty());
    CHECK(id.class_coeffs.front().second > 0);
  }
}

TEST_CASE("matching-level coefficients annihilate every index tuple") {
  for (const auto& id : discover(2, 3)) {
    EvaluationMatrix m = evaluation_matrix(3, id.dim);
    REQUIRE(id.matching_coeffs.size() == m.matchings.size());
    for (long long c = 0; c < m.num_tuples; ++c) {
      Rational dot = 0;
      for (std::size_t r = 0; r < id.matching_coeffs.size(); ++r)
        dot += id.matching_coeffs[r] * m.at(static_cast<int>(r), c);
      CHECK(dot == 0);
    }
    // Orbit sums reproduce the class coefficients.
    auto sums = average_over_symmetry(id.matching_coeffs, id.beta);
    auto orbs = orbits(id.beta);
    auto reps = orbit_representatives(id.beta);
    std::map<std::string, Rational> by_name;
    for (std::size_t o = 0; o < orbs.size(); ++o)
      if (sums[o] != 0) by_name[class_display_name(reps[o])] = sums[o];
    CHECK(by_name == coeffs_by_name(id));
  }
}

TEST_CASE("no relations when the dimension is at least the edge count") {
  CHECK(discover(3, 3).empty());
  CHECK(discover(2, 2).empty());
  CHECK(discover(1, 1).empty());
  CHECK(discover(4, 3).empty());
}

TEST_CASE("discover on the line at p = 2") {
  auto ids = discover(1, 2);
  REQUIRE(ids.size() == 2);

  CHECK(ids[0].beta == DegreeVector(0, {0, 2}));
  auto c0 = coeffs_by_name(ids[0]);
  REQUIRE(c0.size() == 2);
  CHECK(c0.at("two loops") == 1);
  CHECK(c0.at("double edge") == -1);

  CHECK(ids[1].beta == DegreeVector(0, {2, 1}));
  auto c1 = coeffs_by_name(ids[1]);
  REQUIRE(c1.size() == 2);
  CHECK(c1.at("edge and a loop") == 1);
  CHECK(c1.at("path of length two") == -1);

  for (const auto& id : ids) {
    Identity v = verify_identity(id, 10, 555);
    CHECK(v.status.kind == IdentityStatusKind::verified_zero);
  }
}

TEST_CASE("verification accepts the true relations") {
  for (const auto& id : discover(2, 3)) {
    Identity v = verify_identity(id, 20, 777);
    CHECK(v.status.kind == IdentityStatusKind::verified_zero);
    CHECK(v.status.dim == 2);
    CHECK(v.status.trials == 20);
  }
}

TEST_CASE("verification rejects a relation moved to the wrong dimension") {
  auto ids = discover(2, 3);
  Identity wrong = ids[0];
  wrong.dim = 3;  // the combination is nonzero in dimension 3
  bool threw = false;
  try {
    verify_identity(wrong, 20, 777);
  } catch (const VerificationFailure& e) {
    threw = true;
    CHECK_FALSE(std::string(e.what()).empty());
    CHECK_FALSE(e.polynomial.empty());
    CHECK_FALSE(e.point.empty());
  }
  CHECK(threw);
}

TEST_CASE("pinned witness values from direct evaluation") {
  auto ids = discover(2, 3);
  const Identity& q = ids[0];
  const Identity& p = ids[1];

  // Hessian = identity: (trace)^3 - 3 |H|^2 trace + 2 tr(H^3) = 27 - 27 + 6.
  Polynomial fq = parse_polynomial("1/2*x1^2 + 1/2*x2^2 + 1/2*x3^2", 3);
  CHECK(evaluate(identity_expression(q), jet(fq, pt({0, 0, 0}), 2)) == 6);

  // Same Hessian with gradient (1,0,0): 9 - 3 + 2 - 6 = 2.
  Polynomial fp = parse_polynomial("1/2*x1^2 + 1/2*x2^2 + 1/2*x3^2 + x1", 3);
  CHECK(evaluate(identity_expression(p), jet(fp, pt({0, 0, 0}), 2)) == 2);

  // The d = 1 relation evaluated in the plane: (2+6)^2 - (4+36) = 24,
  // constant in x because the Hessian is.
  auto line = discover(1, 2);
  Polynomial fl = parse_polynomial("x1^2 + 3*x2^2", 2);
  for (auto x : {pt({0, 0}), pt({1, 1}), pt({-2, 5})})
    CHECK(evaluate(identity_expression(line[0]), jet(fl, x, 2)) == 24);

  // In their own dimension the same combinations vanish on these inputs.
  Polynomial fq2 = parse_polynomial("1/2*x1^2 + 1/2*x2^2", 2);
  CHECK(evaluate(identity_expression(q), jet(fq2, pt({0, 0}), 2)) == 0);
}

TEST_CASE("witness search finds nonzero values deterministically") {
  auto ids = discover(2, 3);
  for (const auto& id : ids) {
    Identity hit = witness_nonzero(id, 3, 10000, 0);
    REQUIRE(hit.status.kind == IdentityStatusKind::witnessed_nonzero);
    CHECK(hit.status.dim == 3);
    CHECK(hit.status.witness_value != 0);

    // The reported value reproduces under independent evaluation.
    Polynomial f = parse_polynomial(hit.status.witness_poly, 3);
    int max_deg = 0;
    for (const auto& [g, c] : id.class_coeffs)
      max_deg = std::max(max_deg, g.max_degree());
    CHECK(evaluate(identity_expression(id),
                   jet(f, hit.status.witness_point, max_deg)) ==
          hit.status.witness_value);

    // Determinism: the same seed returns the same witness.
    Identity again = witness_nonzero(id, 3, 10000, 0);
    CHECK(again.status.witness_poly == hit.status.witness_poly);
    CHECK(again.status.witness_value == hit.status.witness_value);
  }

  auto line = discover(1, 2);
  Identity hit = witness_nonzero(line[0], 2);
  CHECK(hit.status.kind == IdentityStatusKind::witnessed_nonzero);
  CHECK(hit.status.witness_value != 0);
}

TEST_CASE("witness search respects its budget") {
  // A genuine identity has no witness in its own dimension; a tiny budget
  // must exhaust quickly and throw.
  auto ids = discover(2, 3);
  CHECK_THROWS_AS(witness_nonzero(ids[0], 2, 50, 0), VerificationFailure);
}

TEST_CASE("trace identity for symmetric 2x2 matrices") {
  CHECK(cayley_hamilton_check(50, 123));

  // diag(2,3): power sums 5, 13, 35 satisfy 125 - 3*13*5 + 2*35 = 0.
  Rational p1 = 5, p2 = 13, p3 = 35;
  CHECK(p1 * p1 * p1 - 3 * p2 * p1 + 2 * p3 == 0);
}

TEST_CASE("relation count matches the observed rank deficiency") {
  auto classes3 = enumerate_classes(3, false, 0);
  REQUIRE(classes3.size() == 23);
  int rank_d2 = independence_rank(classes3, 2, 30, 4096);
  CHECK(static_cast<int>(discover(2, 3).size()) == 23 - rank_d2);

  auto classes2 = enumerate_classes(2, false, 0);
  int rank_d1 = independence_rank(classes2, 1, 14, 4096);
  CHECK(static_cast<int>(discover(1, 2).size()) == 7 - rank_d1);
}

TEST_CASE("relations remain valid in lower dimensions") {
  // The d = 2 kernel is contained in the d = 1 kernel, so each relation
  // also verifies with dim set to 1.
  for (const auto& id : discover(2, 3)) {
    Identity down = id;
    down.dim = 1;
    CHECK(verify_identity(down, 10, 31).status.kind ==
          IdentityStatusKind::verified_zero);
  }

  // And the matching-level vectors lie in the span of the d = 1 relations
  // with the same degree vector.
  auto d1 = discover(1, 3);
  for (const auto& id : discover(2, 3)) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& base : d1)
      if (base.beta == id.beta) rows.push_back(base.matching_coeffs);
    REQUIRE_FALSE(rows.empty());
    RationalMatrix without(static_cast<int>(rows.size()), 15);
    RationalMatrix with(static_cast<int>(rows.size()) + 1, 15);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (int c = 0; c < 15; ++c) {
        without.at(static_cast<int>(r), c) = rows[r][c];
        with.at(static_cast<int>(r), c) = rows[r][c];
      }
    for (int c = 0; c < 15; ++c)
      with.at(static_cast<int>(rows.size()), c) = id.matching_coeffs[c];
    CHECK(rank(std::move(with)) == rank(std::move(without)));
  }
}

TEST_CASE("discover rejects invalid arguments") {
  CHECK_THROWS_AS(discover(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(discover(2, 0), std::invalid_argument);
}

TEST_CASE("identity expressions honor beta0") {
  auto ids = discover(2, 3);
  Rng rng(606);
  Polynomial f = random_polynomial(2, 3, rng);
  Jet j = jet(f, pt({1, -1}), 2);
  for (int beta0 = 0; beta0 < 3; ++beta0)
    CHECK(evaluate(identity_expression(ids[0], beta0), j) == 0);

  // In dimension 3 the beta0-weighted combination scales by f(x)^beta0.
  Polynomial g = parse_polynomial("1/2*x1^2 + 1/2*x2^2 + 1/2*x3^2 + 2", 3);
  Jet j3 = jet(g, pt({0, 0, 0}), 2);
  Rational base = evaluate(identity_expression(ids[0], 0), j3);
  CHECK(base == 6);
  CHECK(evaluate(identity_expression(ids[0], 1), j3) == 2 * base);
  CHECK(evaluate(identity_expression(ids[0], 2), j3) == 4 * base);
}
