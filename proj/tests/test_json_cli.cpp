#include <doctest.h>

#include <mgo/identity.hpp>
#include <mgo/json_io.hpp>

#include <set>
#include <string>
#include <vector>

using namespace mgo;

namespace {

Multigraph graph(int n, std::vector<std::pair<int, int>> edges) {
  return Multigraph(n, std::move(edges));
}

}  // namespace

TEST_CASE("rational strings round-trip") {
  for (const char* s : {"0", "3", "-3", "1/2", "-7/3", "123456789123456789"})
    CHECK(rational_to_string(parse_rational(s)) == s);
  CHECK(parse_rational("+4") == 4);
  CHECK(parse_rational("2/4") == Rational(1, 2));
  CHECK(parse_rational("-6/-4") == Rational(3, 2));
  for (const char* s : {"", "a", "1.5", "1/0", "1/", "/2", "--3", "2 /3"})
    CHECK_THROWS_AS(parse_rational(s), std::invalid_argument);
}

TEST_CASE("normalize_integer_vector clears denominators and signs") {
  std::vector<Rational> v = {Rational(-1, 2), Rational(3, 4), Rational(0)};
  normalize_integer_vector(v);
  CHECK(v == std::vector<Rational>{2, -3, 0});

  std::vector<Rational> zero = {0, 0};
  normalize_integer_vector(zero);
  CHECK(zero == std::vector<Rational>{0, 0});

  std::vector<Rational> neg = {0, Rational(-2), Rational(4)};
  normalize_integer_vector(neg);
  CHECK(neg == std::vector<Rational>{0, 1, -2});
}

TEST_CASE("multigraph JSON round-trip") {
  for (int p = 0; p <= 3; ++p)
    for (const auto& g : enumerate_classes(p, false, 1))
      CHECK(multigraph_from_json(multigraph_to_json(g)) == g);

  Json j = multigraph_to_json(graph(3, {{0, 2}, {1, 2}}));
  CHECK(j["n"] == 3);
  CHECK(j["edges"].size() == 2);

  CHECK_THROWS_AS(multigraph_from_json(Json::array()), std::invalid_argument);
  CHECK_THROWS_AS(multigraph_from_json(Json{{"n", 2}}), std::invalid_argument);
  CHECK_THROWS_AS(
      multigraph_from_json(Json{{"n", 1}, {"edges", Json::array({Json::array({0, 1})})}}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      multigraph_from_json(Json{{"n", "x"}, {"edges", Json::array()}}),
      std::invalid_argument);
}

TEST_CASE("degree vector and matching JSON round-trips") {
  DegreeVector beta(2, {0, 3});
  CHECK(degree_vector_from_json(degree_vector_to_json(beta)) == beta);
  CHECK_THROWS_AS(degree_vector_from_json(Json{{"beta0", -1}, {"vec", Json::array()}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(degree_vector_from_json(Json{{"beta0", 0}}),
                  std::invalid_argument);

  for (const auto& rho : enumerate_matchings(3))
    CHECK(matching_from_json(matching_to_json(rho)) == rho);
  CHECK_THROWS_AS(matching_from_json(Json{{"pairs", 1}}), std::invalid_argument);
  CHECK_THROWS_AS(matching_from_json(Json::array({Json::array({1, 1})})),
                  std::invalid_argument);
}

TEST_CASE("kernel JSON round-trip") {
  KernelBasis kb = kernel(3, 2);
  KernelBasis back = kernel_from_json(kernel_to_json(kb));
  CHECK(back.p == kb.p);
  CHECK(back.d == kb.d);
  CHECK(back.matching_order == kb.matching_order);
  CHECK(back.basis == kb.basis);

  Json broken = kernel_to_json(kb);
  broken["basis"][0] = Json::array({"1"});  // wrong row length
  CHECK_THROWS_AS(kernel_from_json(broken), std::invalid_argument);
}

TEST_CASE("operator expression JSON round-trip merges canonically") {
  OperatorExpr expr;
  expr.add(Rational(3, 2), 1, graph(1, {{0, 0}}));
  expr.add(Rational(-2), 0, graph(3, {{0, 1}, {0, 2}, {1, 2}}));
  OperatorExpr back = operator_expr_from_json(operator_expr_to_json(expr));
  REQUIRE(back.terms.size() == 2);
  CHECK(back.terms[0].coeff == expr.terms[0].coeff);
  CHECK(back.terms[0].beta0 == expr.terms[0].beta0);
  CHECK(back.terms[0].graph == expr.terms[0].graph);
  CHECK(back.terms[1].graph == expr.terms[1].graph);

  // Terms that canonicalize equal are merged on load.
  Json two_paths = Json{{"terms", Json::array({
      Json{{"coeff", "1"}, {"beta0", 0},
           {"graph", multigraph_to_json(graph(3, {{0, 2}, {1, 2}}))}},
      Json{{"coeff", "2"}, {"beta0", 0},
           {"graph", multigraph_to_json(graph(3, {{0, 1}, {1, 2}}))}}})}};
  OperatorExpr merged = operator_expr_from_json(two_paths);
  REQUIRE(merged.terms.size() == 1);
  CHECK(merged.terms[0].coeff == 3);

  CHECK_THROWS_AS(operator_expr_from_json(Json{{"terms", 7}}),
                  std::invalid_argument);
}

TEST_CASE("identity JSON round-trip preserves status and provenance") {
  auto ids = discover(2, 3);
  REQUIRE(ids.size() == 2);

  Identity verified = verify_identity(ids[0], 5, 99);
  Identity witnessed = witness_nonzero(ids[1], 3, 10000, 0);

  for (const Identity& id : {ids[0], verified, witnessed}) {
    Identity back = identity_from_json(identity_to_json(id));
    CHECK(back.dim == id.dim);
    CHECK(back.beta == id.beta);
    CHECK(back.kernel_row == id.kernel_row);
    REQUIRE(back.class_coeffs.size() == id.class_coeffs.size());
    for (std::size_t i = 0; i < id.class_coeffs.size(); ++i) {
      CHECK(back.class_coeffs[i].first == id.class_coeffs[i].first);
      CHECK(back.class_coeffs[i].second == id.class_coeffs[i].second);
    }
    CHECK(back.status.kind == id.status.kind);
  }

  Json j = identity_to_json(witnessed);
  CHECK(j["status"]["kind"] == "witnessed_nonzero");
  CHECK(j["status"]["dim"] == 3);
  CHECK(j["provenance"]["kernel_row"] == 0);
  Identity back = identity_from_json(j);
  CHECK(back.status.witness_poly == witnessed.status.witness_poly);
  CHECK(back.status.witness_point == witnessed.status.witness_point);
  CHECK(back.status.witness_value == witnessed.status.witness_value);

  CHECK_THROWS_AS(identity_from_json(Json{{"dim", 2}}), std::invalid_argument);
  Json bad_status = identity_to_json(ids[0]);
  bad_status["status"] = Json{{"kind", "wat"}};
  CHECK_THROWS_AS(identity_from_json(bad_status), std::invalid_argument);
}

TEST_CASE("every class through three edges has a curated name") {
  std::set<std::string> seen;
  int total = 0;
  for (int p = 0; p <= 3; ++p)
    for (const auto& g : enumerate_classes(p, false, 0)) {
      std::string name = class_display_name(g);
      CHECK(name.rfind("class beta=", 0) != 0);  // no fallback label
      CHECK(seen.insert(name).second);           // names are distinct
      ++total;
    }
  CHECK(total == 1 + 2 + 7 + 23);
}

TEST_CASE("isolated vertices appear as a name suffix") {
  CHECK(class_display_name(graph(1, {})) == "isolated vertex");
  CHECK(class_display_name(graph(2, {})) == "2 isolated vertices");
  CHECK(class_display_name(graph(2, {{1, 1}})) ==
        "single loop and an isolated vertex");
  CHECK(class_display_name(graph(4, {{2, 3}})) ==
        "single edge and 2 isolated vertices");
  CHECK(class_display_name(Multigraph()) == "empty graph");
  // Naming is relabeling-invariant.
  CHECK(class_display_name(graph(3, {{0, 1}, {1, 2}})) ==
        class_display_name(graph(3, {{0, 2}, {1, 2}})));
}

TEST_CASE("degree-vector fallback label for unnamed classes") {
  // A 4-edge class is outside the curated table.
  std::string name = class_display_name(
      graph(2, {{0, 1}, {0, 1}, {0, 1}, {0, 1}}));
  CHECK(name.rfind("class beta=", 0) == 0);
}
