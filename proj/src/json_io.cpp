#include <mgo/json_io.hpp>

#include <map>
#include <stdexcept>
#include <utility>

namespace mgo {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw std::invalid_argument("json: " + what);
}

int require_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    malformed(std::string("missing integer field '") + key + "'");
  return j[key].get<int>();
}

std::vector<Rational> rational_row_from_json(const Json& j) {
  if (!j.is_array()) malformed("expected array of rationals");
  std::vector<Rational> out;
  for (const auto& e : j) {
    if (!e.is_string()) malformed("rationals must be strings");
    out.push_back(parse_rational(e.get<std::string>()));
  }
  return out;
}

Json rational_row_to_json(const std::vector<Rational>& row) {
  Json out = Json::array();
  for (const auto& r : row) out.push_back(rational_to_string(r));
  return out;
}

}  // namespace

Json multigraph_to_json(const Multigraph& g) {
  Json edges = Json::array();
  for (const auto& [i, j] : g.edges) edges.push_back(Json::array({i, j}));
  return Json{{"n", g.num_vertices}, {"edges", std::move(edges)}};
}

Multigraph multigraph_from_json(const Json& j) {
  if (!j.is_object()) malformed("graph must be an object");
  int n = require_int(j, "n");
  if (!j.contains("edges") || !j["edges"].is_array())
    malformed("graph needs an 'edges' array");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      malformed("each edge must be a pair of integers");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  try {
    return Multigraph(n, std::move(edges));
  } catch (const std::invalid_argument& ex) {
    malformed(ex.what());
  }
}

Json degree_vector_to_json(const DegreeVector& beta) {
  return Json{{"beta0", beta.beta0}, {"vec", beta.vec}};
}

DegreeVector degree_vector_from_json(const Json& j) {
  if (!j.is_object()) malformed("degree vector must be an object");
  int beta0 = require_int(j, "beta0");
  if (!j.contains("vec") || !j["vec"].is_array())
    malformed("degree vector needs a 'vec' array");
  std::vector<int> vec;
  for (const auto& e : j["vec"]) {
    if (!e.is_number_integer()) malformed("'vec' entries must be integers");
    vec.push_back(e.get<int>());
  }
  try {
    return DegreeVector(beta0, std::move(vec));
  } catch (const std::invalid_argument& ex) {
    malformed(ex.what());
  }
}

Json matching_to_json(const PerfectMatching& rho) {
  Json out = Json::array();
  for (const auto& [a, b] : rho.pairs) out.push_back(Json::array({a, b}));
  return out;
}

PerfectMatching matching_from_json(const Json& j) {
  if (!j.is_array()) malformed("matching must be an array of pairs");
  std::vector<std::pair<int, int>> pairs;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      malformed("each matching pair must be two integers");
    pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  try {
    return PerfectMatching(std::move(pairs));
  } catch (const std::invalid_argument& ex) {
    malformed(ex.what());
  }
}

Json kernel_to_json(const KernelBasis& kb) {
  Json order = Json::array();
  for (const auto& rho : kb.matching_order) order.push_back(matching_to_json(rho));
  Json basis = Json::array();
  for (const auto& row : kb.basis) basis.push_back(rational_row_to_json(row));
  return Json{{"p", kb.p},
              {"d", kb.d},
              {"matching_order", std::move(order)},
              {"basis", std::move(basis)}};
}

KernelBasis kernel_from_json(const Json& j) {
  if (!j.is_object()) malformed("kernel must be an object");
  KernelBasis kb;
  kb.p = require_int(j, "p");
  kb.d = require_int(j, "d");
  if (!j.contains("matching_order") || !j["matching_order"].is_array())
    malformed("kernel needs a 'matching_order' array");
  for (const auto& e : j["matching_order"])
    kb.matching_order.push_back(matching_from_json(e));
  if (!j.contains("basis") || !j["basis"].is_array())
    malformed("kernel needs a 'basis' array");
  for (const auto& row : j["basis"]) {
    auto r = rational_row_from_json(row);
    if (r.size() != kb.matching_order.size())
      malformed("kernel row length must match matching count");
    kb.basis.push_back(std::move(r));
  }
  return kb;
}

Json operator_expr_to_json(const OperatorExpr& expr) {
  Json terms = Json::array();
  for (const auto& t : expr.terms)
    terms.push_back(Json{{"coeff", rational_to_string(t.coeff)},
                         {"beta0", t.beta0},
                         {"graph", multigraph_to_json(t.graph)}});
  return Json{{"terms", std::move(terms)}};
}

OperatorExpr operator_expr_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    malformed("operator needs a 'terms' array");
  OperatorExpr expr;
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("coeff") || !t["coeff"].is_string() ||
        !t.contains("graph"))
      malformed("each term needs 'coeff', 'beta0', 'graph'");
    expr.add(parse_rational(t["coeff"].get<std::string>()),
             require_int(t, "beta0"), multigraph_from_json(t["graph"]));
  }
  return expr;
}

namespace {

Json status_to_json(const IdentityStatus& s) {
  switch (s.kind) {
    case IdentityStatusKind::unverified:
      return Json{{"kind", "unverified"}};
    case IdentityStatusKind::verified_zero:
      return Json{{"kind", "verified_zero"}, {"dim", s.dim}, {"trials", s.trials}};
    case IdentityStatusKind::witnessed_nonzero: {
      Json point = Json::array();
      for (const auto& x : s.witness_point)
        point.push_back(rational_to_string(x));
      return Json{{"kind", "witnessed_nonzero"},
                  {"dim", s.dim},
                  {"poly", s.witness_poly},
                  {"point", std::move(point)},
                  {"value", rational_to_string(s.witness_value)}};
    }
  }
  malformed("unknown status kind");
}

IdentityStatus status_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    malformed("status needs a 'kind' string");
  IdentityStatus s;
  std::string kind = j["kind"].get<std::string>();
  if (kind == "unverified") {
    s.kind = IdentityStatusKind::unverified;
  } else if (kind == "verified_zero") {
    s.kind = IdentityStatusKind::verified_zero;
    s.dim = require_int(j, "dim");
    s.trials = require_int(j, "trials");
  } else if (kind == "witnessed_nonzero") {
    s.kind = IdentityStatusKind::witnessed_nonzero;
    s.dim = require_int(j, "dim");
    if (!j.contains("poly") || !j["poly"].is_string())
      malformed("witness needs a 'poly' string");
    s.witness_poly = j["poly"].get<std::string>();
    if (!j.contains("point")) malformed("witness needs a 'point' array");
    s.witness_point = rational_row_from_json(j["point"]);
    if (!j.contains("value") || !j["value"].is_string())
      malformed("witness needs a 'value' string");
    s.witness_value = parse_rational(j["value"].get<std::string>());
  } else {
    malformed("unknown status kind '" + kind + "'");
  }
  return s;
}

}  // namespace

Json identity_to_json(const Identity& id) {
  Json terms = Json::array();
  for (const auto& [g, c] : id.class_coeffs)
    terms.push_back(Json{{"coeff", rational_to_string(c)},
                         {"graph", multigraph_to_json(g)}});
  return Json{{"dim", id.dim},
              {"beta", degree_vector_to_json(id.beta)},
              {"terms", std::move(terms)},
              {"status", status_to_json(id.status)},
              {"provenance", Json{{"kernel_row", id.kernel_row}}}};
}

Identity identity_from_json(const Json& j) {
  if (!j.is_object()) malformed("identity must be an object");
  Identity id;
  id.dim = require_int(j, "dim");
  if (!j.contains("beta")) malformed("identity needs a 'beta' object");
  id.beta = degree_vector_from_json(j["beta"]);
  if (!j.contains("terms") || !j["terms"].is_array())
    malformed("identity needs a 'terms' array");
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("coeff") || !t["coeff"].is_string() ||
        !t.contains("graph"))
      malformed("each identity term needs 'coeff' and 'graph'");
    id.class_coeffs.emplace_back(
        multigraph_from_json(t["graph"]),
        parse_rational(t["coeff"].get<std::string>()));
  }
  if (j.contains("status")) id.status = status_from_json(j["status"]);
  if (j.contains("provenance") && j["provenance"].is_object() &&
      j["provenance"].contains("kernel_row"))
    id.kernel_row = require_int(j["provenance"], "kernel_row");
  return id;
}

namespace {

// Canonical edge lists of every class with at most 3 edges and no isolated
// vertices; verified against enumerate_classes by the test suite.
const std::map<Multigraph, std::string>& name_table() {
  static const std::map<Multigraph, std::string> table = [] {
    std::map<Multigraph, std::string> t;
    auto put = [&t](int n, std::vector<std::pair<int, int>> edges,
                    const std::string& name) {
      t.emplace(canonical_form(Multigraph(n, std::move(edges))), name);
    };
    put(0, {}, "empty graph");
    // 1 edge
    put(2, {{0, 1}}, "single edge");
    put(1, {{0, 0}}, "single loop");
    // 2 edges
    put(1, {{0, 0}, {0, 0}}, "double loop");
    put(2, {{0, 0}, {1, 1}}, "two loops");
    put(2, {{0, 1}, {0, 1}}, "double edge");
    put(2, {{0, 1}, {1, 1}}, "edge with a loop");
    put(3, {{0, 2}, {1, 2}}, "path of length two");
    put(3, {{0, 1}, {2, 2}}, "edge and a loop");
    put(4, {{0, 1}, {2, 3}}, "two edges");
    // 3 edges
    put(1, {{0, 0}, {0, 0}, {0, 0}}, "triple loop");
    put(2, {{0, 1}, {0, 1}, {0, 1}}, "triple edge");
    put(2, {{0, 0}, {0, 1}, {1, 1}}, "edge with a loop at each end");
    put(2, {{0, 1}, {0, 1}, {1, 1}}, "double edge with a loop");
    put(2, {{0, 0}, {1, 1}, {1, 1}}, "loop and double loop");
    put(2, {{0, 1}, {1, 1}, {1, 1}}, "edge with two loops at one end");
    put(3, {{0, 0}, {1, 1}, {2, 2}}, "three loops");
    put(3, {{0, 1}, {0, 1}, {2, 2}}, "double edge and a loop");
    put(3, {{0, 1}, {0, 2}, {1, 2}}, "triangle");
    put(3, {{0, 2}, {1, 2}, {1, 2}}, "double edge with a pendant edge");
    put(3, {{0, 2}, {1, 1}, {2, 2}}, "edge with a loop and a separate loop");
    put(3, {{0, 1}, {1, 2}, {2, 2}}, "path of length two with a loop at one end");
    put(3, {{0, 2}, {1, 2}, {2, 2}}, "path of length two with a loop in the middle");
    put(3, {{0, 1}, {2, 2}, {2, 2}}, "edge and a double loop");
    put(4, {{0, 1}, {2, 2}, {3, 3}}, "edge and two loops");
    put(4, {{0, 1}, {2, 3}, {2, 3}}, "edge and a double edge");
    put(4, {{0, 2}, {1, 3}, {2, 3}}, "path of length three");
    put(4, {{0, 2}, {1, 2}, {3, 3}}, "path of length two and a loop");
    put(4, {{0, 3}, {1, 3}, {2, 3}}, "star with three edges");
    put(4, {{0, 1}, {2, 3}, {3, 3}}, "edge and an edge with a loop");
    put(5, {{0, 1}, {2, 4}, {3, 4}}, "path of length two and an edge");
    put(5, {{0, 1}, {2, 3}, {4, 4}}, "two edges and a loop");
    put(6, {{0, 1}, {2, 3}, {4, 5}}, "three edges");
    return t;
  }();
  return table;
}

}  // namespace

std::string class_display_name(const Multigraph& g) {
  Multigraph canon = canonical_form(g);
  auto deg = canon.degrees();
  int iso = 0;
  while (iso < canon.num_vertices && deg[iso] == 0) ++iso;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(canon.edges.size());
  for (const auto& [i, j] : canon.edges) edges.emplace_back(i - iso, j - iso);
  Multigraph core(canon.num_vertices - iso, std::move(edges));

  if (core.num_vertices == 0 && iso > 0)
    return iso == 1 ? "isolated vertex"
                    : std::to_string(iso) + " isolated vertices";

  std::string name;
  auto it = name_table().find(core);
  if (it != name_table().end()) {
    name = it->second;
  } else {
    name = "class beta=" + degree_vector_to_json(degree_vector(core)).dump();
  }
  if (iso == 1) name += " and an isolated vertex";
  if (iso > 1) name += " and " + std::to_string(iso) + " isolated vertices";
  return name;
}

}  // namespace mgo
