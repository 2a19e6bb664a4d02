#pragma once

#include <mgo/identity.hpp>
#include <mgo/invariant_tensor.hpp>
#include <mgo/multigraph.hpp>
#include <mgo/operator_expr.hpp>

#include <json.hpp>

#include <string>

namespace mgo {

using Json = nlohmann::json;

// Encodings are stable: graphs as {"n", "edges"}, degree vectors as
// {"beta0", "vec"}, matchings as sorted 1-based pair lists, rationals as
// "a" / "a/b" strings. from_* throw std::invalid_argument on malformed
// input.

Json multigraph_to_json(const Multigraph& g);
Multigraph multigraph_from_json(const Json& j);

Json degree_vector_to_json(const DegreeVector& beta);
DegreeVector degree_vector_from_json(const Json& j);

Json matching_to_json(const PerfectMatching& rho);
PerfectMatching matching_from_json(const Json& j);

Json kernel_to_json(const KernelBasis& kb);
KernelBasis kernel_from_json(const Json& j);

Json operator_expr_to_json(const OperatorExpr& expr);
OperatorExpr operator_expr_from_json(const Json& j);

Json identity_to_json(const Identity& id);
Identity identity_from_json(const Json& j);

// Curated display name for every isomorphism class with at most 3 edges;
// isolated vertices are stripped and reported as a suffix. Falls back to a
// degree-vector label for unnamed classes.
std::string class_display_name(const Multigraph& g);

}  // namespace mgo
