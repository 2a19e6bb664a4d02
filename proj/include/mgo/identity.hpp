#pragma once

#include <mgo/invariant_tensor.hpp>
#include <mgo/multigraph.hpp>
#include <mgo/operator_expr.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace mgo {

enum class IdentityStatusKind { unverified, verified_zero, witnessed_nonzero };

struct IdentityStatus {
  IdentityStatusKind kind = IdentityStatusKind::unverified;
  // verified_zero
  int dim = 0;
  int trials = 0;
  // witnessed_nonzero
  std::string witness_poly;
  std::vector<Rational> witness_point;
  Rational witness_value;
};

// A linear dependence among same-degree-vector graph operators that holds
// identically in dimension dim. Coefficients are coprime integers with the
// canonically-least class positive.
struct Identity {
  int dim = 0;
  DegreeVector beta;
  // (canonical class, coefficient), nonzero coefficients only, classes in
  // orbit order.
  std::vector<std::pair<Multigraph, Rational>> class_coeffs;
  // Matching-level vector c with coefficient class_coeff / orbit size on
  // each orbit member; annihilates every index tuple in dimension dim.
  std::vector<Rational> matching_coeffs;
  // Index (0-based) of the kernel basis row whose symmetry average
  // introduced this relation during elimination.
  int kernel_row = 0;
  IdentityStatus status;
};

// Averages each kernel basis row over every degree vector with p edges and
// keeps a maximal independent set of the nonzero per-orbit vectors. Empty
// when p <= d. Degree vectors are visited in enumerate_degree_vectors order.
std::vector<Identity> discover(int d, int p, unsigned long long max_cells = 0);

// Evaluates the identity on `trials` seeded random polynomials (dense, total
// degree max-vertex-degree + 1, dimension id.dim), each at 3 seeded integer
// points, for beta0 in {0, 1, 2}; every value must be exactly zero. Returns
// the identity marked verified_zero, or throws VerificationFailure carrying
// the offending polynomial and point.
Identity verify_identity(const Identity& id, int trials, std::uint64_t seed);

// Seeded search for a nonzero value of the identity's combination in
// dimension d_prime: degree-2 candidates for the first half of the budget
// then degree-3, integer coefficients in [-2, 2], each candidate evaluated
// at the origin and at (1,...,1). Returns the identity marked
// witnessed_nonzero; throws VerificationFailure when the budget runs out.
Identity witness_nonzero(const Identity& id, int d_prime, int budget = 10000,
                         std::uint64_t seed = 0);

// Trace form of the 2x2 symmetric Cayley-Hamilton consequence:
// (tr A)^3 - 3 tr(A^2) tr(A) + 2 tr(A^3) = 0 on seeded random symmetric
// integer matrices. True when every trial vanishes exactly.
bool cayley_hamilton_check(int trials, std::uint64_t seed);

// The identity's combination as an operator expression with the given
// beta0 on every term.
OperatorExpr identity_expression(const Identity& id, int beta0 = 0);

}  // namespace mgo
