#include <doctest.h>

#include <mgo/errors.hpp>
#include <mgo/invariant_tensor.hpp>
#include <mgo/multigraph.hpp>
#include <mgo/rng.hpp>

#include <cstdlib>
#include <string>
#include <vector>

using namespace mgo;

namespace {

// Column of a tuple in the lexicographic enumeration (last position fastest).
long long tuple_index(const std::vector<int>& t, int d) {
  long long idx = 0;
  for (int v : t) idx = idx * d + (v - 1);
  return idx;
}

// The 15x15 restriction of the p=3, d=2 table to the columns e_(ij): the
// tuple with 2s in positions i < j and 1s elsewhere, pairs (i,j) in
// lexicographic order. Frozen as printed; entry (rho, e_(ij)) is 1 exactly
// when {i,j} is a pair of rho.
const char* const kRestricted15[15] = {
    "100000000100001",  // {12}{34}{56}
    "100000000010010",  // {12}{35}{46}
    "100000000001100",  // {12}{36}{45}
    "010000100000001",  // {13}{24}{56}
    "010000010000010",  // {13}{25}{46}
    "010000001000100",  // {13}{26}{45}
    "001001000000001",  // {14}{23}{56}
    "001000010001000",  // {14}{25}{36}
    "001000001010000",  // {14}{26}{35}
    "000101000000010",  // {15}{23}{46}
    "000100100001000",  // {15}{24}{36}
    "000100001100000",  // {15}{26}{34}
    "000011000000100",  // {16}{23}{45}
    "000010100010000",  // {16}{24}{35}
    "000010010100000",  // {16}{25}{34}
};

// Frozen kernel basis of the p=3, d=2 evaluation map, rows in RREF over the
// lexicographic matching order.
const int kKernelRows[5][15] = {
    {1, 0, -1, 0, 0, 0, -1, 0, 1, 0, 1, -1, 1, -1, 0},
    {0, 1, -1, 0, 0, 0, 0, 0, 0, -1, 1, 0, 1, -1, 0},
    {0, 0, 0, 1, 0, -1, -1, 0, 1, 0, 0, 0, 1, -1, 0},
    {0, 0, 0, 0, 1, -1, 0, 0, 0, -1, 0, 1, 1, 0, -1},
    {0, 0, 0, 0, 0, 0, 0, 1, -1, 0, -1, 1, 0, 1, -1},
};

std::vector<std::vector<Rational>> frozen_kernel() {
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : kKernelRows) {
    std::vector<Rational> r;
    for (int x : row) r.emplace_back(x);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

TEST_CASE("tau is a product of Kronecker deltas") {
  PerfectMatching rho({{1, 2}, {3, 4}});
  CHECK(tau_eval(rho, {1, 1, 2, 2}) == 1);
  CHECK(tau_eval(rho, {1, 2, 2, 2}) == 0);
  CHECK(tau_eval(rho, {2, 2, 2, 2}) == 1);
  CHECK(tau_eval(PerfectMatching({{1, 4}, {2, 3}}), {1, 2, 2, 1}) == 1);
  CHECK(tau_eval(PerfectMatching(), {}) == 1);
  CHECK_THROWS_AS(tau_eval(rho, {1, 1, 2}), std::invalid_argument);
}

TEST_CASE("evaluation matrix at p = 1") {
  EvaluationMatrix m = evaluation_matrix(1, 2);
  REQUIRE(m.matchings.size() == 1);
  REQUIRE(m.num_tuples == 4);
  CHECK(m.at(0, 0) == 1);  // (1,1)
  CHECK(m.at(0, 1) == 0);  // (1,2)
  CHECK(m.at(0, 2) == 0);  // (2,1)
  CHECK(m.at(0, 3) == 1);  // (2,2)
}

TEST_CASE("evaluation matrix rows sum to d^p") {
  EvaluationMatrix m = evaluation_matrix(3, 2);
  REQUIRE(m.matchings.size() == 15);
  REQUIRE(m.num_tuples == 64);
  for (int r = 0; r < 15; ++r) {
    long long sum = 0;
    for (long long c = 0; c < m.num_tuples; ++c) sum += m.at(r, c);
    CHECK(sum == 8);  // one compatible tuple per labeling of the 3 pairs
  }
}

TEST_CASE("restriction to the e_(ij) columns reproduces the printed table") {
  EvaluationMatrix m = evaluation_matrix(3, 2);
  int col = 0;
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) {
      std::vector<int> tuple(6, 1);
      tuple[i - 1] = 2;
      tuple[j - 1] = 2;
      long long idx = tuple_index(tuple, 2);
      for (int r = 0; r < 15; ++r)
        CHECK(m.at(r, idx) == kRestricted15[r][col] - '0');
      ++col;
    }
  CHECK(col == 15);
}

TEST_CASE("kernel at p = 3, d = 2 equals the printed basis") {
  KernelBasis kb = kernel(3, 2);
  CHECK(kb.p == 3);
  CHECK(kb.d == 2);
  CHECK(kb.dimension() == 5);
  REQUIRE(kb.matching_order.size() == 15);
  CHECK(kb.basis == frozen_kernel());
}

TEST_CASE("kernel rows annihilate every tuple") {
  for (auto [p, d] : {std::pair{3, 2}, std::pair{2, 1}, std::pair{3, 1}}) {
    KernelBasis kb = kernel(p, d);
    EvaluationMatrix m = evaluation_matrix(p, d);
    CHECK(kb.dimension() > 0);
    for (const auto& row : kb.basis)
      for (long long c = 0; c < m.num_tuples; ++c) {
        Rational dot = 0;
        for (std::size_t r = 0; r < row.size(); ++r)
          dot += row[r] * m.at(static_cast<int>(r), c);
        CHECK(dot == 0);
      }
  }
}

TEST_CASE("kernel vanishes when p does not exceed d") {
  for (int p = 0; p <= 3; ++p)
    for (int d = p > 0 ? p : 1; d <= 4; ++d) {
      CHECK(kernel(p, d).dimension() == 0);
      CHECK(evaluation_rank(p, d) ==
            static_cast<int>(enumerate_matchings(p).size()));
    }
}

TEST_CASE("small kernels below the threshold dimension") {
  KernelBasis k21 = kernel(2, 1);
  REQUIRE(k21.dimension() == 2);
  CHECK(k21.basis[0] == std::vector<Rational>{1, 0, -1});
  CHECK(k21.basis[1] == std::vector<Rational>{0, 1, -1});

  // In d = 1 only the all-ones tuple exists, so the kernel is the
  // sum-zero hyperplane.
  CHECK(kernel(3, 1).dimension() == 14);
  CHECK(kernel(4, 1).dimension() == 104);
}

TEST_CASE("evaluation ranks") {
  CHECK(evaluation_rank(3, 2) == 10);
  CHECK(evaluation_rank(2, 1) == 1);
  CHECK(evaluation_rank(3, 1) == 1);
  CHECK(evaluation_rank(2, 2) == 3);
  CHECK(evaluation_rank(3, 3) == 15);
  // 105 matchings, 35 independent invariants (half the central binomial
  // coefficient), so the kernel has dimension 70.
  CHECK(evaluation_rank(4, 2) == 35);
  CHECK(kernel(4, 2).dimension() == 70);
}

TEST_CASE("kernel rows are orthogonal to the all-ones column") {
  KernelBasis kb = kernel(3, 2);
  for (const auto& row : kb.basis) {
    Rational sum = 0;
    for (const auto& x : row) sum += x;
    CHECK(sum == 0);
  }
}

TEST_CASE("symmetry averaging of the printed kernel") {
  auto K = frozen_kernel();

  // (0,[0,3]): per-orbit sums of row 0 give the three-class coefficients.
  CHECK(average_over_symmetry(K[0], DegreeVector(0, {0, 3})) ==
        std::vector<Rational>{1, -3, 2});
  // (0,[2,2]) in orbit order (least matching index first).
  CHECK(average_over_symmetry(K[0], DegreeVector(0, {2, 2})) ==
        std::vector<Rational>{1, -1, -2, 2});

  // Rows 1..4 vanish on both degree vectors.
  for (int r = 1; r < 5; ++r) {
    for (const auto& x : average_over_symmetry(K[r], DegreeVector(0, {0, 3})))
      CHECK(x == 0);
    for (const auto& x : average_over_symmetry(K[r], DegreeVector(0, {2, 2})))
      CHECK(x == 0);
  }

  // Every kernel row vanishes on the other nine degree vectors.
  for (const auto& beta : enumerate_degree_vectors(3)) {
    if (beta == DegreeVector(0, {0, 3}) || beta == DegreeVector(0, {2, 2}))
      continue;
    for (const auto& row : K)
      for (const auto& x : average_over_symmetry(row, beta)) CHECK(x == 0);
  }

  CHECK_THROWS_AS(average_over_symmetry({1, 2}, DegreeVector(0, {0, 3})),
                  std::invalid_argument);
}

TEST_CASE("averaging is linear") {
  Rng rng(99);
  DegreeVector beta(0, {2, 2});
  std::vector<Rational> u(15), v(15);
  for (auto& x : u) x = Rational(rng.uniform_int(-5, 5));
  for (auto& x : v) x = Rational(rng.uniform_int(-5, 5));
  std::vector<Rational> w(15);
  for (int i = 0; i < 15; ++i) w[i] = 3 * u[i] - 7 * v[i];

  auto au = average_over_symmetry(u, beta);
  auto av = average_over_symmetry(v, beta);
  auto aw = average_over_symmetry(w, beta);
  for (std::size_t i = 0; i < aw.size(); ++i)
    CHECK(aw[i] == 3 * au[i] - 7 * av[i]);
}

TEST_CASE("resource guard refuses oversized tables") {
  CHECK_THROWS_AS(evaluation_matrix(3, 2, 100), ResourceLimitError);
  // (2*5-1)!! * 3^10 = 945 * 59049 > 10^7 cells.
  CHECK_THROWS_AS(kernel(5, 3), ResourceLimitError);
  try {
    kernel(5, 3);
  } catch (const ResourceLimitError& e) {
    CHECK(e.requested_cells > e.ceiling_cells);
    CHECK(e.ceiling_cells == kDefaultCellCeiling);
  }

  // Explicit request wins over the environment and the default.
  CHECK(evaluation_matrix(1, 2, 1000).num_tuples == 4);
}

TEST_CASE("environment variable sets the default ceiling") {
  setenv("MGO_MAX_CELLS", "40", 1);  // 3 matchings * 16 tuples = 48 cells
  CHECK_THROWS_AS(evaluation_matrix(2, 2), ResourceLimitError);
  CHECK(evaluation_matrix(2, 2, 100).num_tuples == 16);  // explicit override
  setenv("MGO_MAX_CELLS", "banana", 1);
  CHECK_THROWS_AS(evaluation_matrix(1, 2), std::invalid_argument);
  unsetenv("MGO_MAX_CELLS");
  CHECK(evaluation_matrix(2, 2).num_tuples == 16);
}
