#include <mgo/invariant_tensor.hpp>

#include <mgo/errors.hpp>

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>

namespace mgo {

unsigned long long resolved_cell_ceiling(unsigned long long requested) {
  if (requested != 0) return requested;
  if (const char* env = std::getenv("MGO_MAX_CELLS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw std::invalid_argument("MGO_MAX_CELLS: not a positive integer");
  }
  return kDefaultCellCeiling;
}

int tau_eval(const PerfectMatching& rho, const std::vector<int>& tuple) {
  if (static_cast<int>(tuple.size()) != 2 * rho.p())
    throw std::invalid_argument("tau_eval: tuple length must be 2p");
  for (const auto& [a, b] : rho.pairs)
    if (tuple[a - 1] != tuple[b - 1]) return 0;
  return 1;
}

namespace {

unsigned long long double_factorial_odd(int p) {
  unsigned long long r = 1;
  for (int i = 1; i <= 2 * p - 1; i += 2) r *= static_cast<unsigned>(i);
  return r;
}

// rows * d^(2p), saturated at ULLONG_MAX / 2 to keep the comparison safe.
unsigned long long cell_count(int p, int d, unsigned long long rows) {
  const unsigned long long cap = ~0ULL / 2;
  unsigned long long cells = rows;
  for (int i = 0; i < 2 * p; ++i) {
    if (cells > cap / static_cast<unsigned>(d)) return cap;
    cells *= static_cast<unsigned>(d);
  }
  return cells;
}

void check_guard(int p, int d, unsigned long long rows,
                 unsigned long long max_cells, const char* who) {
  unsigned long long ceiling = resolved_cell_ceiling(max_cells);
  unsigned long long cells = cell_count(p, d, rows);
  if (cells > ceiling)
    throw ResourceLimitError(std::string(who) + ": " + std::to_string(cells) +
                                 " cells exceed ceiling " +
                                 std::to_string(ceiling),
                             cells, ceiling);
}

// Lexicographic odometer over {1..d}^(2p); returns false after the last
// tuple.
bool next_tuple(std::vector<int>& t, int d) {
  for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
    if (t[i] < d) {
      ++t[i];
      return true;
    }
    t[i] = 1;
  }
  return false;
}

}  // namespace

EvaluationMatrix evaluation_matrix(int p, int d, unsigned long long max_cells) {
  if (p < 0 || d < 1)
    throw std::invalid_argument("evaluation_matrix: need p >= 0, d >= 1");
  EvaluationMatrix m;
  m.p = p;
  m.d = d;
  m.matchings = enumerate_matchings(p);
  check_guard(p, d, m.matchings.size(), max_cells, "evaluation_matrix");

  m.num_tuples = 1;
  for (int i = 0; i < 2 * p; ++i) m.num_tuples *= d;
  m.bits.resize(m.matchings.size() * static_cast<std::size_t>(m.num_tuples));

  std::vector<int> tuple(2 * p, 1);
  long long col = 0;
  do {
    for (std::size_t r = 0; r < m.matchings.size(); ++r)
      m.bits[r * m.num_tuples + col] =
          static_cast<std::uint8_t>(tau_eval(m.matchings[r], tuple));
    ++col;
  } while (next_tuple(tuple, d));
  return m;
}

KernelBasis kernel(int p, int d, unsigned long long max_cells) {
  if (p < 0 || d < 1)
    throw std::invalid_argument("kernel: need p >= 0, d >= 1");
  KernelBasis kb;
  kb.p = p;
  kb.d = d;
  kb.matching_order = enumerate_matchings(p);
  const int R = static_cast<int>(kb.matching_order.size());
  check_guard(p, d, R, max_cells, "kernel");

  // Distinct columns of the evaluation table, each one linear constraint.
  std::map<std::vector<std::uint8_t>, bool> distinct;
  std::vector<int> tuple(2 * p, 1);
  do {
    std::vector<std::uint8_t> col(R);
    for (int r = 0; r < R; ++r)
      col[r] = static_cast<std::uint8_t>(tau_eval(kb.matching_order[r], tuple));
    distinct.emplace(std::move(col), true);
  } while (next_tuple(tuple, d));

  RationalMatrix constraints(static_cast<int>(distinct.size()), R);
  int row = 0;
  for (const auto& [col, _] : distinct) {
    for (int r = 0; r < R; ++r) constraints.at(row, r) = int(col[r]);
    ++row;
  }
  kb.basis = nullspace(constraints);
  return kb;
}

int evaluation_rank(int p, int d, unsigned long long max_cells) {
  KernelBasis kb = kernel(p, d, max_cells);
  return static_cast<int>(kb.matching_order.size()) - kb.dimension();
}

std::vector<Rational> average_over_symmetry(const std::vector<Rational>& coeffs,
                                            const DegreeVector& beta) {
  const int p = beta.edge_count();
  if (coeffs.size() != double_factorial_odd(p))
    throw std::invalid_argument(
        "average_over_symmetry: coefficient count must be (2p-1)!!");
  std::vector<Rational> out;
  for (const auto& orb : orbits(beta)) {
    Rational sum = 0;
    for (int idx : orb.matching_indices) sum += coeffs[idx];
    out.push_back(std::move(sum));
  }
  return out;
}

}  // namespace mgo
