#pragma once

#include <mgo/multigraph.hpp>
#include <mgo/ratlin.hpp>

#include <cstdint>
#include <vector>

namespace mgo {

inline constexpr unsigned long long kDefaultCellCeiling = 10'000'000ULL;

// Effective ceiling: the explicit request if nonzero, else the MGO_MAX_CELLS
// environment variable, else the default.
unsigned long long resolved_cell_ceiling(unsigned long long requested);

// Product of Kronecker deltas over the matching's pairs, evaluated on an
// index tuple with entries in 1..d. Always 0 or 1. Throws
// std::invalid_argument when the tuple length differs from 2p.
int tau_eval(const PerfectMatching& rho, const std::vector<int>& tuple);

// Dense 0/1 evaluation table: rows are matchings in lexicographic order,
// columns the d^(2p) index tuples in lexicographic order (last position
// fastest). Entries are exact; bytes keep large tables affordable.
struct EvaluationMatrix {
  int p = 0;
  int d = 0;
  std::vector<PerfectMatching> matchings;
  long long num_tuples = 0;
  std::vector<std::uint8_t> bits;

  int at(int row, long long col) const {
    return bits[std::size_t(row) * num_tuples + col];
  }
};

// Throws ResourceLimitError when rows * columns exceeds the ceiling.
EvaluationMatrix evaluation_matrix(int p, int d,
                                   unsigned long long max_cells = 0);

// Exact basis of the coefficient vectors annihilating every index tuple,
// rows in RREF over the lexicographic matching order, integer-cleared,
// lead-positive.
struct KernelBasis {
  int p = 0;
  int d = 0;
  std::vector<PerfectMatching> matching_order;
  std::vector<std::vector<Rational>> basis;

  int dimension() const { return static_cast<int>(basis.size()); }
};

// Streams tuples and deduplicates identical columns before elimination;
// deduplication is exact (equal columns impose equal constraints). Guarded
// by the same rows * d^(2p) cell count as evaluation_matrix.
KernelBasis kernel(int p, int d, unsigned long long max_cells = 0);

// (2p-1)!! minus the kernel dimension.
int evaluation_rank(int p, int d, unsigned long long max_cells = 0);

// Per-orbit sums of a matching-indexed coefficient vector, ordered like
// orbits(beta). Throws std::invalid_argument on length mismatch.
std::vector<Rational> average_over_symmetry(const std::vector<Rational>& coeffs,
                                            const DegreeVector& beta);

}  // namespace mgo
