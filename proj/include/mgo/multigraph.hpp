#pragma once

#include <mgo/rational.hpp>

#include <compare>
#include <utility>
#include <vector>

namespace mgo {

// Undirected multigraph with loops. Edges are stored as pairs (i,j) with
// i <= j, the list kept sorted; parallel edges repeat. A loop contributes 2
// to its vertex's degree. Vertices are 0-based.
struct Multigraph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;

  Multigraph() = default;
  Multigraph(int n, std::vector<std::pair<int, int>> e);

  int num_edges() const { return static_cast<int>(edges.size()); }
  int degree(int v) const;
  std::vector<int> degrees() const;
  int max_degree() const;

  bool operator==(const Multigraph&) const = default;
  bool operator<(const Multigraph&) const;
};

// Degree census: beta0 isolated vertices, vec[j-1] vertices of degree j,
// trailing zeros trimmed.
struct DegreeVector {
  int beta0 = 0;
  std::vector<int> vec;

  DegreeVector() = default;
  DegreeVector(int b0, std::vector<int> v);

  int edge_count() const;    // half the degree sum
  int vertex_count() const;  // beta0 + sum of vec
  int order() const;         // largest degree present, 0 if none

  bool operator==(const DegreeVector&) const = default;
  bool operator<(const DegreeVector&) const;
};

// Perfect matching of {1,...,2p}: p disjoint pairs, each sorted, the list
// sorted. Indices are 1-based.
struct PerfectMatching {
  std::vector<std::pair<int, int>> pairs;

  PerfectMatching() = default;
  explicit PerfectMatching(std::vector<std::pair<int, int>> pr);

  int p() const { return static_cast<int>(pairs.size()); }

  bool operator==(const PerfectMatching&) const = default;
  bool operator<(const PerfectMatching&) const;
};

// Slot range of one positive-degree vertex in the canonical fiber layout:
// vertices ordered by non-decreasing degree, fibers consecutive and 0-based.
struct Fiber {
  int start = 0;
  int length = 0;
};

// Generating set of the symmetry group of a degree vector inside S_{2p}:
// within-fiber adjacent transpositions plus blockwise swaps of adjacent
// equal-degree fibers. Permutations are 0-based image arrays of length 2p.
struct SymmetryGroup {
  int num_slots = 0;
  std::vector<Fiber> fibers;
  std::vector<std::vector<int>> generators;
};

// Orbit of the symmetry group acting on lexicographically enumerated
// matchings; indices are sorted positions in enumerate_matchings' output.
struct Orbit {
  std::vector<int> matching_indices;
};

DegreeVector degree_vector(const Multigraph& g);

// All perfect matchings of {1..2p} in lexicographic order (the smallest
// unmatched index pairs first). Size (2p-1)!!.
std::vector<PerfectMatching> enumerate_matchings(int p);

// Canonical fiber construction: slot s of the matching maps to the vertex
// whose fiber contains s-1. Throws std::invalid_argument when the degree sum
// of beta differs from 2p.
Multigraph build_graph(const PerfectMatching& rho, const DegreeVector& beta);

// Lexicographically least relabeling among all degree-preserving
// permutations, vertices in non-decreasing degree order. Memoized.
Multigraph canonical_form(const Multigraph& g);

// Relabels vertices: vertex v becomes perm[v]. perm must be a permutation of
// 0..n-1.
Multigraph relabel(const Multigraph& g, const std::vector<int>& perm);

SymmetryGroup symmetry_generators(const DegreeVector& beta);

// prod_j (j!)^beta_j * (beta_j!), the order of the group the generators span.
Integer symmetry_group_order(const DegreeVector& beta);

// Applies a 0-based image permutation to a matching's 1-based slots.
PerfectMatching apply_permutation(const std::vector<int>& perm,
                                  const PerfectMatching& rho);

// Orbits of the symmetry group on matchings, ordered by least contained
// matching index. Orbit sizes sum to (2p-1)!!.
std::vector<Orbit> orbits(const DegreeVector& beta);

// Canonical form of the least matching in each orbit, aligned with orbits().
std::vector<Multigraph> orbit_representatives(const DegreeVector& beta);

// All degree vectors with beta0 = 0 and edge count p, ordered by
// (vertex count asc, order asc, vec lex asc).
std::vector<DegreeVector> enumerate_degree_vectors(int p);

// Loops are ignored for reachability; graphs with at most one vertex count
// as connected.
bool is_connected(const Multigraph& g);

// Isomorphism classes with exactly p_exact edges, canonical forms, grouped by
// degree vector in enumerate_degree_vectors order, orbits in orbit order.
// Each core class is followed by its variants with 1..max_isolated added
// isolated vertices; connected_only disables those variants and drops
// disconnected cores.
std::vector<Multigraph> enumerate_classes(int p_exact, bool connected_only,
                                          int max_isolated);

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b);

// Inverse of build_graph on canonical forms: returns (rho, beta) with
// build_graph(rho, beta) isomorphic to g. Matching slots are assigned
// fiber-consecutively following the sorted edge list of the canonical form.
std::pair<PerfectMatching, DegreeVector> parametrize(const Multigraph& g);

}  // namespace mgo
