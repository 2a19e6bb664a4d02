#include <mgo/multigraph.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace mgo {

Multigraph::Multigraph(int n, std::vector<std::pair<int, int>> e)
    : num_vertices(n), edges(std::move(e)) {
  if (n < 0) throw std::invalid_argument("multigraph: negative vertex count");
  for (auto& [i, j] : edges) {
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= n)
      throw std::invalid_argument("multigraph: edge endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
}

int Multigraph::degree(int v) const {
  int d = 0;
  for (const auto& [i, j] : edges) {
    if (i == v) ++d;
    if (j == v) ++d;
  }
  return d;
}

std::vector<int> Multigraph::degrees() const {
  std::vector<int> d(num_vertices, 0);
  for (const auto& [i, j] : edges) {
    ++d[i];
    ++d[j];
  }
  return d;
}

int Multigraph::max_degree() const {
  auto d = degrees();
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

bool Multigraph::operator<(const Multigraph& other) const {
  if (num_vertices != other.num_vertices)
    return num_vertices < other.num_vertices;
  return edges < other.edges;
}

DegreeVector::DegreeVector(int b0, std::vector<int> v)
    : beta0(b0), vec(std::move(v)) {
  if (beta0 < 0) throw std::invalid_argument("degree vector: negative beta0");
  for (int c : vec)
    if (c < 0) throw std::invalid_argument("degree vector: negative count");
  while (!vec.empty() && vec.back() == 0) vec.pop_back();
}

int DegreeVector::edge_count() const {
  long long sum = 0;
  for (std::size_t j = 0; j < vec.size(); ++j)
    sum += static_cast<long long>(j + 1) * vec[j];
  if (sum % 2 != 0)
    throw std::invalid_argument("degree vector: odd degree sum");
  return static_cast<int>(sum / 2);
}

int DegreeVector::vertex_count() const {
  return beta0 + std::accumulate(vec.begin(), vec.end(), 0);
}

int DegreeVector::order() const { return static_cast<int>(vec.size()); }

bool DegreeVector::operator<(const DegreeVector& other) const {
  if (beta0 != other.beta0) return beta0 < other.beta0;
  return vec < other.vec;
}

PerfectMatching::PerfectMatching(std::vector<std::pair<int, int>> pr)
    : pairs(std::move(pr)) {
  for (auto& [a, b] : pairs)
    if (a > b) std::swap(a, b);
  std::sort(pairs.begin(), pairs.end());
  std::vector<int> seen(2 * pairs.size() + 1, 0);
  for (const auto& [a, b] : pairs) {
    if (a < 1 || b > 2 * p() || a == b)
      throw std::invalid_argument("matching: index out of range");
    ++seen[a];
    ++seen[b];
  }
  for (std::size_t i = 1; i < seen.size(); ++i)
    if (seen[i] != 1)
      throw std::invalid_argument("matching: indices must cover 1..2p once");
}

bool PerfectMatching::operator<(const PerfectMatching& other) const {
  return pairs < other.pairs;
}

DegreeVector degree_vector(const Multigraph& g) {
  auto d = g.degrees();
  int beta0 = 0;
  int maxd = 0;
  for (int x : d) {
    if (x == 0) ++beta0;
    maxd = std::max(maxd, x);
  }
  std::vector<int> vec(maxd, 0);
  for (int x : d)
    if (x > 0) ++vec[x - 1];
  return DegreeVector(beta0, std::move(vec));
}

namespace {

void matchings_rec(std::vector<bool>& used, std::vector<std::pair<int, int>>& cur,
                   int n, std::vector<PerfectMatching>& out) {
  int a = -1;
  for (int i = 1; i <= n; ++i)
    if (!used[i]) {
      a = i;
      break;
    }
  if (a == -1) {
    out.emplace_back(cur);
    return;
  }
  used[a] = true;
  for (int b = a + 1; b <= n; ++b) {
    if (used[b]) continue;
    used[b] = true;
    cur.emplace_back(a, b);
    matchings_rec(used, cur, n, out);
    cur.pop_back();
    used[b] = false;
  }
  used[a] = false;
}

}  // namespace

std::vector<PerfectMatching> enumerate_matchings(int p) {
  if (p < 0) throw std::invalid_argument("enumerate_matchings: negative p");
  std::vector<PerfectMatching> out;
  if (p == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<bool> used(2 * p + 1, false);
  std::vector<std::pair<int, int>> cur;
  matchings_rec(used, cur, 2 * p, out);
  return out;
}

namespace {

// Vertex of each 0-based slot under the canonical fiber layout: beta0
// isolated vertices first, then vertices in non-decreasing degree order with
// consecutive fibers.
std::vector<int> slot_vertices(const DegreeVector& beta) {
  std::vector<int> sv;
  int v = beta.beta0;
  for (int j = 1; j <= beta.order(); ++j)
    for (int c = 0; c < beta.vec[j - 1]; ++c) {
      for (int t = 0; t < j; ++t) sv.push_back(v);
      ++v;
    }
  return sv;
}

}  // namespace

Multigraph build_graph(const PerfectMatching& rho, const DegreeVector& beta) {
  auto sv = slot_vertices(beta);
  if (static_cast<int>(sv.size()) != 2 * rho.p())
    throw std::invalid_argument(
        "build_graph: degree sum of beta does not match matching size");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(rho.p());
  for (const auto& [a, b] : rho.pairs) edges.emplace_back(sv[a - 1], sv[b - 1]);
  return Multigraph(beta.vertex_count(), std::move(edges));
}

Multigraph relabel(const Multigraph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.num_vertices)
    throw std::invalid_argument("relabel: permutation size mismatch");
  std::vector<bool> seen(perm.size(), false);
  for (int x : perm) {
    if (x < 0 || x >= g.num_vertices || seen[x])
      throw std::invalid_argument("relabel: not a permutation");
    seen[x] = true;
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges.size());
  for (const auto& [i, j] : g.edges) edges.emplace_back(perm[i], perm[j]);
  return Multigraph(g.num_vertices, std::move(edges));
}

namespace {

// Exhaustive minimization over degree-preserving relabelings. Groups of
// equal degree are permuted independently; the degree-0 group never affects
// the edge list and is skipped.
std::vector<std::pair<int, int>> minimize_edges(
    const Multigraph& g, const std::vector<std::pair<int, int>>& groups) {
  std::vector<int> perm(g.num_vertices);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<int, int>> best = g.edges;

  auto apply = [&]() {
    std::vector<std::pair<int, int>> cand;
    cand.reserve(g.edges.size());
    for (const auto& [i, j] : g.edges) {
      int a = perm[i], b = perm[j];
      cand.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(cand.begin(), cand.end());
    if (cand < best) best = std::move(cand);
  };

  auto rec = [&](auto&& self, std::size_t gi) -> void {
    if (gi == groups.size()) {
      apply();
      return;
    }
    auto [start, len] = groups[gi];
    std::vector<int> vals(len);
    std::iota(vals.begin(), vals.end(), start);
    do {
      for (int t = 0; t < len; ++t) perm[start + t] = vals[t];
      self(self, gi + 1);
    } while (std::next_permutation(vals.begin(), vals.end()));
  };
  rec(rec, 0);
  return best;
}

}  // namespace

Multigraph canonical_form(const Multigraph& g) {
  // Single-threaded memoization.
  static std::map<Multigraph, Multigraph> memo;

  auto deg = g.degrees();
  std::vector<int> order(g.num_vertices);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return deg[a] < deg[b]; });
  std::vector<int> perm(g.num_vertices);
  for (int pos = 0; pos < g.num_vertices; ++pos) perm[order[pos]] = pos;
  Multigraph sorted = relabel(g, perm);

  auto it = memo.find(sorted);
  if (it != memo.end()) return it->second;

  auto sdeg = sorted.degrees();
  std::vector<std::pair<int, int>> groups;
  for (int v = 0; v < sorted.num_vertices;) {
    int w = v;
    while (w < sorted.num_vertices && sdeg[w] == sdeg[v]) ++w;
    if (sdeg[v] > 0 && w - v > 1) groups.emplace_back(v, w - v);
    v = w;
  }
  Multigraph canon(sorted.num_vertices, minimize_edges(sorted, groups));
  memo.emplace(std::move(sorted), canon);
  return canon;
}

SymmetryGroup symmetry_generators(const DegreeVector& beta) {
  SymmetryGroup sg;
  sg.num_slots = 2 * beta.edge_count();

  std::vector<int> fiber_degree;
  int start = 0;
  for (int j = 1; j <= beta.order(); ++j)
    for (int c = 0; c < beta.vec[j - 1]; ++c) {
      sg.fibers.push_back({start, j});
      fiber_degree.push_back(j);
      start += j;
    }

  auto identity = [&]() {
    std::vector<int> perm(sg.num_slots);
    std::iota(perm.begin(), perm.end(), 0);
    return perm;
  };

  for (const auto& f : sg.fibers)
    for (int t = 0; t + 1 < f.length; ++t) {
      auto perm = identity();
      std::swap(perm[f.start + t], perm[f.start + t + 1]);
      sg.generators.push_back(std::move(perm));
    }

  for (std::size_t a = 0; a < sg.fibers.size();) {
    std::size_t b = a;
    while (b < sg.fibers.size() && fiber_degree[b] == fiber_degree[a]) ++b;
    for (std::size_t t = a; t + 1 < b; ++t) {
      auto perm = identity();
      for (int s = 0; s < sg.fibers[t].length; ++s) {
        perm[sg.fibers[t].start + s] = sg.fibers[t + 1].start + s;
        perm[sg.fibers[t + 1].start + s] = sg.fibers[t].start + s;
      }
      sg.generators.push_back(std::move(perm));
    }
    a = b;
  }
  return sg;
}

Integer symmetry_group_order(const DegreeVector& beta) {
  auto factorial = [](int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  Integer ord = 1;
  for (int j = 1; j <= beta.order(); ++j) {
    int bj = beta.vec[j - 1];
    for (int c = 0; c < bj; ++c) ord *= factorial(j);
    ord *= factorial(bj);
  }
  return ord;
}

PerfectMatching apply_permutation(const std::vector<int>& perm,
                                  const PerfectMatching& rho) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(rho.pairs.size());
  for (const auto& [a, b] : rho.pairs)
    pairs.emplace_back(perm[a - 1] + 1, perm[b - 1] + 1);
  return PerfectMatching(std::move(pairs));
}

std::vector<Orbit> orbits(const DegreeVector& beta) {
  const int p = beta.edge_count();
  auto matchings = enumerate_matchings(p);
  std::map<PerfectMatching, int> index;
  for (std::size_t i = 0; i < matchings.size(); ++i)
    index.emplace(matchings[i], static_cast<int>(i));

  auto sg = symmetry_generators(beta);
  std::vector<bool> visited(matchings.size(), false);
  std::vector<Orbit> out;
  for (std::size_t i = 0; i < matchings.size(); ++i) {
    if (visited[i]) continue;
    Orbit orb;
    std::vector<int> queue{static_cast<int>(i)};
    visited[i] = true;
    while (!queue.empty()) {
      int cur = queue.back();
      queue.pop_back();
      orb.matching_indices.push_back(cur);
      for (const auto& gen : sg.generators) {
        int nxt = index.at(apply_permutation(gen, matchings[cur]));
        if (!visited[nxt]) {
          visited[nxt] = true;
          queue.push_back(nxt);
        }
      }
    }
    std::sort(orb.matching_indices.begin(), orb.matching_indices.end());
    out.push_back(std::move(orb));
  }
  return out;
}

std::vector<Multigraph> orbit_representatives(const DegreeVector& beta) {
  auto matchings = enumerate_matchings(beta.edge_count());
  std::vector<Multigraph> reps;
  for (const auto& orb : orbits(beta))
    reps.push_back(
        canonical_form(build_graph(matchings[orb.matching_indices[0]], beta)));
  return reps;
}

std::vector<DegreeVector> enumerate_degree_vectors(int p) {
  if (p < 0)
    throw std::invalid_argument("enumerate_degree_vectors: negative p");
  std::vector<DegreeVector> out;
  std::vector<int> vec(2 * p, 0);
  auto rec = [&](auto&& self, int j, int remaining) -> void {
    if (j == 0) {
      if (remaining == 0) out.emplace_back(0, vec);
      return;
    }
    for (int c = 0; c * j <= remaining; ++c) {
      vec[j - 1] = c;
      self(self, j - 1, remaining - c * j);
    }
    vec[j - 1] = 0;
  };
  rec(rec, 2 * p, 2 * p);
  std::sort(out.begin(), out.end(), [](const DegreeVector& a,
                                       const DegreeVector& b) {
    if (a.vertex_count() != b.vertex_count())
      return a.vertex_count() < b.vertex_count();
    if (a.order() != b.order()) return a.order() < b.order();
    return a.vec < b.vec;
  });
  return out;
}

bool is_connected(const Multigraph& g) {
  if (g.num_vertices <= 1) return true;
  std::vector<int> parent(g.num_vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [i, j] : g.edges)
    if (i != j) parent[find(i)] = find(j);
  int root = find(0);
  for (int v = 1; v < g.num_vertices; ++v)
    if (find(v) != root) return false;
  return true;
}

std::vector<Multigraph> enumerate_classes(int p_exact, bool connected_only,
                                          int max_isolated) {
  if (p_exact < 0 || max_isolated < 0)
    throw std::invalid_argument("enumerate_classes: negative argument");

  auto with_isolated = [](const Multigraph& core, int iso) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(core.edges.size());
    for (const auto& [i, j] : core.edges) edges.emplace_back(i + iso, j + iso);
    return Multigraph(core.num_vertices + iso, std::move(edges));
  };

  std::vector<Multigraph> out;
  std::vector<Multigraph> cores;
  if (p_exact == 0) {
    cores.emplace_back();
  } else {
    auto matchings = enumerate_matchings(p_exact);
    for (const auto& beta : enumerate_degree_vectors(p_exact))
      for (const auto& orb : orbits(beta)) {
        Multigraph rep =
            canonical_form(build_graph(matchings[orb.matching_indices[0]], beta));
        if (connected_only && !is_connected(rep)) continue;
        cores.push_back(std::move(rep));
      }
  }
  for (const auto& core : cores) {
    out.push_back(core);
    if (!connected_only)
      for (int iso = 1; iso <= max_isolated; ++iso)
        out.push_back(with_isolated(core, iso));
  }
  return out;
}

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b) {
  std::vector<std::pair<int, int>> edges = a.edges;
  edges.reserve(a.edges.size() + b.edges.size());
  for (const auto& [i, j] : b.edges)
    edges.emplace_back(i + a.num_vertices, j + a.num_vertices);
  return Multigraph(a.num_vertices + b.num_vertices, std::move(edges));
}

std::pair<PerfectMatching, DegreeVector> parametrize(const Multigraph& g) {
  Multigraph canon = canonical_form(g);
  DegreeVector beta = degree_vector(canon);

  auto deg = canon.degrees();
  std::vector<int> fiber_start(canon.num_vertices, 0);
  int slot = 0;
  for (int v = 0; v < canon.num_vertices; ++v) {
    fiber_start[v] = slot;
    slot += deg[v];
  }
  std::vector<int> next = fiber_start;
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(canon.edges.size());
  for (const auto& [u, v] : canon.edges) {
    int a = ++next[u];
    int b = ++next[v];
    pairs.emplace_back(a, b);  // 1-based: next was pre-incremented
  }
  return {PerfectMatching(std::move(pairs)), std::move(beta)};
}

}  // namespace mgo
