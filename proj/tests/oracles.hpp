#pragma once

// Test-only reference computations. Nothing here shares code paths with the
// library routines it is used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "spectral_lab/graph.hpp"
#include "spectral_lab/symmetric_eigen.hpp"

namespace oracle {

using spectral_lab::BipartiteGraph;
using spectral_lab::Edge;
using spectral_lab::Graph;
using spectral_lab::SymmetricMatrix;

// Number of eigenvalues of M strictly below sigma, by Sylvester inertia of
// an unpivoted LDL^t factorisation of M - sigma I.
inline int eigenvalues_below(const SymmetricMatrix& m, double sigma) {
  const int n = m.order();
  std::vector<double> a(m.data());
  for (int i = 0; i < n; ++i) a[i * n + i] -= sigma;
  int negative = 0;
  for (int k = 0; k < n; ++k) {
    double pivot = a[k * n + k];
    if (pivot == 0.0) pivot = 1e-300;
    if (pivot < 0) ++negative;
    for (int i = k + 1; i < n; ++i) {
      const double f = a[i * n + k] / pivot;
      for (int j = k + 1; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
    }
  }
  return negative;
}

// All eigenvalues, ascending, by bisection on the inertia count.
inline std::vector<double> bisection_eigenvalues(const SymmetricMatrix& m) {
  const int n = m.order();
  double radius = 0.0;  // Gershgorin bound
  for (int i = 0; i < n; ++i) {
    double r = 0.0;
    for (int j = 0; j < n; ++j) r += std::abs(m(i, j));
    radius = std::max(radius, r);
  }
  std::vector<double> out;
  for (int k = 0; k < n; ++k) {
    double lo = -radius - 1.0, hi = radius + 1.0;
    for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (eigenvalues_below(m, mid) > k)
        hi = mid;
      else
        lo = mid;
    }
    out.push_back(0.5 * (lo + hi));
  }
  return out;
}

// Eigenvalues of a symmetric tridiagonal matrix strictly below sigma
// (Sturm sequence).
inline int tridiagonal_below(const std::vector<double>& diag, const std::vector<double>& off, double sigma) {
  int count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    const double b2 = i == 0 ? 0.0 : off[i - 1] * off[i - 1];
    q = diag[i] - sigma - (i == 0 ? 0.0 : b2 / q);
    if (q == 0.0) q = -1e-300;
    if (q < 0) ++count;
  }
  return count;
}

inline std::vector<std::vector<bool>> adjacency(const Graph& g) {
  std::vector<std::vector<bool>> a(g.order(), std::vector<bool>(g.order(), false));
  for (const auto& [x, y] : g.edges()) a[x][y] = a[y][x] = true;
  return a;
}

// O(|E|^2) filter: four distinct endpoints and no edge between the pairs.
inline std::vector<std::pair<Edge, Edge>> independent_pairs(const BipartiteGraph& bg) {
  const Graph g = bg.to_graph();
  const auto a = adjacency(g);
  std::vector<std::pair<Edge, Edge>> out;
  const auto& e = bg.edges();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      const int p[2] = {e[i].first, bg.global_right(e[i].second)};
      const int q[2] = {e[j].first, bg.global_right(e[j].second)};
      std::set<int> s{p[0], p[1], q[0], q[1]};
      if (s.size() != 4) continue;
      bool cross = false;
      for (int x : p)
        for (int y : q) cross = cross || a[x][y];
      if (!cross) out.emplace_back(e[i], e[j]);
    }
  return out;
}

// Union-find connectivity.
inline bool connected(const Graph& g) {
  std::vector<int> parent(g.order());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = g.order();
  for (const auto& [x, y] : g.edges()) {
    const int rx = find(x), ry = find(y);
    if (rx != ry) {
      parent[rx] = ry;
      --comps;
    }
  }
  return comps <= 1;
}

// Isomorphism key for an n x n 0/1 matrix given as row bitmasks (bit j =
// column j): the minimum over all column permutations and over transposition
// of the sorted row list. Exhaustive, so only for n <= 8.
inline std::vector<std::uint32_t> brute_matrix_key(int n, const std::vector<std::uint32_t>& rows) {
  auto transpose = [n](const std::vector<std::uint32_t>& r) {
    std::vector<std::uint32_t> t(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if ((r[i] >> j) & 1u) t[j] |= 1u << i;
    return t;
  };
  std::vector<std::uint32_t> best;
  std::vector<int> perm(n);
  for (const auto& m : {rows, transpose(rows)}) {
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<std::uint32_t> r(n, 0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if ((m[i] >> j) & 1u) r[i] |= 1u << perm[j];
      std::sort(r.begin(), r.end());
      if (best.empty() || r < best) best = r;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return best;
}

struct BruteClass {
  BipartiteGraph graph;
  bool connected;
};

// Every isomorphism class of 3-regular n x n biadjacency matrices (rows
// taken as a non-decreasing multiset of 3-subsets), deduplicated by
// brute_matrix_key.
inline std::vector<BruteClass> brute_cubic_bipartite_classes(int n) {
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t r = 0; r < (1u << n); ++r)
    if (__builtin_popcount(r) == 3) subsets.push_back(r);
  std::map<std::vector<std::uint32_t>, BruteClass> classes;
  std::vector<int> pick(n, 0);
  std::vector<int> colsum(n, 0);
  auto rec = [&](auto&& self, int i, int from) -> void {
    if (i == n) {
      for (int c : colsum)
        if (c != 3) return;
      std::vector<std::uint32_t> rows(n);
      for (int k = 0; k < n; ++k) rows[k] = subsets[pick[k]];
      auto key = brute_matrix_key(n, rows);
      if (classes.contains(key)) return;
      std::vector<Edge> edges;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if ((rows[a] >> b) & 1u) edges.emplace_back(a, b);
      BipartiteGraph g(n, n, edges);
      classes.emplace(std::move(key), BruteClass{g, connected(g.to_graph())});
      return;
    }
    for (int s = from; s < static_cast<int>(subsets.size()); ++s) {
      bool ok = true;
      for (int j = 0; j < n; ++j)
        if ((subsets[s] >> j) & 1u && colsum[j] == 3) ok = false;
      if (!ok) continue;
      for (int j = 0; j < n; ++j) colsum[j] += (subsets[s] >> j) & 1u;
      pick[i] = s;
      self(self, i + 1, s);
      for (int j = 0; j < n; ++j) colsum[j] -= (subsets[s] >> j) & 1u;
    }
  };
  rec(rec, 0, 0);
  std::vector<BruteClass> out;
  for (auto& [k, c] : classes) out.push_back(std::move(c));
  return out;
}

// Exhaustive isomorphism test for bipartite graphs with equal parts
// (part-preserving or part-swapping), n <= 8.
inline bool isomorphic(const BipartiteGraph& a, const BipartiteGraph& b) {
  if (a.n_left() != b.n_left() || a.n_right() != b.n_right() || a.size() != b.size()) return false;
  const int n = a.n_left();
  auto rows = [n](const BipartiteGraph& g) {
    std::vector<std::uint32_t> r(n, 0);
    for (const auto& [u, v] : g.edges()) r[u] |= 1u << v;
    return r;
  };
  return brute_matrix_key(n, rows(a)) == brute_matrix_key(n, rows(b));
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Erdos-Renyi bipartite graph.
inline BipartiteGraph random_bipartite(int nl, int nr, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < nl; ++u)
    for (int v = 0; v < nr; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return BipartiteGraph(nl, nr, edges);
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (coin(rng)) edges.emplace_back(a, b);
  return Graph(n, edges);
}

}  // namespace oracle
