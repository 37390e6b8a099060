#pragma once

// Graph value types for the cubic bipartite spectral toolkit.
//
// Two representations are used throughout:
//   BipartiteGraph  parts U = {0..n_left-1}, V = {0..n_right-1}, edges (u, v)
//   Graph           simple undirected graph on {0..n-1}
//
// Whenever a BipartiteGraph is viewed as a plain Graph, U-vertex i maps to
// global vertex i and V-vertex j maps to global vertex n_left + j.

#include <algorithm>
#include <cstddef>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spectral_lab {

using Edge = std::pair<int, int>;

class Graph {
public:
  Graph() = default;

  Graph(int n, std::vector<Edge> edges) : n_(n), adj_(static_cast<std::size_t>(n)) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    for (auto& [a, b] : edges) {
      if (a < 0 || b < 0 || a >= n || b >= n)
        throw std::invalid_argument("Graph: edge endpoint out of range");
      if (a == b) throw std::invalid_argument("Graph: self-loop");
      if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      throw std::invalid_argument("Graph: duplicate edge");
    edges_ = std::move(edges);
    for (const auto& [a, b] : edges_) {
      adj_[a].push_back(b);
      adj_[b].push_back(a);
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
  }

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

  bool has_edge(int a, int b) const {
    const auto& row = adj_.at(a);
    return std::binary_search(row.begin(), row.end(), b);
  }

  int min_degree() const {
    int d = n_ == 0 ? 0 : degree(0);
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
  }

  /// Common degree if every vertex has the same degree, -1 otherwise.
  int regular_degree() const {
    if (n_ == 0) return 0;
    const int d = degree(0);
    for (int v = 1; v < n_; ++v)
      if (degree(v) != d) return -1;
    return d;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

class BipartiteGraph {
public:
  BipartiteGraph() = default;

  /// Edges are (u_index, v_index) pairs into U and V respectively.
  BipartiteGraph(int n_left, int n_right, std::vector<Edge> edges)
      : n_left_(n_left), n_right_(n_right),
        left_adj_(static_cast<std::size_t>(std::max(n_left, 0))),
        right_adj_(static_cast<std::size_t>(std::max(n_right, 0))) {
    if (n_left < 0 || n_right < 0)
      throw std::invalid_argument("BipartiteGraph: negative part size");
    for (const auto& [u, v] : edges)
      if (u < 0 || v < 0 || u >= n_left || v >= n_right)
        throw std::invalid_argument("BipartiteGraph: edge endpoint out of range");
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      throw std::invalid_argument("BipartiteGraph: duplicate edge");
    edges_ = std::move(edges);
    for (const auto& [u, v] : edges_) {
      left_adj_[u].push_back(v);
      right_adj_[v].push_back(u);
    }
    for (auto& row : right_adj_) std::sort(row.begin(), row.end());
  }

  int n_left() const { return n_left_; }
  int n_right() const { return n_right_; }
  int order() const { return n_left_ + n_right_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  const std::vector<int>& left_neighbors(int u) const { return left_adj_.at(u); }
  const std::vector<int>& right_neighbors(int v) const { return right_adj_.at(v); }

  bool has_edge(int u, int v) const {
    const auto& row = left_adj_.at(u);
    return std::binary_search(row.begin(), row.end(), v);
  }

  bool is_regular(int k) const {
    for (const auto& row : left_adj_)
      if (static_cast<int>(row.size()) != k) return false;
    for (const auto& row : right_adj_)
      if (static_cast<int>(row.size()) != k) return false;
    return true;
  }

  bool is_cubic() const { return is_regular(3); }

  int global_right(int v) const { return n_left_ + v; }

  Graph to_graph() const {
    std::vector<Edge> e;
    e.reserve(edges_.size());
    for (const auto& [u, v] : edges_) e.emplace_back(u, n_left_ + v);
    return Graph(order(), std::move(e));
  }

  /// Relabel within parts: U-vertex u becomes left_perm[u], V-vertex v becomes right_perm[v].
  BipartiteGraph relabeled(const std::vector<int>& left_perm,
                           const std::vector<int>& right_perm) const {
    std::vector<Edge> e;
    e.reserve(edges_.size());
    for (const auto& [u, v] : edges_) e.emplace_back(left_perm.at(u), right_perm.at(v));
    return BipartiteGraph(n_left_, n_right_, std::move(e));
  }

  /// Exchange the roles of U and V.
  BipartiteGraph swapped_parts() const {
    std::vector<Edge> e;
    e.reserve(edges_.size());
    for (const auto& [u, v] : edges_) e.emplace_back(v, u);
    return BipartiteGraph(n_right_, n_left_, std::move(e));
  }

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
    return a.n_left_ == b.n_left_ && a.n_right_ == b.n_right_ && a.edges_ == b.edges_;
  }

private:
  int n_left_ = 0;
  int n_right_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> left_adj_;
  std::vector<std::vector<int>> right_adj_;
};

// Two edges whose four endpoints induce exactly 2K2.
struct IndependentEdgePair {
  Edge e1;
  Edge e2;
  friend bool operator==(const IndependentEdgePair&, const IndependentEdgePair&) = default;
};

// ---------------------------------------------------------------------------
// Constructors

/// The extremal graph H_2n on U = {u_1..u_n}, V = {v_1..v_n} (0-based here).
///
/// Neighbourhoods, 1-based:
///   u_1, u_2        -> v_1 v_2 v_3
///   u_3             -> v_1 v_2 v_4
///   u_i, 4<=i<=n-3  -> v_{i-1} v_i v_{i+1}
///   u_{n-2}         -> v_{n-3} v_{n-1} v_n
///   u_{n-1}, u_n    -> v_{n-2} v_{n-1} v_n
inline BipartiteGraph build_h2n(int n) {
  if (n < 6) throw std::invalid_argument("build_h2n: requires n >= 6");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(3 * n));
  auto link = [&](int i, std::initializer_list<int> js) {
    for (int j : js) edges.emplace_back(i - 1, j - 1);
  };
  for (int i = 1; i <= n; ++i) {
    if (i <= 2)
      link(i, {1, 2, 3});
    else if (i == 3)
      link(i, {1, 2, 4});
    else if (i <= n - 3)
      link(i, {i - 1, i, i + 1});
    else if (i == n - 2)
      link(i, {n - 3, n - 1, n});
    else
      link(i, {n - 2, n - 1, n});
  }
  return BipartiteGraph(n, n, std::move(edges));
}

inline Graph path_graph(int n) {
  if (n < 2) throw std::invalid_argument("path_graph: requires n >= 2");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: requires n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges));
}

inline BipartiteGraph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, v);
  return BipartiteGraph(a, b, std::move(edges));
}

/// Even cycle C_2m with U = even positions, V = odd positions:
/// position 2i is u_i, position 2i+1 is v_i.
inline BipartiteGraph bipartite_cycle(int m) {
  if (m < 2) throw std::invalid_argument("bipartite_cycle: requires m >= 2");
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    edges.emplace_back(i, i);
    edges.emplace_back((i + 1) % m, i);
  }
  return BipartiteGraph(m, m, std::move(edges));
}

/// Splits a bipartite Graph into parts by BFS 2-colouring. Within each part
/// the original vertex order is kept; the smallest vertex of each component
/// goes to U.
inline BipartiteGraph to_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          q.push(w);
        } else if (side[w] == side[v]) {
          throw std::invalid_argument("to_bipartite: graph is not bipartite");
        }
      }
    }
  }
  std::vector<int> index(static_cast<std::size_t>(n));
  int nl = 0, nr = 0;
  for (int v = 0; v < n; ++v) index[v] = side[v] == 0 ? nl++ : nr++;
  std::vector<Edge> edges;
  for (const auto& [a, b] : g.edges()) {
    if (side[a] == 0)
      edges.emplace_back(index[a], index[b]);
    else
      edges.emplace_back(index[b], index[a]);
  }
  return BipartiteGraph(nl, nr, std::move(edges));
}

// ---------------------------------------------------------------------------
// Structure queries

/// Number of connected components of the subgraph induced by `keep`
/// (all vertices when `keep` is empty).
inline int component_count(const Graph& g, const std::vector<bool>& keep = {}) {
  const int n = g.order();
  auto kept = [&](int v) { return keep.empty() || keep[v]; };
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  int components = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (!kept(s) || seen[s]) continue;
    ++components;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v))
        if (kept(w) && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
  }
  return components;
}

inline bool is_connected(const Graph& g) { return component_count(g) <= 1; }
inline bool is_connected(const BipartiteGraph& g) { return is_connected(g.to_graph()); }

/// True when the subgraph induced by `keep` is connected. An empty vertex
/// set counts as connected.
inline bool induces_connected(const Graph& g, const std::vector<bool>& keep) {
  return component_count(g, keep) <= 1;
}

inline Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b)
      if (!g.has_edge(a, b)) edges.emplace_back(a, b);
  return Graph(g.order(), std::move(edges));
}

inline Graph remove_edges(const Graph& g, const std::vector<Edge>& drop) {
  std::vector<Edge> keep;
  for (const auto& e : g.edges()) {
    const bool dropped = std::any_of(drop.begin(), drop.end(), [&](const Edge& d) {
      return (d.first == e.first && d.second == e.second) ||
             (d.first == e.second && d.second == e.first);
    });
    if (!dropped) keep.push_back(e);
  }
  return Graph(g.order(), std::move(keep));
}

/// Bridges by DFS low-link. Returned edges are (a, b) with a < b, sorted.
inline std::vector<Edge> cut_edges(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<Edge> bridges;
  int timer = 0;
  struct Frame {
    int v, parent, next;
  };
  for (int s = 0; s < n; ++s) {
    if (disc[s] != -1) continue;
    std::vector<Frame> stack{{s, -1, 0}};
    disc[s] = low[s] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nb = g.neighbors(f.v);
      if (f.next < static_cast<int>(nb.size())) {
        const int w = nb[f.next++];
        if (w == f.parent) continue;  // simple graph: one parent edge
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        const int v = f.v, p = f.parent;
        stack.pop_back();
        if (p >= 0) {
          low[p] = std::min(low[p], low[v]);
          if (low[v] > disc[p]) bridges.emplace_back(std::min(p, v), std::max(p, v));
        }
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

inline bool has_cut_edge(const Graph& g) { return !cut_edges(g).empty(); }

/// All independent edge pairs, ordered lexicographically by the positions of
/// the two edges in the sorted edge list.
inline std::vector<IndependentEdgePair> independent_edge_pairs(const BipartiteGraph& g) {
  std::vector<IndependentEdgePair> out;
  const auto& e = g.edges();
  for (std::size_t i = 0; i < e.size(); ++i) {
    const auto [u1, v1] = e[i];
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      const auto [u2, v2] = e[j];
      if (u1 == u2 || v1 == v2) continue;
      // Same-part pairs are never adjacent; only the two cross pairs matter.
      if (g.has_edge(u1, v2) || g.has_edge(u2, v1)) continue;
      out.push_back({e[i], e[j]});
    }
  }
  return out;
}

}  // namespace spectral_lab
