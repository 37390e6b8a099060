#pragma once

// Connectivity-decreasing 2-edge swaps and a greedy descent built on them.
//
// For independent edges u1v1, u2v2 (u1, u2 in the same part) with
// d(v1) = d(v2), the swap
//     G' = G - {u1v1, u2v2} + {u1v2, u2v1}
// satisfies a(G') < a(G) whenever G' is connected and a Fiedler vector x of
// G has x(u1) > x(u2) and x(v1) <= x(v2).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "spectral_lab/graph.hpp"
#include "spectral_lab/graph6.hpp"
#include "spectral_lab/spectral.hpp"

namespace spectral_lab {

/// An independent pair with swap roles assigned. Vertex ids are
/// global (U-vertex i is i, V-vertex j is n_left + j). When `roles_in_v` is
/// set, u1 and u2 are V-vertices and v1, v2 are U-vertices; the swapped
/// graph is the same either way.
struct SwapCandidate {
  IndependentEdgePair pair;
  int u1 = 0, v1 = 0, u2 = 0, v2 = 0;
  bool roles_in_v = false;
  double fiedler_u_gap = 0.0;  // x(u1) - x(u2)
  double fiedler_v_gap = 0.0;  // x(v1) - x(v2)
  bool degree_ok = false;
  bool result_connected = false;

  /// First-order change of x^t L x under the swap: 2 (x(u1)-x(u2)) (x(v1)-x(v2)).
  double predicted_change() const { return 2.0 * fiedler_u_gap * fiedler_v_gap; }

  bool qualifies(double strict_tol = 1e-9) const {
    return fiedler_u_gap > strict_tol && fiedler_v_gap <= strict_tol && degree_ok && result_connected;
  }

  std::string describe() const {
    std::ostringstream os;
    os << "del {" << pair.e1.first << "-" << pair.e1.second << ", " << pair.e2.first << "-" << pair.e2.second
       << "} add {" << pair.e1.first << "-" << pair.e2.second << ", " << pair.e2.first << "-" << pair.e1.second << "}";
    return os.str();
  }
};

inline BipartiteGraph swap_edges(const BipartiteGraph& g, const IndependentEdgePair& pair) {
  const auto [a, b] = pair.e1;
  const auto [c, d] = pair.e2;
  if (!g.has_edge(a, b) || !g.has_edge(c, d)) throw std::invalid_argument("swap_edges: edge not in graph");
  if (a == c || b == d) throw std::invalid_argument("swap_edges: edges share an endpoint");
  if (g.has_edge(a, d) || g.has_edge(c, b)) throw std::invalid_argument("swap_edges: edges are not independent");
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const auto& e : g.edges())
    if (e != pair.e1 && e != pair.e2) edges.push_back(e);
  edges.emplace_back(a, d);
  edges.emplace_back(c, b);
  return BipartiteGraph(g.n_left(), g.n_right(), std::move(edges));
}

/// Every role assignment of every independent pair that satisfies the swap
/// hypotheses: x(u1) > x(u2) + strict_tol, x(v1) <= x(v2) (|diff| <= strict_tol
/// counts as equal), d(v1) = d(v2) and a connected result. Order: pairs as
/// returned by independent_edge_pairs, then role assignment.
inline std::vector<SwapCandidate> find_qualifying_swaps(const BipartiteGraph& g, std::span<const double> x,
                                                        double strict_tol = 1e-9) {
  if (static_cast<int>(x.size()) != g.order()) throw std::invalid_argument("find_qualifying_swaps: vector size");
  const Graph gg = g.to_graph();
  std::vector<SwapCandidate> out;
  for (const auto& pair : independent_edge_pairs(g)) {
    const int a = pair.e1.first, b = g.global_right(pair.e1.second);
    const int c = pair.e2.first, d = g.global_right(pair.e2.second);
    // (u1, v1, u2, v2, roles_in_v)
    const int roles[4][4] = {{a, b, c, d}, {c, d, a, b}, {b, a, d, c}, {d, c, b, a}};
    bool connectivity_known = false, connected = false;
    for (int r = 0; r < 4; ++r) {
      SwapCandidate s;
      s.pair = pair;
      s.u1 = roles[r][0];
      s.v1 = roles[r][1];
      s.u2 = roles[r][2];
      s.v2 = roles[r][3];
      s.roles_in_v = r >= 2;
      s.fiedler_u_gap = x[s.u1] - x[s.u2];
      s.fiedler_v_gap = x[s.v1] - x[s.v2];
      s.degree_ok = gg.degree(s.v1) == gg.degree(s.v2);
      if (!(s.fiedler_u_gap > strict_tol && s.fiedler_v_gap <= strict_tol && s.degree_ok)) continue;
      if (!connectivity_known) {
        connected = is_connected(swap_edges(g, pair));
        connectivity_known = true;
      }
      s.result_connected = connected;
      if (s.qualifies(strict_tol)) out.push_back(s);
    }
  }
  return out;
}

struct EqualityCertificate {
  std::vector<double> z;
  double quotient = 0.0;  // z^t L(G') z / z^t z
  double norm_squared = 0.0;
};

/// The perturbed vector for the equality case x(v1) = x(v2):
///   z(v1) = x(v1) + (x(u2) - x(u1)) / (k - a)
///   z(v2) = x(v1) + (x(u1) - x(u2)) / (k - a)
/// with every other entry copied from x. Its Rayleigh quotient on L(G')
/// is strictly below a(G).
inline EqualityCertificate equality_case_certificate(const BipartiteGraph& g, const SwapCandidate& s,
                                                     std::span<const double> x, double a, int k,
                                                     double tol = 1e-9) {
  if (static_cast<int>(x.size()) != g.order()) throw std::invalid_argument("equality_case_certificate: vector size");
  if (!(a < k)) throw std::invalid_argument("equality_case_certificate: requires a(G) < k");
  if (std::abs(x[s.v1] - x[s.v2]) > tol) throw std::invalid_argument("equality_case_certificate: x(v1) != x(v2)");
  if (!(x[s.u1] > x[s.u2])) throw std::invalid_argument("equality_case_certificate: requires x(u1) > x(u2)");

  EqualityCertificate c;
  c.z.assign(x.begin(), x.end());
  const double shift = (x[s.u2] - x[s.u1]) / (k - a);
  c.z[s.v1] = x[s.v1] + shift;
  c.z[s.v2] = x[s.v1] - shift;
  const double sum = std::accumulate(c.z.begin(), c.z.end(), 0.0);
  if (std::abs(sum) > tol) throw std::runtime_error("equality_case_certificate: z is not orthogonal to 1");
  c.norm_squared = std::inner_product(c.z.begin(), c.z.end(), c.z.begin(), 0.0);
  c.quotient = rayleigh_quotient(laplacian(swap_edges(g, s.pair)), c.z);
  return c;
}

// ---------------------------------------------------------------------------
// Descent

enum class TerminalReason { no_qualifying_swap, max_iterations, numerical_tie };

inline const char* to_string(TerminalReason r) {
  switch (r) {
    case TerminalReason::no_qualifying_swap: return "no_qualifying_swap";
    case TerminalReason::max_iterations: return "max_iterations";
    case TerminalReason::numerical_tie: return "numerical_tie";
  }
  return "unknown";
}

struct DescentStep {
  BipartiteGraph graph;
  std::string graph6;
  double a_value = 0.0;
  std::string swap;  // swap that produced this graph; empty for the start
};

struct DescentTrace {
  std::vector<DescentStep> steps;
  TerminalReason terminal_reason = TerminalReason::no_qualifying_swap;

  double final_value() const { return steps.back().a_value; }
};

struct DescentOptions {
  int max_iter = 1000;
  double strict_tol = 1e-9;  // strictness margin for x(u1) > x(u2)
  double tie_tol = 1e-12;    // required decrease per step, relative to max(1, a)
};

/// Applies the candidate with the most negative predicted change (earliest
/// candidate on ties) until no candidate qualifies.
inline DescentTrace descend(const BipartiteGraph& start, DescentOptions opts = {}) {
  DescentTrace trace;
  BipartiteGraph g = start;
  SpectralResult spec = algebraic_connectivity(g);
  trace.steps.push_back({g, encode_graph6(g), spec.value, {}});
  for (int it = 0;; ++it) {
    if (it == opts.max_iter) {
      trace.terminal_reason = TerminalReason::max_iterations;
      return trace;
    }
    const auto candidates = find_qualifying_swaps(g, spec.vector, opts.strict_tol);
    if (candidates.empty()) {
      trace.terminal_reason = TerminalReason::no_qualifying_swap;
      return trace;
    }
    const SwapCandidate* best = &candidates.front();
    for (const auto& c : candidates)
      if (c.predicted_change() < best->predicted_change() - 1e-12) best = &c;

    BipartiteGraph next = swap_edges(g, best->pair);
    SpectralResult next_spec = algebraic_connectivity(next);
    if (!(next_spec.value < spec.value - opts.tie_tol * std::max(1.0, spec.value))) {
      trace.terminal_reason = TerminalReason::numerical_tie;
      return trace;
    }
    g = std::move(next);
    spec = std::move(next_spec);
    trace.steps.push_back({g, encode_graph6(g), spec.value, best->describe()});
  }
}

inline std::string to_jsonl(const DescentTrace& trace, std::uint64_t seed) {
  std::string out;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    nlohmann::json line = {{"seed", seed}, {"step", i}, {"graph6", s.graph6}, {"a", s.a_value}};
    line["swap"] = s.swap.empty() ? nlohmann::json(nullptr) : nlohmann::json(s.swap);
    if (i + 1 == trace.steps.size()) line["terminal_reason"] = to_string(trace.terminal_reason);
    out += line.dump();
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random starts

/// Connected k-regular bipartite graph on n + n vertices: the union of k
/// uniformly random perfect matchings, rejecting multi-edges and
/// disconnected results.
template <class Rng>
BipartiteGraph random_regular_bipartite(int n, int k, Rng& rng, int max_attempts = 100000) {
  if (k < 1 || k > n) throw std::invalid_argument("random_regular_bipartite: need 1 <= k <= n");
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Edge> edges;
    for (int m = 0; m < k; ++m) {
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      for (int u = 0; u < n; ++u) edges.emplace_back(u, perm[u]);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    BipartiteGraph g(n, n, std::move(edges));
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("random_regular_bipartite: attempt budget exhausted");
}

template <class Rng>
BipartiteGraph random_cubic_bipartite(int n, Rng& rng) {
  return random_regular_bipartite(n, 3, rng);
}

}  // namespace spectral_lab
