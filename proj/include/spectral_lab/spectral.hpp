#pragma once

// Laplacian spectra, algebraic connectivity and Fiedler vectors.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "spectral_lab/graph.hpp"
#include "spectral_lab/symmetric_eigen.hpp"

namespace spectral_lab {

class SpectralError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct SpectralTolerances {
  double multiplicity_relative = 1e-6;  // eigenvalue equality for multiplicity counting
  double residual_per_order = 1e-8;     // ||Lx - ax||_inf <= this * order
};

struct SpectralResult {
  double value = 0.0;          // a(G)
  std::vector<double> vector;  // unit Fiedler vector, orthogonal to 1
  int multiplicity = 0;        // eigenvalues within tolerance of value
  double residual = 0.0;       // ||L x - a x||_inf
};

inline SymmetricMatrix laplacian(const Graph& g) {
  SymmetricMatrix l(g.order());
  for (int v = 0; v < g.order(); ++v) l.set(v, v, g.degree(v));
  for (const auto& [a, b] : g.edges()) l.set(a, b, -1.0);
  return l;
}

inline SymmetricMatrix laplacian(const BipartiteGraph& g) { return laplacian(g.to_graph()); }

inline SymmetricMatrix adjacency_matrix(const Graph& g) {
  SymmetricMatrix m(g.order());
  for (const auto& [a, b] : g.edges()) m.set(a, b, 1.0);
  return m;
}

/// x^t L x computed edge by edge as a sum of squared differences.
inline double laplacian_quadratic_form(const Graph& g, std::span<const double> x) {
  double s = 0.0;
  for (const auto& [a, b] : g.edges()) s += (x[a] - x[b]) * (x[a] - x[b]);
  return s;
}

inline double rayleigh_quotient(const SymmetricMatrix& l, std::span<const double> z) {
  if (static_cast<int>(z.size()) != l.order()) throw std::invalid_argument("rayleigh_quotient: size mismatch");
  const double zz = std::inner_product(z.begin(), z.end(), z.begin(), 0.0);
  if (zz == 0.0) throw std::invalid_argument("rayleigh_quotient: zero vector");
  const auto lz = l.multiply(z);
  return std::inner_product(z.begin(), z.end(), lz.begin(), 0.0) / zz;
}

/// Flips the sign so that the first entry of largest magnitude is positive.
/// Magnitudes within 1e-9 (relative) of the maximum count as ties.
inline void sign_normalize(std::vector<double>& x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  if (m == 0.0) return;
  for (double v : x) {
    if (std::abs(v) >= m * (1.0 - 1e-9)) {
      if (v < 0)
        for (double& w : x) w = -w;
      return;
    }
  }
}

/// a(G) together with an orthonormal basis of its eigenspace, each basis
/// vector orthogonal to the all-ones vector.
struct FiedlerSpace {
  double value = 0.0;
  std::vector<std::vector<double>> basis;
  int multiplicity = 0;
};

namespace detail {

inline double norm2(std::span<const double> x) {
  return std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
}

inline void remove_mean(std::vector<double>& x) {
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
  for (double& v : x) v -= mean;
}

}  // namespace detail

inline FiedlerSpace fiedler_space(const Graph& g, SpectralTolerances tol = {}) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("algebraic connectivity needs at least two vertices");
  const auto l = laplacian(g);
  const auto eig = symmetric_eigen(l);

  FiedlerSpace out;
  out.value = eig.values[1];
  const double band = tol.multiplicity_relative * std::abs(out.value) + 1e-12 * std::max(1.0, l.max_abs());
  std::vector<int> cluster;
  for (int k = 0; k < n; ++k)
    if (std::abs(eig.values[k] - out.value) <= band) cluster.push_back(k);
  out.multiplicity = static_cast<int>(cluster.size());

  // Project each cluster vector off 1, then Gram-Schmidt; the cluster may
  // contain the constant vector when G is disconnected.
  for (int k : cluster) {
    auto vk = eig.vector(k);
    std::vector<double> x(vk.begin(), vk.end());
    detail::remove_mean(x);
    for (const auto& b : out.basis) {
      const double d = std::inner_product(x.begin(), x.end(), b.begin(), 0.0);
      for (int i = 0; i < n; ++i) x[i] -= d * b[i];
    }
    const double nx = detail::norm2(x);
    if (nx < 1e-6) continue;
    for (double& v : x) v /= nx;
    out.basis.push_back(std::move(x));
  }
  if (out.basis.empty()) throw SpectralError("fiedler_space: eigenspace has no component orthogonal to 1");
  return out;
}

inline double fiedler_residual(const Graph& g, double value, std::span<const double> x) {
  const auto lx = laplacian(g).multiply(x);
  double r = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) r = std::max(r, std::abs(lx[i] - value * x[i]));
  return r;
}

inline SpectralResult algebraic_connectivity(const Graph& g, SpectralTolerances tol = {}) {
  auto space = fiedler_space(g, tol);
  SpectralResult r;
  r.value = space.value;
  r.multiplicity = space.multiplicity;
  r.vector = std::move(space.basis.front());
  sign_normalize(r.vector);
  r.residual = fiedler_residual(g, r.value, r.vector);
  if (r.residual > tol.residual_per_order * g.order())
    throw SpectralError("algebraic_connectivity: Fiedler residual check failed");
  return r;
}

inline SpectralResult algebraic_connectivity(const BipartiteGraph& g, SpectralTolerances tol = {}) {
  return algebraic_connectivity(g.to_graph(), tol);
}

/// Largest Laplacian eigenvalue.
inline double laplacian_spectral_radius(const Graph& g) {
  if (g.order() == 0) return 0.0;
  return symmetric_eigen(laplacian(g)).values.back();
}

/// Difference of the two largest adjacency eigenvalues of a regular graph.
inline double spectral_gap(const Graph& g) {
  if (g.order() < 2) throw std::invalid_argument("spectral_gap: needs at least two vertices");
  if (g.regular_degree() < 0) throw std::invalid_argument("spectral_gap: graph is not regular");
  const auto eig = symmetric_eigen(adjacency_matrix(g));
  const auto n = eig.values.size();
  return eig.values[n - 1] - eig.values[n - 2];
}

inline double spectral_gap(const BipartiteGraph& g) { return spectral_gap(g.to_graph()); }

/// 2 - 2cos(pi/n), the algebraic connectivity of the path on n vertices.
inline double path_fiedler_closed_form(int n) {
  if (n < 2) throw std::invalid_argument("path_fiedler_closed_form: requires n >= 2");
  return 2.0 - 2.0 * std::cos(std::numbers::pi / n);
}

/// A unit Fiedler vector z of H_2n with z(u_i) = z(v_i) for every i.
///
/// Starting from a Fiedler vector x, y swaps the entries of u_i and v_i and
/// z = x + y. When a(H_2n) is not simple, the eigenspace vector with the
/// largest symmetric part is used.
inline std::vector<double> symmetric_fiedler_h2n(const BipartiteGraph& h, SpectralTolerances tol = {}) {
  const int n = h.n_left();
  if (n < 6 || h.n_right() != n || !(h == build_h2n(n)))
    throw std::invalid_argument("symmetric_fiedler_h2n: input is not build_h2n(n)");
  const Graph g = h.to_graph();
  const auto space = fiedler_space(g, tol);

  std::vector<double> best;
  double best_norm = -1.0;
  for (const auto& x : space.basis) {
    std::vector<double> z(x.size());
    for (int i = 0; i < n; ++i) {
      z[i] = x[i] + x[n + i];
      z[n + i] = x[n + i] + x[i];
    }
    const double nz = detail::norm2(z);
    if (nz > best_norm) {
      best_norm = nz;
      best = std::move(z);
    }
  }
  if (best_norm < 1e-8) throw SpectralError("symmetric_fiedler_h2n: no part-symmetric Fiedler vector found");
  for (double& v : best) v /= best_norm;
  sign_normalize(best);
  if (fiedler_residual(g, space.value, best) > tol.residual_per_order)
    throw SpectralError("symmetric_fiedler_h2n: residual check failed");
  return best;
}

/// Checks that {v : x_v >= -r} and {v : x_v <= r} both induce connected
/// subgraphs.
inline bool fiedler_sublevels_connected(const Graph& g, std::span<const double> x, double r) {
  const int n = g.order();
  std::vector<bool> upper(static_cast<std::size_t>(n)), lower(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    upper[v] = x[v] >= -r;
    lower[v] = x[v] <= r;
  }
  return induces_connected(g, upper) && induces_connected(g, lower);
}

/// max_u |(k - a) x_u - sum_{w ~ u} x_w| for a k-regular graph.
inline double neighbourhood_sum_defect(const Graph& g, double a, std::span<const double> x) {
  const int k = g.regular_degree();
  if (k < 0) throw std::invalid_argument("neighbourhood_sum_defect: graph is not regular");
  double worst = 0.0;
  for (int u = 0; u < g.order(); ++u) {
    double s = 0.0;
    for (int w : g.neighbors(u)) s += x[w];
    worst = std::max(worst, std::abs((k - a) * x[u] - s));
  }
  return worst;
}

}  // namespace spectral_lab
