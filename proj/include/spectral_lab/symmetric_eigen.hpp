#pragma once

// Dense symmetric eigensolver: cyclic Jacobi rotations.
//
// Converged when the off-diagonal Frobenius norm drops to
// 1e-12 * ||M||_F; at most 50 sweeps, otherwise EigenError.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace spectral_lab {

class EigenError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Dense real symmetric matrix, full row-major storage. Every write goes to
/// both triangles, so symmetry holds exactly.
class SymmetricMatrix {
public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(int order)
      : n_(order), a_(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), 0.0) {
    if (order < 0) throw std::invalid_argument("SymmetricMatrix: negative order");
  }

  /// Row-major input; rejected unless exactly symmetric.
  SymmetricMatrix(int order, std::vector<double> entries) : n_(order), a_(std::move(entries)) {
    if (order < 0 || a_.size() != static_cast<std::size_t>(order) * static_cast<std::size_t>(order))
      throw std::invalid_argument("SymmetricMatrix: entry count does not match order");
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) throw std::invalid_argument("SymmetricMatrix: input not symmetric");
  }

  int order() const { return n_; }
  double operator()(int i, int j) const { return a_[index(i, j)]; }

  void set(int i, int j, double value) {
    a_[index(i, j)] = value;
    a_[index(j, i)] = value;
  }
  void add(int i, int j, double value) {
    a_[index(i, j)] += value;
    if (i != j) a_[index(j, i)] += value;
  }

  std::span<const double> row(int i) const {
    return {a_.data() + static_cast<std::size_t>(i) * n_, static_cast<std::size_t>(n_)};
  }

  double max_abs() const {
    double m = 0.0;
    for (double x : a_) m = std::max(m, std::abs(x));
    return m;
  }

  double frobenius() const {
    double s = 0.0;
    for (double x : a_) s += x * x;
    return std::sqrt(s);
  }

  std::vector<double> multiply(std::span<const double> x) const {
    std::vector<double> y(static_cast<std::size_t>(n_), 0.0);
    for (int i = 0; i < n_; ++i) {
      auto r = row(i);
      y[i] = std::inner_product(r.begin(), r.end(), x.begin(), 0.0);
    }
    return y;
  }

  const std::vector<double>& data() const { return a_; }

private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }

  int n_ = 0;
  std::vector<double> a_;
};

struct EigenDecomposition {
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // row k is the unit eigenvector for values[k]
  int order = 0;
  int sweeps = 0;

  std::span<const double> vector(int k) const {
    return {vectors.data() + static_cast<std::size_t>(k) * order, static_cast<std::size_t>(order)};
  }
};

struct JacobiOptions {
  double tolerance = 1e-12;
  int max_sweeps = 50;
};

inline EigenDecomposition symmetric_eigen(const SymmetricMatrix& m, JacobiOptions opts = {}) {
  const int n = m.order();
  const auto N = static_cast<std::size_t>(n);
  std::vector<double> a = m.data();
  std::vector<double> v(N * N, 0.0);  // row k: k-th eigenvector
  for (std::size_t i = 0; i < N; ++i) v[i * N + i] = 1.0;

  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * N + j]; };
  const double norm = m.frobenius();

  auto off_norm = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += at(i, j) * at(i, j);
    return std::sqrt(2.0 * s);
  };

  EigenDecomposition out;
  out.order = n;
  int sweep = 0;
  for (;; ++sweep) {
    const double off = off_norm();
    if (off <= opts.tolerance * norm) break;
    if (sweep == opts.max_sweeps)
      throw EigenError("symmetric_eigen: no convergence after " + std::to_string(opts.max_sweeps) +
                       " sweeps (off-diagonal norm " + std::to_string(off) + ")");
    // Early sweeps skip rotations far below the average off-diagonal size.
    const double threshold = sweep < 3 ? 0.2 * off / (static_cast<double>(n) * n) : 0.0;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double app = at(p, p), aqq = at(q, q);
        if (sweep > 3 && std::abs(apq) * 1e17 < std::abs(app) && std::abs(apq) * 1e17 < std::abs(aqq)) {
          at(p, q) = at(q, p) = 0.0;
          continue;
        }
        if (std::abs(apq) <= threshold) continue;

        const double theta = (aqq - app) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150)
          t = 0.5 / theta;
        else
          t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        double* rp = &a[static_cast<std::size_t>(p) * N];
        double* rq = &a[static_cast<std::size_t>(q) * N];
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double x = rp[k], y = rq[k];
          rp[k] = c * x - s * y;
          rq[k] = s * x + c * y;
        }
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          a[static_cast<std::size_t>(k) * N + p] = rp[k];
          a[static_cast<std::size_t>(k) * N + q] = rq[k];
        }
        rp[p] = app - t * apq;
        rq[q] = aqq + t * apq;
        rp[q] = rq[p] = 0.0;

        double* vp = &v[static_cast<std::size_t>(p) * N];
        double* vq = &v[static_cast<std::size_t>(q) * N];
        for (std::size_t k = 0; k < N; ++k) {
          const double x = vp[k], y = vq[k];
          vp[k] = c * x - s * y;
          vq[k] = s * x + c * y;
        }
      }
    }
  }
  out.sweeps = sweep;

  std::vector<int> idx(N);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) { return at(i, i) < at(j, j); });
  out.values.resize(N);
  out.vectors.resize(N * N);
  for (std::size_t k = 0; k < N; ++k) {
    out.values[k] = at(idx[k], idx[k]);
    std::copy_n(v.begin() + static_cast<std::ptrdiff_t>(idx[k] * N), N,
                out.vectors.begin() + static_cast<std::ptrdiff_t>(k * N));
  }
  return out;
}

/// max_k ||M v_k - lambda_k v_k||_inf over all eigenpairs.
inline double max_residual(const SymmetricMatrix& m, const EigenDecomposition& d) {
  double worst = 0.0;
  for (int k = 0; k < d.order; ++k) {
    auto vk = d.vector(k);
    auto mv = m.multiply(vk);
    for (int i = 0; i < d.order; ++i) worst = std::max(worst, std::abs(mv[i] - d.values[k] * vk[i]));
  }
  return worst;
}

}  // namespace spectral_lab
