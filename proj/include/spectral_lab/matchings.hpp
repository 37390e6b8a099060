#pragma once

// Perfect-matching counts of bipartite graphs.
//
// count_perfect_matchings evaluates the permanent of the biadjacency matrix
// with Ryser's formula in Gray-code order:
//   per(A) = (-1)^n sum_{S subset cols} (-1)^{|S|} prod_i sum_{j in S} a_ij
// Arithmetic is exact in __int128 with overflow checks on every step.

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "spectral_lab/graph.hpp"

namespace spectral_lab {

using Count = __int128;

inline std::string to_string(Count value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  std::string digits;
  // Negate digit by digit so INT128_MIN does not overflow.
  while (value != 0) {
    const int d = static_cast<int>(value % 10);
    digits.push_back(static_cast<char>('0' + (d < 0 ? -d : d)));
    value /= 10;
  }
  if (negative) digits.push_back('-');
  return {digits.rbegin(), digits.rend()};
}

/// Square 0/1 matrix, one bitmask per row (bit j set iff u_i ~ v_j).
class Biadjacency {
public:
  static constexpr int max_order = 30;

  explicit Biadjacency(int order, std::vector<std::uint32_t> rows = {}) : n_(order), rows_(std::move(rows)) {
    if (order < 0 || order > max_order) throw std::invalid_argument("Biadjacency: order must be in [0, 30]");
    if (rows_.empty()) rows_.assign(static_cast<std::size_t>(order), 0);
    if (static_cast<int>(rows_.size()) != order) throw std::invalid_argument("Biadjacency: row count mismatch");
    const std::uint32_t mask = (1u << order) - 1u;
    for (auto r : rows_)
      if (r & ~mask) throw std::invalid_argument("Biadjacency: column index out of range");
  }

  explicit Biadjacency(const BipartiteGraph& g) : Biadjacency(check_square(g)) {
    for (const auto& [u, v] : g.edges()) rows_[u] |= 1u << v;
  }

  int order() const { return n_; }
  const std::vector<std::uint32_t>& rows() const { return rows_; }
  bool at(int i, int j) const { return (rows_[i] >> j) & 1u; }

  Biadjacency permuted(const std::vector<int>& row_perm, const std::vector<int>& col_perm) const {
    std::vector<std::uint32_t> out(rows_.size(), 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (at(i, j)) out[row_perm[i]] |= 1u << col_perm[j];
    return Biadjacency(n_, std::move(out));
  }

private:
  static int check_square(const BipartiteGraph& g) {
    if (g.n_left() != g.n_right()) throw std::invalid_argument("Biadjacency: parts differ in size");
    return g.n_left();
  }

  int n_;
  std::vector<std::uint32_t> rows_;
};

inline Count count_perfect_matchings(const Biadjacency& b) {
  const int n = b.order();
  if (n == 0) return 1;
  std::array<std::int32_t, Biadjacency::max_order> row_sum{};
  Count total = 0;
  std::uint32_t gray = 0;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const int j = std::countr_zero(k);
    gray ^= 1u << j;
    const int delta = (gray >> j) & 1u ? 1 : -1;
    bool zero = false;
    for (int i = 0; i < n; ++i) {
      if (b.at(i, j)) row_sum[i] += delta;
      zero = zero || row_sum[i] == 0;
    }
    if (zero) continue;
    Count prod = 1;
    for (int i = 0; i < n; ++i)
      if (__builtin_mul_overflow(prod, static_cast<Count>(row_sum[i]), &prod))
        throw std::overflow_error("count_perfect_matchings: product overflow");
    const bool odd = std::popcount(gray) & 1;
    if (odd ? __builtin_sub_overflow(total, prod, &total) : __builtin_add_overflow(total, prod, &total))
      throw std::overflow_error("count_perfect_matchings: sum overflow");
  }
  return n % 2 ? -total : total;
}

inline Count count_perfect_matchings(const BipartiteGraph& g) { return count_perfect_matchings(Biadjacency(g)); }

/// Oracle: extends matchings over U in index order. n_left <= 10.
inline Count count_perfect_matchings_bruteforce(const BipartiteGraph& g) {
  if (g.n_left() > 10 || g.n_right() > 10) throw std::invalid_argument("bruteforce matching count: parts larger than 10");
  if (g.n_left() != g.n_right()) return 0;
  const int n = g.n_left();
  Count count = 0;
  auto extend = [&](auto&& self, int u, std::uint32_t used) -> void {
    if (u == n) {
      ++count;
      return;
    }
    for (int v : g.left_neighbors(u))
      if (!((used >> v) & 1u)) self(self, u + 1, used | (1u << v));
  };
  extend(extend, 0, 0);
  return count;
}

// ---------------------------------------------------------------------------
// Matching profile of H_2n

struct MatchingProfileRow {
  int n;
  Count pm_count;
};

struct Recurrence {
  bool found = false;
  std::vector<long long> coefficients;  // a(n) = sum_k c_k a(n-k), k = 1..order
  std::string description;
};

/// Smallest-order homogeneous linear recurrence with integer coefficients,
/// order <= max_order, that reproduces every term exactly. At least two
/// terms beyond those used to solve for the coefficients must confirm it.
inline Recurrence discover_recurrence(const std::vector<Count>& seq, int max_order = 3) {
  Recurrence rec;
  for (int order = 1; order <= max_order; ++order) {
    const int n_terms = static_cast<int>(seq.size());
    if (n_terms < 2 * order + 2) break;
    // Solve the order x order system from the first equations.
    std::vector<std::vector<long double>> m(static_cast<std::size_t>(order),
                                            std::vector<long double>(static_cast<std::size_t>(order + 1)));
    for (int r = 0; r < order; ++r) {
      for (int c = 0; c < order; ++c) m[r][c] = static_cast<long double>(seq[order + r - 1 - c]);
      m[r][order] = static_cast<long double>(seq[order + r]);
    }
    bool singular = false;
    for (int c = 0; c < order && !singular; ++c) {
      int pivot = c;
      for (int r = c + 1; r < order; ++r)
        if (std::fabs(m[r][c]) > std::fabs(m[pivot][c])) pivot = r;
      if (std::fabs(m[pivot][c]) < 1e-12L) {
        singular = true;
        break;
      }
      std::swap(m[c], m[pivot]);
      for (int r = 0; r < order; ++r) {
        if (r == c) continue;
        const long double f = m[r][c] / m[c][c];
        for (int k = c; k <= order; ++k) m[r][k] -= f * m[c][k];
      }
    }
    if (singular) continue;
    std::vector<long long> coef(static_cast<std::size_t>(order));
    bool integral = true;
    for (int c = 0; c < order; ++c) {
      const long double x = m[c][order] / m[c][c];
      coef[c] = std::llround(x);
      integral = integral && std::fabs(x - static_cast<long double>(coef[c])) < 1e-6L;
    }
    if (!integral) continue;
    bool ok = true;
    for (int t = order; t < n_terms && ok; ++t) {
      Count predicted = 0;
      for (int k = 0; k < order; ++k) predicted += static_cast<Count>(coef[k]) * seq[t - 1 - k];
      ok = predicted == seq[t];
    }
    if (!ok) continue;
    rec.found = true;
    rec.coefficients = coef;
    std::ostringstream os;
    os << "a(n) =";
    bool first = true;
    for (int k = 0; k < order; ++k) {
      const long long c = coef[k];
      if (c == 0) continue;
      os << (first ? (c < 0 ? " -" : " ") : (c < 0 ? " - " : " + "));
      if (std::llabs(c) != 1) os << std::llabs(c) << "*";
      os << "a(n-" << (k + 1) << ")";
      first = false;
    }
    if (first) os << " 0";
    rec.description = os.str();
    return rec;
  }
  rec.description = "no integer recurrence of order <= " + std::to_string(max_order);
  return rec;
}

struct MatchingProfile {
  std::vector<MatchingProfileRow> rows;
  Recurrence recurrence;
};

inline MatchingProfile h2n_matching_profile(int n_max) {
  if (n_max < 6 || n_max > 20) throw std::invalid_argument("h2n_matching_profile: n_max must be in [6, 20]");
  MatchingProfile p;
  std::vector<Count> seq;
  for (int n = 6; n <= n_max; ++n) {
    const Count c = count_perfect_matchings(build_h2n(n));
    p.rows.push_back({n, c});
    seq.push_back(c);
  }
  p.recurrence = discover_recurrence(seq);
  return p;
}

}  // namespace spectral_lab
