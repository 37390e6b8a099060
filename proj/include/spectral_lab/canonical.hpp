#pragma once

// Canonical forms of bipartite graphs up to relabelling within parts and,
// when |U| = |V|, exchange of the parts.
//
// The form is the lexicographically smallest packed biadjacency matrix over
// the leaves of an individualisation/refinement search tree. Refinement is
// colour refinement to an equitable ordered partition; every step is
// labelling-invariant, so the set of leaf matrices (and its minimum) is an
// isomorphism invariant. No automorphism pruning is done, which is fine for
// the small, sparse graphs this is used on.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "spectral_lab/graph.hpp"

namespace spectral_lab {

struct CanonicalForm {
  // [n_rows_hi, n_rows_lo, n_cols_hi, n_cols_lo, packed rows...]
  std::string bytes;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;

  std::string hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
      out.push_back(digits[c >> 4]);
      out.push_back(digits[c & 15]);
    }
    return out;
  }
};

namespace detail {

class CanonicalSearch {
public:
  // Rows are U-vertices of `g` and columns V-vertices.
  explicit CanonicalSearch(const BipartiteGraph& g)
      : rows_(g.n_left()), cols_(g.n_right()), adj_(static_cast<std::size_t>(g.order())) {
    for (const auto& [u, v] : g.edges()) {
      adj_[u].push_back(rows_ + v);
      adj_[rows_ + v].push_back(u);
    }
  }

  std::string run() {
    std::vector<int> colour(adj_.size());
    for (int v = 0; v < rows_ + cols_; ++v) colour[v] = v < rows_ ? 0 : 1;
    refine(colour);
    best_.clear();
    have_best_ = false;
    search(colour);
    return best_;
  }

private:
  // Colours are dense ranks 0..k-1; rows always precede columns.
  void refine(std::vector<int>& colour) const {
    const int n = static_cast<int>(adj_.size());
    int classes = count_classes(colour);
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    std::vector<int> order(static_cast<std::size_t>(n));
    while (true) {
      for (int v = 0; v < n; ++v) {
        auto& s = sig[v];
        s.clear();
        s.push_back(colour[v]);
        for (int w : adj_[v]) s.push_back(colour[w]);
        std::sort(s.begin() + 1, s.end());
      }
      for (int v = 0; v < n; ++v) order[v] = v;
      std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
      int rank = 0;
      for (int k = 0; k < n; ++k) {
        if (k > 0 && sig[order[k]] != sig[order[k - 1]]) ++rank;
        colour[order[k]] = rank;
      }
      const int next = n == 0 ? 0 : rank + 1;
      if (next == classes) return;
      classes = next;
    }
  }

  static int count_classes(const std::vector<int>& colour) {
    if (colour.empty()) return 0;
    return *std::max_element(colour.begin(), colour.end()) + 1;
  }

  void search(const std::vector<int>& colour) {
    const int n = static_cast<int>(adj_.size());
    std::vector<int> cell_size(static_cast<std::size_t>(n), 0);
    for (int c : colour) ++cell_size[c];
    int target = -1;
    for (int c = 0; c < n; ++c)
      if (cell_size[c] > 1) {
        target = c;
        break;
      }
    if (target < 0) {
      emit_leaf(colour);
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (colour[w] != target) continue;
      std::vector<int> child(colour.size());
      for (int v = 0; v < n; ++v) child[v] = 2 * colour[v] + (colour[v] == target && v != w ? 1 : 0);
      refine(child);
      search(child);
    }
  }

  void emit_leaf(const std::vector<int>& colour) {
    const int row_bytes = (cols_ + 7) / 8;
    std::string leaf;
    leaf.push_back(static_cast<char>(rows_ >> 8));
    leaf.push_back(static_cast<char>(rows_ & 255));
    leaf.push_back(static_cast<char>(cols_ >> 8));
    leaf.push_back(static_cast<char>(cols_ & 255));
    leaf.resize(4 + static_cast<std::size_t>(rows_) * row_bytes, '\0');
    for (int u = 0; u < rows_; ++u) {
      const int r = colour[u];
      for (int w : adj_[u]) {
        const int c = colour[w] - rows_;
        leaf[4 + static_cast<std::size_t>(r) * row_bytes + c / 8] |= static_cast<char>(0x80 >> (c % 8));
      }
    }
    if (!have_best_ || leaf < best_) {
      best_ = std::move(leaf);
      have_best_ = true;
    }
  }

  int rows_;
  int cols_;
  std::vector<std::vector<int>> adj_;
  std::string best_;
  bool have_best_ = false;
};

}  // namespace detail

inline CanonicalForm canonical_form(const BipartiteGraph& g) {
  std::string best = detail::CanonicalSearch(g).run();
  if (g.n_left() == g.n_right()) {
    std::string other = detail::CanonicalSearch(g.swapped_parts()).run();
    if (other < best) best = std::move(other);
  }
  return CanonicalForm{std::move(best)};
}

/// The graph whose biadjacency matrix is the one stored in the form.
inline BipartiteGraph graph_from_canonical(const CanonicalForm& form) {
  const auto& b = form.bytes;
  auto byte = [&](std::size_t i) { return static_cast<unsigned char>(b.at(i)); };
  const int rows = (byte(0) << 8) | byte(1);
  const int cols = (byte(2) << 8) | byte(3);
  const int row_bytes = (cols + 7) / 8;
  std::vector<Edge> edges;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (byte(4 + static_cast<std::size_t>(r) * row_bytes + c / 8) & (0x80 >> (c % 8)))
        edges.emplace_back(r, c);
  return BipartiteGraph(rows, cols, std::move(edges));
}

}  // namespace spectral_lab
