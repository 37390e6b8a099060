#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "spectral_lab/spectral.hpp"
#include "spectral_lab/symmetric_eigen.hpp"

using namespace spectral_lab;

namespace {

SymmetricMatrix random_symmetric(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  SymmetricMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m.set(i, j, d(rng));
  return m;
}

void expect_valid(const SymmetricMatrix& m, const EigenDecomposition& e) {
  const int n = m.order();
  EXPECT_TRUE(std::is_sorted(e.values.begin(), e.values.end()));
  EXPECT_LE(max_residual(m, e), 1e-10 * n * std::max(1.0, m.max_abs()));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      double dot = 0.0;
      for (int k = 0; k < n; ++k) dot += e.vector(a)[k] * e.vector(b)[k];
      EXPECT_NEAR(dot, a == b ? 1.0 : 0.0, 1e-8);
    }
}

}  // namespace

TEST(SymmetricEigen, SmallLaplacians) {
  const auto p2 = symmetric_eigen(laplacian(path_graph(2)));
  EXPECT_NEAR(p2.values[0], 0.0, 1e-14);
  EXPECT_NEAR(p2.values[1], 2.0, 1e-14);
  // det(L(P3) - t I) = -t (t - 1)(t - 3)
  const auto p3 = symmetric_eigen(laplacian(path_graph(3)));
  EXPECT_NEAR(p3.values[0], 0.0, 1e-13);
  EXPECT_NEAR(p3.values[1], 1.0, 1e-13);
  EXPECT_NEAR(p3.values[2], 3.0, 1e-13);
}

TEST(SymmetricEigen, PathSpectrum) {
  for (int n = 2; n <= 40; ++n) {
    const auto e = symmetric_eigen(laplacian(path_graph(n)));
    for (int j = 0; j < n; ++j)
      EXPECT_NEAR(e.values[j], 2.0 - 2.0 * std::cos(std::numbers::pi * j / n), 1e-12) << n << " " << j;
  }
}

TEST(SymmetricEigen, AgreesWithBisectionOracle) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + static_cast<int>(t % 6);
    const auto m = random_symmetric(n, rng);
    const auto e = symmetric_eigen(m);
    const auto ref = oracle::bisection_eigenvalues(m);
    for (int k = 0; k < n; ++k) ASSERT_NEAR(e.values[k], ref[k], 1e-8);
    expect_valid(m, e);
  }
}

TEST(SymmetricEigen, RepeatedEigenvaluesAndDiagonal) {
  SymmetricMatrix d(4);
  d.set(0, 0, 3.0);
  d.set(1, 1, -1.0);
  d.set(2, 2, 3.0);
  d.set(3, 3, 0.5);
  const auto e = symmetric_eigen(d);
  EXPECT_EQ(e.sweeps, 0);
  EXPECT_EQ(e.values, (std::vector<double>{-1.0, 0.5, 3.0, 3.0}));
  const auto k33 = laplacian(complete_bipartite(3, 3));
  expect_valid(k33, symmetric_eigen(k33));
}

TEST(SymmetricEigen, LargerRandomMatrices) {
  std::mt19937_64 rng(8);
  for (int n : {20, 60}) {
    const auto m = random_symmetric(n, rng);
    expect_valid(m, symmetric_eigen(m));
  }
}

TEST(SymmetricEigen, SweepBudgetExhaustionIsReported) {
  std::mt19937_64 rng(1);
  const auto m = random_symmetric(12, rng);
  EXPECT_THROW(symmetric_eigen(m, {.tolerance = 1e-12, .max_sweeps = 1}), EigenError);
}

TEST(SymmetricMatrix, RejectsAsymmetricInput) {
  EXPECT_THROW(SymmetricMatrix(2, {1.0, 2.0, 3.0, 4.0}), std::invalid_argument);
  EXPECT_THROW(SymmetricMatrix(2, {1.0, 2.0, 2.0}), std::invalid_argument);
  SymmetricMatrix m(3);
  m.set(0, 2, 5.0);
  EXPECT_EQ(m(2, 0), 5.0);
}
