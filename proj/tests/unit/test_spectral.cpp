//
// qeclab - quadratic embedding constants of graphs
// SPDX-License-Identifier: Apache-2.0
//

#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "qeclab/errors.hpp"
#include "qeclab/families.hpp"
#include "qeclab/spectral.hpp"

#include "../support/oracles.hpp"

using namespace qeclab;

namespace {

Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const int n = static_cast<int>(rows.size());
  Matrix m(n, n);
  int i = 0;
  for (const auto &r : rows) {
    int j = 0;
    for (double x : r)
      m(i, j++) = x;
    ++i;
  }
  return m;
}

Eigen::MatrixXd to_eigen(const Matrix &m) {
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      e(i, j) = m(i, j);
  return e;
}

Matrix random_symmetric(int n, std::mt19937 &rng) {
  std::normal_distribution<double> nd;
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      m(i, j) = m(j, i) = nd(rng);
  return m;
}

} // namespace

TEST(Eigen, TrivialCases) {
  EXPECT_NEAR(max_eigenvalue_symmetric(Matrix::identity(3)).value, 1.0, 1e-12);
  const EigenPair p = max_eigenvalue_symmetric(from_rows({{1, 0, 0},
                                                          {0, 2, 0},
                                                          {0, 0, 3}}));
  EXPECT_NEAR(p.value, 3.0, 1e-12);
  EXPECT_NEAR(std::abs(p.vector[2]), 1.0, 1e-12);
  const Matrix dp2 = from_rows({{0, 1}, {1, 0}});
  EXPECT_NEAR(max_eigenvalue_symmetric(dp2).value, 1.0, 1e-12);
  EXPECT_NEAR(min_eigenvalue_symmetric(dp2).value, -1.0, 1e-12);
}

TEST(Eigen, RejectsBadInput) {
  EXPECT_THROW(symmetric_eigen(from_rows({{0, 1}, {2, 0}})), NumericError);
  EXPECT_THROW(symmetric_eigen(from_rows({{NAN, 0}, {0, 1}})),
               NumericError);
  EXPECT_THROW(symmetric_eigen(Matrix(2, 3)), NumericError);
}

TEST(Eigen, MatchesEigenOracleWithSmallResidual) {
  std::mt19937 rng(3);
  for (int n : {1, 2, 3, 5, 8, 13, 21, 40}) {
    const Matrix m = random_symmetric(n, rng);
    const SymmetricEigen se = symmetric_eigen(m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(m));
    for (int k = 0; k < n; ++k)
      EXPECT_NEAR(se.values[k], es.eigenvalues()(k), 1e-9) << n;
    const double norm = m.frobenius_norm();
    for (int k = 0; k < n; ++k) {
      std::vector<double> v(n);
      for (int i = 0; i < n; ++i)
        v[i] = se.vectors(i, k);
      const auto mv = m * std::span<const double>(v);
      double res = 0.0;
      for (int i = 0; i < n; ++i)
        res += std::pow(mv[i] - se.values[k] * v[i], 2);
      EXPECT_LE(std::sqrt(res), 100 * kDefaultTol * norm);
    }
  }
}

TEST(Eigen, Deterministic) {
  std::mt19937 rng(5);
  const Matrix m = random_symmetric(12, rng);
  const EigenPair a = max_eigenvalue_symmetric(m);
  const EigenPair b = max_eigenvalue_symmetric(m);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.vector, b.vector);
}

TEST(CenteredBasis, Orthonormal) {
  for (int n : {2, 3, 7, 20}) {
    const Matrix b = centered_basis(n);
    ASSERT_EQ(b.rows(), n);
    ASSERT_EQ(b.cols(), n - 1);
    const Matrix g = b.transposed() * b;
    for (int i = 0; i < n - 1; ++i) {
      double s = 0.0;
      for (int r = 0; r < n; ++r)
        s += b(r, i);
      EXPECT_NEAR(s, 0.0, 1e-12);
      for (int j = 0; j < n - 1; ++j)
        EXPECT_NEAR(g(i, j), i == j ? 1.0 : 0.0, 1e-12);
    }
  }
}

TEST(Qec, KnownValues) {
  EXPECT_NEAR(qec_numeric(generate(CompleteBipartiteFamily{3, 3})).value, 1.0,
              1e-9);
  EXPECT_NEAR(qec_numeric(generate(PathFamily{2})).value, -1.0, 1e-12);
  EXPECT_NEAR(qec_numeric(generate(CycleFamily{6})).value, 0.0, 1e-9);
  EXPECT_NEAR(qec_numeric(generate(ThetaFamily{2, 2, 4})).value, 0.5529,
              5e-4);
  EXPECT_THROW(qec_numeric(DistanceMatrix(1, {0})), InvalidArgument);
}

TEST(Qec, VectorInvariants) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::random_connected(2 + trial % 14, 0.2, rng);
    const DistanceMatrix d = distance_matrix(g);
    const QecResult r = qec_numeric(d);
    const double sum = std::accumulate(r.vector.begin(), r.vector.end(), 0.0);
    const double norm2 = std::inner_product(r.vector.begin(), r.vector.end(),
                                            r.vector.begin(), 0.0);
    EXPECT_NEAR(sum, 0.0, r.tol);
    EXPECT_NEAR(norm2, 1.0, r.tol);
    EXPECT_NEAR(quadratic_form(d, r.vector), r.value, 10 * r.tol);
    EXPECT_EQ(r.method, QecMethod::kNumeric);
  }
}

TEST(Qec, MatchesEigenOracle) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_connected(2 + trial % 20, 0.15, rng);
    EXPECT_NEAR(qec_numeric(g).value, oracle::qec(g), 1e-9);
  }
}

TEST(Qec, RandomZeroSumVectorsNeverExceed) {
  std::mt19937 rng(19);
  const Graph g = generate(ThetaFamily{2, 3, 4});
  const DistanceMatrix d = distance_matrix(g);
  const QecResult r = qec_numeric(d);
  std::normal_distribution<double> nd;
  const int n = g.num_vertices();
  double best = -1e300;
  for (int s = 0; s < 10000; ++s) {
    std::vector<double> f(n);
    for (double &x : f)
      x = nd(rng);
    const double mean = std::accumulate(f.begin(), f.end(), 0.0) / n;
    double nn = 0.0;
    for (double &x : f) {
      x -= mean;
      nn += x * x;
    }
    for (double &x : f)
      x /= std::sqrt(nn);
    const double q = quadratic_form(d, f);
    ASSERT_LE(q, r.value + r.tol);
    best = std::max(best, q);
  }
  EXPECT_LE(best, r.value + r.tol);
  EXPECT_GT(best, r.value - 1.0); // sampled values approach from below
}

TEST(Qec, PermutationInvariant) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = oracle::random_connected(3 + trial % 12, 0.2, rng);
    std::vector<int> perm(g.num_vertices());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_NEAR(qec_numeric(g).value, qec_numeric(oracle::relabel(g, perm)).value,
                1e-9);
  }
}

TEST(Qec, CompleteGraphsAreMinusOneOthersAbove) {
  for (int n = 2; n <= 12; ++n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        e.emplace_back(u, v);
    EXPECT_NEAR(qec_numeric(Graph(n, e)).value, -1.0, 1e-9);
  }
  std::mt19937 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = oracle::random_connected(3 + trial % 10, 0.3, rng);
    const int n = g.num_vertices();
    if (g.num_edges() == n * (n - 1) / 2)
      continue;
    EXPECT_GT(qec_numeric(g).value, -1.0 + 1e-9);
  }
}

TEST(QuadraticForm, Examples) {
  const DistanceMatrix p2 = distance_matrix(generate(PathFamily{2}));
  const std::vector<double> zero{0.0, 0.0};
  EXPECT_EQ(quadratic_form(p2, zero), 0.0);
  const std::vector<long long> f{1, -1};
  EXPECT_EQ(quadratic_form(p2, std::span<const long long>(f)), -2);
  const std::vector<long long> bad{1, -1, 0};
  EXPECT_THROW(quadratic_form(p2, std::span<const long long>(bad)),
               InvalidArgument);
}

TEST(QPower, Conventions) {
  const DistanceMatrix d = distance_matrix(generate(PathFamily{3}));
  EXPECT_EQ(q_power_matrix(d, 0.0), Matrix::identity(3));
  EXPECT_EQ(q_power_matrix(d, 1.0), Matrix(3, 3, 1.0));
  EXPECT_EQ(q_power_matrix(d, -1.0),
            from_rows({{1, -1, 1}, {-1, 1, -1}, {1, -1, 1}}));
}

TEST(Psd, Examples) {
  const PsdResult ones = is_psd(Matrix(4, 4, 1.0));
  EXPECT_TRUE(ones.psd);
  EXPECT_NEAR(ones.min_eigenvalue, 0.0, 1e-12);
  EXPECT_FALSE(is_psd(from_rows({{1, 0}, {0, -1}})).psd);
  const DistanceMatrix d = distance_matrix(generate(PathFamily{3}));
  EXPECT_TRUE(is_psd(q_power_matrix(d, 0.5)).psd);
  EXPECT_THROW(is_psd(from_rows({{0, 1}, {0, 0}})), NumericError);
}

TEST(PiScan, GridShapeAndKnownGraphs) {
  const DistanceMatrix p5 = distance_matrix(generate(PathFamily{5}));
  const PiScan s = pi_scan(p5);
  EXPECT_TRUE(s.full_interval_sampled);
  EXPECT_EQ(s.grid.size(), 401u);
  EXPECT_EQ(s.grid.front(), -1.0);
  EXPECT_EQ(s.grid.back(), 1.0);
  EXPECT_TRUE(std::is_sorted(s.grid.begin(), s.grid.end()));
  EXPECT_NE(std::find(s.grid.begin(), s.grid.end(), 0.0), s.grid.end());

  const PiScan k23 = pi_scan(distance_matrix(generate(ThetaFamily{2, 2, 2})));
  EXPECT_FALSE(k23.full_interval_sampled);

  // Coarse grids still force -1, 0, 1.
  const PiScan coarse = pi_scan(p5, 2);
  EXPECT_EQ(coarse.grid, (std::vector<double>{-1.0, 0.0, 1.0}));
}

TEST(PiScan, ZeroAndOneAlwaysPsd) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = oracle::random_connected(2 + trial % 12, 0.25, rng);
    const PiScan s = pi_scan(distance_matrix(g), 41);
    for (std::size_t i = 0; i < s.grid.size(); ++i)
      if (s.grid[i] == 0.0 || s.grid[i] == 1.0) {
        EXPECT_TRUE(s.psd_flags[i]);
      }
    if (s.full_interval_sampled) {
      EXPECT_LE(qec_numeric(g).value, kDefaultTol);
    }
  }
}

TEST(PiScan, MinEigenvaluesMatchOracle) {
  const Graph g = generate(CompleteBipartiteFamily{2, 3});
  const DistanceMatrix d = distance_matrix(g);
  const PiScan s = pi_scan(d, 21);
  for (std::size_t i = 0; i < s.grid.size(); ++i) {
    const double oracle_min =
        oracle::min_eigenvalue(to_eigen(q_power_matrix(d, s.grid[i])));
    EXPECT_NEAR(s.min_eigenvalues[i], oracle_min, 1e-9);
  }
}
