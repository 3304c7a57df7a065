//
// qeclab - quadratic embedding constants of graphs
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include "qeclab/classify.hpp"
#include "qeclab/decomp.hpp"
#include "qeclab/errors.hpp"
#include "qeclab/families.hpp"

#include "../support/oracles.hpp"

using namespace qeclab;

TEST(BlockJ, Entries) {
  const BlockJ j(5, 2, 4);
  EXPECT_EQ(j.at(1, 1), 0);
  EXPECT_EQ(j.at(2, 4), 1);
  EXPECT_EQ(j.at(4, 5), 0);
  const IntMatrix m = j.to_matrix();
  EXPECT_EQ(m(1, 3), 1);
  EXPECT_EQ(m(0, 0), 0);
  EXPECT_THROW(BlockJ(5, 3, 2), InvalidArgument);
  EXPECT_THROW(BlockJ(5, 0, 2), InvalidArgument);
  EXPECT_THROW(BlockJ(5, 2, 6), InvalidArgument);
}

TEST(BuildA, DisplayedRows) {
  const IntMatrix a6 = build_A(6);
  const long long row1[] = {2, 2, 2, 1, 1, 1};
  for (int j = 0; j < 6; ++j)
    EXPECT_EQ(a6(0, j), row1[j]);
  const long long row4[] = {1, 3, 5, 6, 4, 2};
  for (int j = 0; j < 6; ++j)
    EXPECT_EQ(a6(3, j), row4[j]);
  EXPECT_EQ(build_A(7)(3, 3), 8);
  EXPECT_THROW(build_A(2), InvalidArgument);
  EXPECT_THROW(build_B(2), InvalidArgument);
}

TEST(BuildA, Symmetries) {
  for (int n = 3; n <= 30; ++n) {
    const IntMatrix a = build_A(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        ASSERT_EQ(a(i, j), a(j, i));
        ASSERT_EQ(a(i, j), a(n - 1 - i, n - 1 - j));
      }
  }
}

TEST(BuildB, EqualsAUpToSixty) {
  EXPECT_EQ(build_B(6), build_A(6));
  EXPECT_EQ(build_B(7), build_A(7));
  for (int n = 3; n <= 60; ++n)
    EXPECT_EQ(build_B(n), build_A(n)) << n;
}

TEST(VerifyTheta12, PsdAndEqual) {
  for (int n : {6, 7, 40}) {
    const Theta12Record r = verify_theta12(n);
    EXPECT_TRUE(r.equal);
    EXPECT_TRUE(r.psd);
    EXPECT_GE(r.min_eig, -1e-9);
    const IntMatrix a = build_A(n);
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m(i, j) = static_cast<double>(a(i, j));
    EXPECT_NEAR(r.min_eig, oracle::min_eigenvalue(m), 1e-8);
  }
}

TEST(VerifyTheta12, ThetaOneTwoIsQe) {
  for (int n = 3; n <= 40; ++n)
    EXPECT_LE(qec_numeric(generate(ThetaFamily{1, 2, n - 1})).value,
              kDefaultClassTol)
        << n;
}
