#include <gtest/gtest.h>

#include <cmath>

#include "fanning/linalg.hpp"
#include "support/generators.hpp"

using namespace fanning;
using namespace fanning::testing;

TEST(Linalg, ConditionNumber) {
  EXPECT_NEAR(condition_number(Matrix::Identity(4, 4)), 1.0, 1e-15);
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 10;
  d(1, 1) = 0.1;
  EXPECT_NEAR(condition_number(d), 100.0, 1e-12);
  EXPECT_TRUE(std::isinf(condition_number(Matrix::Zero(3, 3))));
}

TEST(Linalg, RankAndNullSpace) {
  Rng rng(21);
  const Matrix a = random_matrix(6, 3, rng) * random_matrix(3, 5, rng);
  EXPECT_EQ(numerical_rank(a), 3);
  const Matrix ns = null_space(a);
  EXPECT_EQ(ns.cols(), 2);
  EXPECT_LT(max_abs(a * ns), 1e-12);
  EXPECT_EQ(orthonormal_basis(a).cols(), 3);
}

TEST(Linalg, SubspaceDistance) {
  Rng rng(22);
  const Matrix a = random_matrix(6, 2, rng);
  const Matrix g = random_gl(2, rng);
  EXPECT_LT(subspace_distance(a, a * g), 1e-12);
  Matrix e1 = Matrix::Zero(2, 1);
  e1(0, 0) = 1;
  Matrix r(2, 1);
  r << std::cos(0.3), std::sin(0.3);
  EXPECT_NEAR(subspace_distance(e1, r), std::sin(0.3), 1e-14);
  EXPECT_EQ(subspace_distance(a, random_matrix(6, 3, rng)), 1.0);
}

TEST(Linalg, BlockDiagonal) {
  const Matrix b = (Matrix(2, 2) << 1, 2, 3, 4).finished();
  const Matrix d = block_diagonal(b, 3);
  EXPECT_EQ(d.rows(), 6);
  EXPECT_EQ(d(4, 5), 2.0);
  EXPECT_EQ(d(0, 2), 0.0);
}
