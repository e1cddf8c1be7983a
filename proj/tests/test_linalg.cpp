#include <random>

#include <gtest/gtest.h>

#include <nplab/linalg.hpp>

#include "support.hpp"

using namespace nplab;

namespace {

RatMatrix m_of(std::vector<RatVector> rows) { return RatMatrix::from_dense(rows); }

bool annihilates(const RatVector &v, const RatMatrix &m) {
  for (const auto &x : left_multiply(v, m))
    if (x != 0) return false;
  return true;
}

} // namespace

TEST(Rank, Examples) {
  EXPECT_EQ(rank(m_of({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})), 3u);
  EXPECT_EQ(rank(m_of({{1, 2}, {2, 4}})), 1u);
  EXPECT_EQ(rank(m_of({{1, make_rat(1, 2)}, {make_rat(1, 2), make_rat(1, 3)}})), 2u);
  EXPECT_EQ(rank(RatMatrix(3, 4)), 0u);
}

TEST(LeftKernel, Examples) {
  auto k = left_kernel_basis(m_of({{1, 2}, {2, 4}}));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0][0] * -1, k[0][1] * 2); // proportional to (2, -1)
  EXPECT_NE(k[0][0], 0);
  EXPECT_TRUE(left_kernel_basis(m_of({{1, 0}, {0, 1}})).empty());
  auto z = left_kernel_basis(m_of({{0, 0}, {0, 0}}));
  EXPECT_EQ(z.size(), 2u);
  EXPECT_EQ(rank(RatMatrix::from_dense(z)), 2u);
}

TEST(RowSpace, Examples) {
  auto b = row_space_basis(m_of({{1, 2}, {2, 4}}));
  ASSERT_EQ(b.rows(), 1u);
  EXPECT_EQ(b.at(0, 0), 1);
  EXPECT_EQ(b.at(0, 1), 2);
  EXPECT_EQ(row_space_basis(RatMatrix(2, 2)).rows(), 0u);
  EXPECT_EQ(row_space_basis(m_of({{0, 1}, {1, 0}})).rows(), 2u);
}

TEST(RatMatrix, RejectsBadRows) {
  RatMatrix m(0, 2);
  EXPECT_THROW(m.push_row({{5, Rat(1)}}), std::invalid_argument);
  EXPECT_THROW(RatMatrix::from_dense({{1, 2}, {1}}), std::invalid_argument);
}

TEST(LinalgProperty, DenseAndSparseAgree) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 9);
    auto m = gen::random_matrix(rng, dim(rng), dim(rng), 0.4);
    EXPECT_EQ(rank_dense(m), rank_sparse(m));
  }
}

TEST(LinalgProperty, KernelIsExactAndComplete) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 9);
    auto m = gen::random_matrix(rng, dim(rng), dim(rng), 0.4);
    auto kr = rank_and_left_kernel(m);
    EXPECT_LE(kr.rank, std::min(m.rows(), m.cols()));
    EXPECT_EQ(kr.rank + kr.basis.size(), m.rows());
    for (const auto &v : kr.basis) EXPECT_TRUE(annihilates(v, m));
    if (!kr.basis.empty())
      EXPECT_EQ(rank(RatMatrix::from_dense(kr.basis)), kr.basis.size());
  }
}

TEST(LinalgProperty, RankInvariantUnderRowOps) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    auto m = gen::random_matrix(rng, 6, 5, 0.5);
    auto dense = m.to_dense();
    std::shuffle(dense.begin(), dense.end(), rng);
    for (auto &row : dense)
      for (auto &x : row) x *= make_rat(-3, 7);
    EXPECT_EQ(rank(m), rank(RatMatrix::from_dense(dense)));
  }
}
