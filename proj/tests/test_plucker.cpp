#include <random>

#include <gtest/gtest.h>

#include <nplab/plucker.hpp>
#include <nplab/words.hpp>

#include "support.hpp"

using namespace nplab;

TEST(Plucker, MinorCount) {
  EXPECT_EQ(minor_count(1, 2), 2u);
  EXPECT_EQ(minor_count(2, 4), 14u);
  EXPECT_EQ(minor_count(1, 1), 1u);
  EXPECT_EQ(minor_count(2, 10), 65u);
  EXPECT_EQ(minor_count(3, 6), 83u);
}

TEST(Plucker, EnumerationOrder) {
  auto d = enumerate_D(1, 2);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0].to_string(), "({1},{1})");
  EXPECT_EQ(d[1].to_string(), "({1},{2})");
  auto e = enumerate_D(2, 2);
  ASSERT_EQ(e.size(), 5u);
  EXPECT_EQ(e[0].to_string(), "({1},{1})");
  EXPECT_EQ(e[1].to_string(), "({1},{2})");
  EXPECT_EQ(e[2].to_string(), "({2},{1})");
  EXPECT_EQ(e[3].to_string(), "({2},{2})");
  EXPECT_EQ(e[4].to_string(), "({1,2},{1,2})");
  EXPECT_EQ(enumerate_D(2, 4).size(), 14u);
}

TEST(Plucker, Numeric) {
  DenseMatrix<Rat> b(2, 2);
  b(0, 0) = 1;
  b(0, 1) = 2;
  b(1, 0) = 3;
  b(1, 1) = 4;
  EXPECT_EQ(plucker_embed_numeric(b), (std::vector<Rat>{1, 2, 3, 4, -2}));

  DenseMatrix<Rat> z(2, 3);
  z(0, 0) = 5;
  z(0, 2) = 1;
  auto pv = plucker_embed_numeric(z);
  auto idx = enumerate_D(2, 3);
  for (std::size_t k = 0; k < idx.size(); ++k)
    if (std::find(idx[k].rows.begin(), idx[k].rows.end(), 2u) != idx[k].rows.end())
      EXPECT_EQ(pv[k], 0) << idx[k].to_string();
}

TEST(Plucker, ScalarCoordinatesAreEntries) {
  auto b = build_psi(WordSystem{1, 1, {Word{1}, Word{1, 1}, Word{1, 1, 1}}});
  auto pv = plucker_embed(b);
  ASSERT_EQ(pv.size(), 3u);
  for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(pv.coords[j], b(0, j));
}

TEST(Plucker, CoefficientMatrix) {
  auto pv = plucker_embed(build_psi(WordSystem{1, 1, {Word{1}, Word{1, 1}}}));
  auto cm = coefficient_matrix(pv);
  EXPECT_EQ(cm.matrix.rows(), 2u);
  EXPECT_EQ(rank(cm.matrix), 2u);
  EXPECT_EQ(cm.matrix.at(0, 0), 1);
  EXPECT_EQ(cm.matrix.at(1, 1), 1);
  EXPECT_EQ(cm.matrix.at(0, 1), 0);

  PluckerVector zero{enumerate_D(1, 2), {Poly(), Poly()}};
  EXPECT_EQ(coefficient_matrix(zero).matrix.rows(), 0u);

  auto g = coefficient_matrix(plucker_embed(generic_matrix(2, 1)));
  EXPECT_EQ(g.matrix.rows(), 6u); // 4 entries, 2 determinant monomials
  EXPECT_EQ(rank(g.matrix), 5u);
}

TEST(PluckerProperty, RankOneMinorsVanish) {
  std::mt19937_64 rng(41);
  PolyMatrix b(3, 4);
  std::vector<Poly> u, v;
  for (int k = 0; k < 3; ++k) u.push_back(gen::random_poly(rng, 3, 2, 2));
  for (int k = 0; k < 4; ++k) v.push_back(gen::random_poly(rng, 3, 2, 2));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 4; ++j) b(i, j) = u[i] * v[j];
  auto pv = plucker_embed(b);
  for (std::size_t k = 0; k < pv.size(); ++k)
    if (pv.index[k].size() >= 2) EXPECT_TRUE(pv.coords[k].is_zero());
}

TEST(PluckerProperty, SubstitutionCommutes) {
  std::mt19937_64 rng(42);
  auto b = build_psi(WordSystem{2, 2, {Word{1, 2}, Word{2}, Word{1, 1}}});
  auto pv = plucker_embed(b);
  for (int trial = 0; trial < 5; ++trial) {
    std::map<VarId, Rat> at;
    for (unsigned q = 1; q <= 2; ++q)
      for (unsigned i = 1; i <= 2; ++i)
        for (unsigned t = 1; t <= 2; ++t) at[VarId::edge(i, t, q)] = gen::small_rat(rng);
    auto numeric = plucker_embed_numeric(evaluate(b, at));
    for (std::size_t k = 0; k < pv.size(); ++k) EXPECT_EQ(pv.coords[k].evaluate(at), numeric[k]);
  }
}

TEST(PluckerProperty, BlockPermutationKeepsRank) {
  std::vector<Word> words{Word{1}, Word{1, 2}, Word{2, 2}};
  std::size_t base = 0;
  std::sort(words.begin(), words.end());
  bool first = true;
  do {
    auto cm = coefficient_matrix(plucker_embed(build_psi(WordSystem{2, 2, words})));
    std::size_t r = rank(cm.matrix);
    if (first) base = r;
    first = false;
    EXPECT_EQ(r, base);
  } while (std::next_permutation(words.begin(), words.end()));
}
