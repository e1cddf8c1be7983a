#include <random>

#include <gtest/gtest.h>

#include <nplab/words.hpp>

#include "support.hpp"

using namespace nplab;

namespace {

DenseMatrix<Rat> random_rat_matrix(std::mt19937_64 &rng, std::size_t m) {
  DenseMatrix<Rat> x(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) x(i, j) = gen::small_rat(rng);
  return x;
}

Word random_word(std::mt19937_64 &rng, unsigned r, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<unsigned> letter(1, r);
  Word w;
  for (std::size_t k = len(rng); k > 0; --k) w.letters.push_back(letter(rng));
  return w;
}

} // namespace

TEST(Words, Abelianize) {
  EXPECT_EQ(abelianize(Word{1, 2, 1}, 2), (std::vector<unsigned>{2, 1}));
  EXPECT_EQ(abelianize(Word{1}, 2), (std::vector<unsigned>{1, 0}));
  EXPECT_EQ(abelianize(Word{2, 2, 2}, 2), (std::vector<unsigned>{0, 3}));
}

TEST(Words, DistinctAbelianizations) {
  EXPECT_TRUE(distinct_abelianizations(WordSystem{2, 1, {Word{1}, Word{1, 1}}}));
  EXPECT_FALSE(distinct_abelianizations(WordSystem{2, 2, {Word{1, 2}, Word{2, 1}}}));
  EXPECT_TRUE(distinct_abelianizations(WordSystem{2, 1, {Word{1}}}));
}

TEST(Words, Evaluate) {
  std::mt19937_64 rng(1);
  auto x1 = random_rat_matrix(rng, 2), x2 = random_rat_matrix(rng, 2);
  std::vector<DenseMatrix<Rat>> xs{x1, x2};
  EXPECT_EQ(evaluate_word(Word{1, 2}, xs), matmul(x1, x2));
  EXPECT_EQ(evaluate_word(Word{1}, xs), x1);
  EXPECT_EQ(evaluate_word(Word{1, 2, 1}, xs), matmul(matmul(x1, x2), x1));
  EXPECT_THROW(evaluate_word(Word{3}, xs), std::invalid_argument);
}

TEST(Words, BuildPsi) {
  auto psi = build_psi(WordSystem{1, 1, {Word{1}, Word{1, 1}}});
  Poly a = Poly::var(VarId::edge(1, 1, 1));
  EXPECT_EQ(psi(0, 0), a);
  EXPECT_EQ(psi(0, 1), a * a);
  EXPECT_EQ(build_psi(WordSystem{2, 1, {Word{1}}}), generic_matrix(2, 1));
  auto sq = build_psi(WordSystem{2, 1, {Word{1}, Word{1, 1}}});
  auto e = [](unsigned i, unsigned t) { return Poly::var(VarId::edge(i, t, 1)); };
  EXPECT_EQ(sq(0, psi_column(2, 1, 2)), e(1, 1) * e(1, 1) + e(1, 2) * e(2, 1));
}

TEST(Words, Veronese) {
  auto v = veronese_system(2, 2, 2);
  ASSERT_EQ(v.n(), 5u);
  EXPECT_EQ(v.to_string(), "x1; x2; x1^2; x1*x2; x2^2");
  EXPECT_EQ(veronese_system(1, 3, 1).to_string(), "x1; x1^2; x1^3");
  EXPECT_EQ(veronese_system(1, 1, 3).to_string(), "x1; x2; x3");
  for (unsigned n = 1; n <= 3; ++n)
    for (unsigned r = 1; r <= 3; ++r)
      EXPECT_TRUE(distinct_abelianizations(veronese_system(2, n, r)));
}

TEST(Words, Parse) {
  auto ws = parse_words("x1; x1^2", 2);
  EXPECT_EQ(ws.words, (std::vector<Word>{Word{1}, Word{1, 1}}));
  EXPECT_EQ(ws.r, 1u);
  EXPECT_EQ(parse_words("x1*x2*x1", 2).words.front(), (Word{1, 2, 1}));
  EXPECT_EQ(parse_words(" x1 * x2 ^ 2 ", 2).words.front(), (Word{1, 2, 2}));
  try {
    parse_words("x0", 2);
    FAIL() << "expected parse_error";
  } catch (const parse_error &e) {
    EXPECT_NE(std::string(e.what()).find("indices start at 1"), std::string::npos);
  }
  EXPECT_THROW(parse_words("x3", 2, 2), std::invalid_argument);
  EXPECT_THROW(parse_words("x1 *", 2), parse_error);
  EXPECT_THROW(parse_words("y1", 2), parse_error);
  EXPECT_THROW(parse_words("", 2), parse_error);
}

TEST(WordsProperty, AbelianizationIsAdditive) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    Word a = random_word(rng, 3, 5), b = random_word(rng, 3, 5);
    auto sum = abelianize(a, 3);
    auto vb = abelianize(b, 3);
    for (int k = 0; k < 3; ++k) sum[k] += vb[k];
    EXPECT_EQ(abelianize(a * b, 3), sum);
  }
}

TEST(WordsProperty, TextRoundTrip) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    WordSystem ws{2, 3, {}};
    for (int k = 0; k < 3; ++k) ws.words.push_back(random_word(rng, 3, 6));
    EXPECT_EQ(parse_words(ws.to_string(), 2, 3), ws);
  }
}

TEST(WordsProperty, NumericEvaluationMatchesSymbolic) {
  std::mt19937_64 rng(33);
  for (std::size_t m = 1; m <= 3; ++m)
    for (int trial = 0; trial < 5; ++trial) {
      WordSystem ws{m, 2, {random_word(rng, 2, 4), random_word(rng, 2, 4)}};
      std::vector<DenseMatrix<Rat>> xs{random_rat_matrix(rng, m), random_rat_matrix(rng, m)};
      std::map<VarId, Rat> at;
      for (unsigned q = 1; q <= 2; ++q)
        for (unsigned i = 1; i <= m; ++i)
          for (unsigned t = 1; t <= m; ++t) at[VarId::edge(i, t, q)] = xs[q - 1](i - 1, t - 1);
      auto psi = evaluate(build_psi(ws), at);
      for (std::size_t l = 1; l <= 2; ++l) {
        auto direct = evaluate_word(ws.words[l - 1], xs);
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t t = 0; t < m; ++t)
            EXPECT_EQ(psi(i, psi_column(m, t + 1, l)), direct(i, t));
      }
    }
}
