#include <gtest/gtest.h>

#include <nplab/paths.hpp>

using namespace nplab;

namespace {

const WordSystem kSquare{2, 1, {Word{1}, Word{1, 1}}};

Poly a(unsigned i, unsigned t, unsigned q) { return Poly::var(VarId::edge(i, t, q)); }

// Column <t, l> for m = 2, 1-based.
std::size_t col(std::size_t t, std::size_t l) { return (l - 1) * 2 + t; }

} // namespace

TEST(Paths, EnumerationCounts) {
  WordSystem ws{2, 1, {Word{1}, Word{1, 1}}};
  EXPECT_EQ(enumerate_paths(ws, 1, 1u, 2u).size(), 1u);
  EXPECT_EQ(enumerate_paths(ws, 2, 1u, 1u).size(), 2u);
  WordSystem cube{3, 1, {Word{1, 1, 1}}};
  EXPECT_EQ(enumerate_paths(cube, 1, 2u, 3u).size(), 9u);
  EXPECT_EQ(enumerate_paths(cube, 1).size(), 81u);
  EXPECT_THROW(enumerate_paths(ws, 3), std::out_of_range);
}

TEST(Paths, PathSums) {
  EXPECT_EQ(path_sum_entry(kSquare, 1, 2, 1), a(1, 2, 1));
  EXPECT_EQ(path_sum_entry(kSquare, 1, 1, 2), a(1, 1, 1) * a(1, 1, 1) + a(1, 2, 1) * a(2, 1, 1));
  WordSystem mixed{1, 2, {Word{1, 2}}};
  EXPECT_EQ(path_sum_entry(mixed, 1, 1, 1), a(1, 1, 1) * a(1, 1, 2));
}

TEST(Paths, EdgeMultisets) {
  Path p{2, {1, 2, 1}};
  auto f = edge_multiset(kSquare, p);
  EXPECT_EQ(f.cardinality(), 2u);
  EXPECT_EQ(f.count(Edge{1, 2, 1}), 1u);
  EXPECT_EQ(f.count(Edge{2, 1, 1}), 1u);
  PathCollection pc;
  pc.add(p, 2);
  pc.add(Path{1, {1, 1}});
  auto g = edge_multiset(kSquare, pc);
  EXPECT_EQ(g.cardinality(), 5u);
  EXPECT_EQ(g.count(Edge{1, 2, 1}), 2u);
  EXPECT_EQ(g.count(Edge{1, 1, 1}), 1u);
  EXPECT_THROW(edge_multiset(kSquare, Path{2, {1, 2}}), std::invalid_argument);
}

TEST(Paths, FValue) {
  EXPECT_EQ(f_value(kSquare, MinorIndex{{1}, {col(1, 2)}}), 2u);
  EXPECT_EQ(f_value(kSquare, MinorIndex{{1}, {col(2, 1)}}), 0u);
  EXPECT_EQ(f_value(kSquare, MinorIndex{{1, 2}, {col(1, 1), col(2, 2)}}), 3u);
  EXPECT_THROW(f_value(kSquare, MinorIndex{{1}, {9}}), std::invalid_argument);
  EXPECT_THROW(f_value(kSquare, MinorIndex{{1, 2}, {1}}), std::invalid_argument);
}

TEST(Paths, LemmaWitness) {
  auto w1 = lemma_witness(kSquare, MinorIndex{{1}, {col(1, 1)}});
  EXPECT_EQ(w1, (PathCollection{{Path{1, {1, 1}}, 1}}));
  auto w2 = lemma_witness(kSquare, MinorIndex{{1}, {col(2, 2)}});
  EXPECT_EQ(w2, (PathCollection{{Path{2, {1, 1, 2}}, 1}}));
  for (const auto &d : enumerate_D(2, 4)) {
    auto w = lemma_witness(kSquare, d);
    auto idx = collection_index(kSquare, w);
    EXPECT_TRUE(idx.in_D());
    EXPECT_EQ(idx.as_minor(), d);
  }
}

TEST(Paths, LemmaHoldsForSquare) {
  auto chk = check_lemma(kSquare, MinorIndex{{1}, {col(1, 1)}});
  EXPECT_TRUE(chk.holds);
  EXPECT_EQ(chk.collections, 1u);
  for (const auto &d : enumerate_D(2, 4)) EXPECT_TRUE(verify_lemma(kSquare, d)) << d.to_string();
}

TEST(Paths, LemmaFailsForCommutatorPair) {
  WordSystem ws{2, 2, {Word{1, 2}, Word{2, 1}}};
  bool any_false = false;
  for (const auto &d : enumerate_D(2, 4)) any_false = any_false || !verify_lemma(ws, d);
  EXPECT_TRUE(any_false);
}

TEST(Paths, EnumerationBudget) {
  auto big = veronese_system(2, 3, 2);
  MinorIndex d{{1, 2}, {big.width() - 1, big.width()}};
  EXPECT_THROW(check_lemma(big, d, 5), budget_exceeded);
}

TEST(PathsProperty, EdgeCountEqualsLength) {
  auto ws = veronese_system(3, 3, 2);
  for (std::size_t l = 1; l <= ws.n(); ++l)
    for (const auto &p : enumerate_paths(ws, l))
      EXPECT_EQ(edge_multiset(ws, p).cardinality(), ws.words[l - 1].length());
}

TEST(PathsProperty, WitnessEdgesFollowLoops) {
  auto ws = veronese_system(2, 2, 2);
  for (const auto &d : enumerate_D(2, ws.width())) {
    if (d.size() > 2) continue;
    auto w = lemma_witness(ws, d);
    EdgeMultiset expect;
    for (const auto &[p, n] : w) {
      const Word &word = ws.words[p.label - 1];
      for (std::size_t k = 0; k + 1 < word.length(); ++k)
        expect.add(Edge{p.initial(), p.initial(), word.letters[k]}, n);
      expect.add(Edge{p.initial(), p.terminal(), word.letters.back()}, n);
    }
    EXPECT_EQ(edge_multiset(ws, w), expect);
  }
}
