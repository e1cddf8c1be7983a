#include <map>
#include <random>
#include <string>

#include <gtest/gtest.h>

#include <nplab/multiset.hpp>

using nplab::Multiset;
using MS = Multiset<std::string>;

TEST(Multiset, CountAndCardinality) {
  MS s{{"a", 2}, {"b", 1}};
  EXPECT_EQ(count(s, std::string("a")), 2u);
  EXPECT_EQ(count(s, std::string("c")), 0u);
  EXPECT_EQ(count(MS{}, std::string("a")), 0u);
  EXPECT_EQ(cardinality(s), 3u);
  EXPECT_EQ(cardinality(MS{}), 0u);
  EXPECT_EQ(cardinality(MS{{"a", 5}}), 5u);
}

TEST(Multiset, SumOverFamily) {
  std::map<std::string, MS> t{{"a", MS{{"x", 1}}}, {"b", MS{{"x", 1}, {"y", 1}}}};
  EXPECT_EQ(msum(MS{{"a", 2}}, t), (MS{{"x", 2}}));
  EXPECT_EQ(msum(MS{{"a", 1}, {"b", 1}}, t), (MS{{"x", 2}, {"y", 1}}));
  EXPECT_EQ(msum(MS{}, t), MS{});
  EXPECT_THROW(msum(MS{{"z", 1}}, t), std::out_of_range);
}

TEST(Multiset, SubmultisetAndSupport) {
  EXPECT_TRUE(is_submultiset(MS{{"a", 1}}, MS{{"a", 2}}));
  EXPECT_FALSE(is_submultiset(MS{{"a", 3}}, MS{{"a", 2}}));
  EXPECT_EQ(support(MS{{"a", 2}, {"b", 1}}), (std::set<std::string>{"a", "b"}));
}

TEST(Multiset, RemoveTooManyThrows) {
  MS s{{"a", 1}};
  EXPECT_THROW(s.remove("a", 2), std::invalid_argument);
  s.remove("a");
  EXPECT_TRUE(s.empty());
}

TEST(Multiset, CanonicalText) {
  MS s;
  s.add("b");
  s.add("a", 2);
  EXPECT_EQ(s.to_string(), "{a:2,b:1}");
}

namespace {

Multiset<int> random_ms(std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> item(0, 4), cnt(0, 3);
  Multiset<int> s;
  for (int k = 0; k < 4; ++k) s.add(item(rng), static_cast<unsigned>(cnt(rng)));
  return s;
}

} // namespace

TEST(MultisetProperty, SumCardinality) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto s = random_ms(rng);
    std::map<int, Multiset<int>> t;
    for (int i = 0; i <= 4; ++i) t[i] = random_ms(rng);
    std::size_t expect = 0;
    for (const auto &[i, n] : s) expect += n * t[i].cardinality();
    EXPECT_EQ(msum(s, t).cardinality(), expect);
  }
}

TEST(MultisetProperty, Antisymmetry) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    auto s = random_ms(rng), t = random_ms(rng);
    if (s.is_submultiset_of(t) && t.is_submultiset_of(s)) EXPECT_EQ(s, t);
    EXPECT_TRUE(s.is_submultiset_of(s + t));
  }
}

TEST(MultisetProperty, SupportRoundTripIffSet) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    auto s = random_ms(rng);
    EXPECT_EQ(Multiset<int>::from_set(s.support()) == s, s.is_set());
  }
}
