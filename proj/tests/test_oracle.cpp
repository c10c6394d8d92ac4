#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "test_support.hpp"
#include "threesum/convolution.hpp"
#include "threesum/oracle.hpp"

using namespace threesum;

TEST(BruteForce, HandEnumeratedExample) {
  // Pair sums: 3, 5, 5, 7.
  const auto ans = oracle::brute_force_all_numbers({1, 3}, {2, 4}, IntegerSet{5, 8});
  EXPECT_EQ(ans.entries, (std::vector<AnswerEntry>{{5, true, 2}, {8, false, 0}}));
}

TEST(BruteForce, EmptyAPrimeGivesAllMisses) {
  const std::vector<Value> cq{9, 4, 7};
  const auto ans = oracle::brute_force_all_numbers({}, {1, 2}, cq);
  ASSERT_EQ(ans.entries.size(), 3u);
  for (std::size_t i = 0; i < cq.size(); ++i) {
    EXPECT_EQ(ans.entries[i], (AnswerEntry{cq[i], false, 0}));
  }
}

TEST(BruteForce, ZeroPlusZero) {
  const auto ans = oracle::brute_force_all_numbers({0}, {0}, IntegerSet{0});
  EXPECT_EQ(ans.entries, (std::vector<AnswerEntry>{{0, true, 1}}));
}

TEST(BruteForce, KeepsFirstOccurrenceOrderOfTargets) {
  const std::vector<Value> cq{8, 5, 8, -1, 5};
  const auto ans = oracle::brute_force_all_numbers({1, 3}, {2, 4}, cq);
  EXPECT_EQ(ans.entries,
            (std::vector<AnswerEntry>{{8, false, 0}, {5, true, 2}, {-1, false, 0}}));
}

TEST(FalsePositives, HandExample) {
  // Sums 3, 5, 5, 7 mod 5 = 3, 0, 0, 2; 8 mod 5 = 3 and (1, 2) sums to 3 != 8.
  EXPECT_EQ(oracle::enumerate_false_positives({1, 3}, {2, 4}, {5, 8}, 5),
            (FalsePositiveList{{1, 2, 8}}));
}

TEST(FalsePositives, EmptyC) {
  EXPECT_TRUE(oracle::enumerate_false_positives({1, 3}, {2, 4}, {}, 5).empty());
}

TEST(FalsePositives, ModOneIsEveryNonSolution) {
  const IntegerSet a{1, 3}, b{2, 4}, c{5, 8};
  FalsePositiveList expected;
  for (Value x : a)
    for (Value y : b)
      for (Value z : c)
        if (x + y != z) expected.push_back({x, y, z});
  EXPECT_EQ(oracle::enumerate_false_positives(a, b, c, 1), expected);
  EXPECT_EQ(expected.size(), 6u);
}

TEST(FalsePositives, CountMatchesMultiplicityMinusTrueSolutions) {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 50; ++iter) {
    const auto a = support::random_set(rng, 40, 5000);
    const auto b = support::random_set(rng, 40, 5000);
    const auto c = support::random_set(rng, 40, 10000);
    const std::uint64_t m = std::uniform_int_distribution<std::uint64_t>(1, 400)(rng);
    const auto fp = oracle::enumerate_false_positives(a, b, c, m);
    const auto mult = modular_sumset_multiplicities(a, b, m);
    const auto truth = oracle::brute_force_all_numbers(a, b, c);
    std::uint64_t expected = 0;
    for (const auto& e : truth.entries) expected += mult.at(e.c) - e.count;
    EXPECT_EQ(fp.size(), expected);
    for (const auto& t : fp) {
      EXPECT_NE(t.a + t.b, t.c);
      EXPECT_EQ((t.a + t.b - t.c) % static_cast<Value>(m), 0);
    }
  }
}
