#include <gtest/gtest.h>

#include <map>
#include <random>
#include <vector>

#include "test_support.hpp"
#include "threesum/engine_unknown_c_rand.hpp"
#include "threesum/numtheory.hpp"
#include "threesum/oracle.hpp"

using namespace threesum;

namespace {

UnknownCRandState toy_state() {
  UnknownCRandOptions opt;
  opt.force_prime = 5;
  return preprocess_unknown_c_rand({1, 3}, {2, 4}, 0, opt);
}

// x -> list of (a, b) values, read back out of a witness table.
std::map<Value, std::vector<std::pair<Value, Value>>> dump(const WitnessTable& t,
                                                           const IntegerSet& a,
                                                           const IntegerSet& b) {
  std::map<Value, std::vector<std::pair<Value, Value>>> out;
  for (std::size_t k = 0; k < t.key_count(); ++k) {
    for (const auto& w : t.witnesses(k)) out[t.key(k)].emplace_back(a[w.a], b[w.b]);
  }
  return out;
}

}  // namespace

TEST(UnknownCRand, WitnessesOfToyInstance) {
  const auto s = toy_state();
  using W = std::map<Value, std::vector<std::pair<Value, Value>>>;
  EXPECT_EQ(dump(s.witnesses, s.a, s.b),
            (W{{3, {{1, 2}}}, {5, {{1, 4}, {3, 2}}}, {7, {{3, 4}}}}));
}

TEST(UnknownCRand, SinglePair) {
  const auto s = preprocess_unknown_c_rand({0}, {0}, 1);
  using W = std::map<Value, std::vector<std::pair<Value, Value>>>;
  EXPECT_EQ(dump(s.witnesses, s.a, s.b), (W{{0, {{0, 0}}}}));
}

TEST(UnknownCRand, WitnessTablePartitionsPairs) {
  std::mt19937_64 rng(64);
  const auto a = support::random_set(rng, 64, 1000);
  const auto b = support::random_set(rng, 64, 1000);
  const auto s = preprocess_unknown_c_rand(a, b, 3);
  EXPECT_EQ(s.witnesses.total_pairs(), 4096u);
  std::uint64_t sum = 0;
  for (std::size_t k = 0; k < s.witnesses.key_count(); ++k) {
    ASSERT_GT(s.witnesses.witness_count(k), 0u);
    for (const auto& w : s.witnesses.witnesses(k)) EXPECT_EQ(a[w.a] + b[w.b], s.witnesses.key(k));
    sum += s.witnesses.witness_count(k);
  }
  EXPECT_EQ(sum, 4096u);
  // Remainder lists cover every key exactly once, in the right residue class.
  std::vector<int> seen(s.witnesses.key_count(), 0);
  for (std::uint64_t i = 0; i < s.m; ++i) {
    for (auto k : s.remainders.list(i)) {
      EXPECT_EQ(static_cast<std::uint64_t>(s.witnesses.key(k)) % s.m, i);
      ++seen[k];
    }
  }
  for (int x : seen) EXPECT_EQ(x, 1);
  EXPECT_GE(s.m, 512u);
  EXPECT_LT(s.m, 1024u);
  EXPECT_TRUE(support::trial_division_prime(s.m));
}

TEST(UnknownCRand, ToyQueries) {
  const auto s = toy_state();
  EXPECT_EQ(query_unknown_c_rand(s, {1, 3}, {2, 4}, IntegerSet{5, 8}).entries,
            (std::vector<AnswerEntry>{{5, true, 2}, {8, false, 0}}));
  EXPECT_EQ(query_unknown_c_rand(s, {1}, {4}, IntegerSet{3}).entries,
            (std::vector<AnswerEntry>{{3, false, 0}}));
}

TEST(UnknownCRand, TargetsOutsideSumsetAreMisses) {
  const auto s = toy_state();
  const std::vector<Value> cq{17, 100, -3, 9};
  WorkCounters work;
  const auto ans = query_unknown_c_rand(s, {1, 3}, {2, 4}, cq, &work);
  for (const auto& e : ans.entries) EXPECT_FALSE(e.hit);
  EXPECT_EQ(work.fp_scan_length, 0u);
}

TEST(UnknownCRand, ScanCostEqualsFalsePositivesAmongFullSets) {
  std::mt19937_64 rng(12);
  const auto a = support::random_set(rng, 32, 2000);
  const auto b = support::random_set(rng, 32, 2000);
  const auto s = preprocess_unknown_c_rand(a, b, 4);
  for (std::size_t k = 0; k < s.witnesses.key_count(); k += 7) {
    const Value c = s.witnesses.key(k);
    WorkCounters work;
    query_unknown_c_rand(s, {}, {}, std::vector<Value>{c}, &work);
    EXPECT_EQ(work.fp_scan_length,
              oracle::enumerate_false_positives(a, b, IntegerSet{c}, s.m).size());
  }
}

TEST(UnknownCRand, ScanCostSummedOverPrimesObeysDivisorBudget) {
  std::mt19937_64 rng(13);
  const std::uint64_t n = 16, u = n * n * n;
  const auto a = support::random_set(rng, n, static_cast<Value>(u));
  const auto b = support::random_set(rng, n, static_cast<Value>(u));
  const std::uint64_t lo = ceil_pow_three_halves(n);
  const auto primes = primes_in_range(lo, 2 * lo);
  const auto d = divisor_budget(u, lo).d;
  for (int iter = 0; iter < 20; ++iter) {
    const Value c = a[rng() % n] + b[rng() % n];
    std::uint64_t total = 0;
    for (auto p : primes.primes) {
      UnknownCRandOptions opt;
      opt.universe = u;
      opt.force_prime = p;
      const auto s = preprocess_unknown_c_rand(a, b, 0, opt);
      WorkCounters work;
      query_unknown_c_rand(s, {}, {}, std::vector<Value>{c}, &work);
      total += work.fp_scan_length;
    }
    EXPECT_LE(total, n * n * d);
  }
}

TEST(UnknownCRand, RandomQueriesMatchOracle) {
  std::mt19937_64 rng(300);
  for (Value u : {64, 4096, 262144}) {
    const auto a = support::random_set(rng, 64, u);
    const auto b = support::random_set(rng, 64, u);
    const auto s = preprocess_unknown_c_rand(a, b, rng());
    for (int q = 0; q < 70; ++q) {
      const auto aq = support::random_subset(rng, a);
      const auto bq = support::random_subset(rng, b);
      std::vector<Value> cq;
      for (int i = 0; i < 64; ++i) {
        cq.push_back(i % 2 ? a[rng() % a.size()] + b[rng() % b.size()]
                           : static_cast<Value>(rng() % (2 * u + 1)));
      }
      ASSERT_EQ(query_unknown_c_rand(s, aq, bq, cq), oracle::brute_force_all_numbers(aq, bq, cq));
    }
  }
}

TEST(UnknownCRand, Errors) {
  const auto s = toy_state();
  EXPECT_THROW(query_unknown_c_rand(s, {2}, {2}, IntegerSet{4}), DomainError);
  UnknownCRandOptions tiny;
  tiny.memory_budget = 10;
  EXPECT_THROW(preprocess_unknown_c_rand({1, 3}, {2, 4}, 0, tiny), ResourceError);
  UnknownCRandOptions composite;
  composite.force_prime = 15;
  EXPECT_THROW(preprocess_unknown_c_rand({1, 3}, {2, 4}, 0, composite), DomainError);
}
