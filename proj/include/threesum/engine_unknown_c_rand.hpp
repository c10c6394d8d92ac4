#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "threesum/convolution.hpp"
#include "threesum/engine_known_c.hpp"
#include "threesum/errors.hpp"
#include "threesum/integer_set.hpp"
#include "threesum/numtheory.hpp"
#include "threesum/types.hpp"
#include "threesum/witness_table.hpp"

namespace threesum {

struct UnknownCRandOptions {
  std::optional<std::uint64_t> universe;
  std::optional<std::uint64_t> force_prime;  // test hook
  std::uint64_t memory_budget = std::uint64_t{4} << 30;
};

struct UnknownCRandState {
  IntegerSet a, b;
  std::uint64_t n = 0;
  std::uint64_t universe = 0;
  std::uint64_t seed = 0;
  std::uint64_t m = 0;  // prime in [ceil(n^1.5), 2 ceil(n^1.5)) unless forced
  WitnessTable witnesses;
  RemainderLists remainders;
};

inline UnknownCRandState preprocess_unknown_c_rand(IntegerSet a, IntegerSet b,
                                                   std::uint64_t rng_seed,
                                                   const UnknownCRandOptions& opt = {}) {
  UnknownCRandState s;
  s.universe = detail::resolve_universe(opt.universe, {&a, &b});
  s.n = std::max(a.size(), b.size());
  if (s.n == 0) throw DomainError("preprocess_unknown_c_rand: A and B are empty");
  s.a = std::move(a);
  s.b = std::move(b);
  s.seed = rng_seed;

  if (opt.force_prime) {
    if (!is_prime(*opt.force_prime)) {
      throw DomainError("forced modulus " + std::to_string(*opt.force_prime) +
                        " is not prime");
    }
    s.m = *opt.force_prime;
  } else {
    const std::uint64_t lo = std::max<std::uint64_t>(2, ceil_pow_three_halves(s.n));
    s.m = sample_prime(primes_in_range(lo, 2 * lo), mix_seed(rng_seed, 0));
  }

  s.witnesses = WitnessTable::build(s.a, s.b, opt.memory_budget);
  s.remainders = RemainderLists::build(s.witnesses, s.m);
  return s;
}

/// Answers a query whose targets need not have been known at preprocessing.
inline QueryAnswer query_unknown_c_rand(const UnknownCRandState& s,
                                        const IntegerSet& aq, const IntegerSet& bq,
                                        std::span<const Value> cq,
                                        WorkCounters* work = nullptr) {
  const auto in_a = ordinal_mask(s.a, aq, "A'", "A");
  const auto in_b = ordinal_mask(s.b, bq, "B'", "B");
  const auto targets = distinct_in_order(cq);
  const MultiplicityVector mult = modular_sumset_multiplicities(aq, bq, s.m);

  std::uint64_t scanned = 0;
  QueryAnswer out;
  out.entries.reserve(targets.size());
  for (Value c : targets) {
    const auto key = s.witnesses.find(c);
    if (!key) {
      out.entries.push_back({c, false, 0});
      continue;
    }
    const std::uint64_t k = count_via_remainders(s.witnesses, s.remainders, *key,
                                                 mult.at(c), in_a, in_b, scanned);
    out.entries.push_back({c, k > 0, k});
  }
  if (work) {
    work->convolution_length += s.m;
    work->fp_scan_length += scanned;
  }
  return out;
}

inline QueryAnswer query_unknown_c_rand(const UnknownCRandState& s,
                                        const IntegerSet& aq, const IntegerSet& bq,
                                        const IntegerSet& cq,
                                        WorkCounters* work = nullptr) {
  return query_unknown_c_rand(s, aq, bq, cq.values(), work);
}

}  // namespace threesum
