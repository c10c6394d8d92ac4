#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "threesum/convolution.hpp"
#include "threesum/errors.hpp"
#include "threesum/integer_set.hpp"
#include "threesum/numtheory.hpp"
#include "threesum/types.hpp"

namespace threesum {

struct KnownCOptions {
  // Universe bound U; defaults to the largest input value (at least 1).
  std::optional<std::uint64_t> universe;
  // Test hook: use this prime instead of sampling one. Never restarted.
  std::optional<std::uint64_t> force_prime;
  // Test hook: replaces the computed restart threshold.
  std::optional<std::uint64_t> fp_cap;
  int max_attempts = 64;
};

struct OrdinalTriple {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint32_t c = 0;
  friend bool operator==(const OrdinalTriple&, const OrdinalTriple&) = default;
};

/// Preprocessed (A, B, C) for the known-C engine.
///
/// Holds a prime p from [r, 2r) with r = ceil(n^1.5) and every false positive
/// modulo p. |false_positives| never exceeds fp_cap = 2 * ceil(n^3 D / |P|),
/// where D bounds how many primes of the range divide a nonzero difference
/// a + b - c and |P| is the number of primes in the range: the exact average
/// of |F| over all primes is at most n^3 D / |P|, so by Markov a uniformly
/// sampled prime overshoots the cap with probability at most 1/2.
struct KnownCState {
  IntegerSet a, b, c;
  std::uint64_t n = 0;
  std::uint64_t universe = 0;
  std::uint64_t seed = 0;
  std::uint64_t range_lo = 0;  // primes sampled from [range_lo, 2 * range_lo)
  std::uint64_t prime_count = 0;
  std::uint64_t divisor_budget = 0;
  std::uint64_t fp_cap = 0;
  std::uint64_t p = 0;
  std::uint64_t restarts = 0;
  FalsePositiveList false_positives;
  std::vector<OrdinalTriple> fp_ordinals;
};

namespace detail {

inline std::uint64_t resolve_universe(std::optional<std::uint64_t> requested,
                                      std::initializer_list<const IntegerSet*> sets) {
  Value largest = 0;
  for (const auto* s : sets) largest = std::max(largest, s->max());
  const std::uint64_t u =
      requested.value_or(std::max<std::uint64_t>(1, static_cast<std::uint64_t>(largest)));
  if (u < 1) throw DomainError("universe bound must be >= 1");
  if (static_cast<std::uint64_t>(largest) > u) {
    throw DomainError("value " + std::to_string(largest) +
                      " exceeds universe bound " + std::to_string(u));
  }
  return u;
}

inline std::uint64_t known_c_fp_cap(std::uint64_t n, std::uint64_t d,
                                    std::uint64_t prime_count) {
  const unsigned __int128 num = static_cast<unsigned __int128>(n) * n * n * d;
  const unsigned __int128 q = (num + prime_count - 1) / prime_count;
  return static_cast<std::uint64_t>(2 * q);
}

// Builds F for prime p, giving up as soon as it grows past `cap`.
inline bool collect_false_positives(const KnownCState& s, std::uint64_t p,
                                    std::uint64_t cap, FalsePositiveList& values,
                                    std::vector<OrdinalTriple>& ordinals) {
  values.clear();
  ordinals.clear();
  // Length-p array of lists of C, as compressed rows.
  std::vector<std::uint32_t> start(p + 1, 0);
  for (Value z : s.c) ++start[static_cast<std::uint64_t>(z) % p + 1];
  for (std::uint64_t i = 0; i < p; ++i) start[i + 1] += start[i];
  std::vector<std::uint32_t> bucket(s.c.size());
  {
    std::vector<std::uint32_t> cursor(start.begin(), start.end() - 1);
    for (std::uint32_t k = 0; k < s.c.size(); ++k) {
      bucket[cursor[static_cast<std::uint64_t>(s.c[k]) % p]++] = k;
    }
  }
  for (std::uint32_t i = 0; i < s.a.size(); ++i) {
    for (std::uint32_t j = 0; j < s.b.size(); ++j) {
      const Value sum = s.a[i] + s.b[j];
      const std::uint64_t r = static_cast<std::uint64_t>(sum) % p;
      for (std::uint32_t q = start[r]; q < start[r + 1]; ++q) {
        const std::uint32_t k = bucket[q];
        if (s.c[k] == sum) continue;
        if (values.size() == cap) return false;
        values.push_back({s.a[i], s.b[j], s.c[k]});
        ordinals.push_back({i, j, k});
      }
    }
  }
  return true;
}

}  // namespace detail

inline KnownCState preprocess_known_c(IntegerSet a, IntegerSet b, IntegerSet c,
                                      std::uint64_t rng_seed,
                                      const KnownCOptions& opt = {}) {
  KnownCState s;
  s.universe = detail::resolve_universe(opt.universe, {&a, &b, &c});
  s.n = std::max({a.size(), b.size(), c.size()});
  if (s.n == 0) throw DomainError("preprocess_known_c: all sets are empty");
  s.a = std::move(a);
  s.b = std::move(b);
  s.c = std::move(c);
  s.seed = rng_seed;

  s.range_lo = std::max<std::uint64_t>(2, ceil_pow_three_halves(s.n));
  const PrimeRange range = primes_in_range(s.range_lo, 2 * s.range_lo);
  if (range.empty()) throw InvariantError("no prime in sampling range");
  s.prime_count = range.size();
  s.divisor_budget = divisor_budget(s.universe, s.range_lo).d;
  s.fp_cap = opt.fp_cap.value_or(
      detail::known_c_fp_cap(s.n, s.divisor_budget, s.prime_count));

  if (opt.force_prime) {
    if (!is_prime(*opt.force_prime)) {
      throw DomainError("forced modulus " + std::to_string(*opt.force_prime) +
                        " is not prime");
    }
    s.p = *opt.force_prime;
    if (!detail::collect_false_positives(s, s.p, s.fp_cap, s.false_positives,
                                         s.fp_ordinals)) {
      throw ResourceError("forced prime " + std::to_string(s.p) +
                          " yields more than fp_cap=" + std::to_string(s.fp_cap) +
                          " false positives");
    }
    return s;
  }

  for (int attempt = 0; attempt < opt.max_attempts; ++attempt) {
    s.p = sample_prime(range, mix_seed(rng_seed, static_cast<std::uint64_t>(attempt)));
    if (detail::collect_false_positives(s, s.p, s.fp_cap, s.false_positives,
                                        s.fp_ordinals)) {
      return s;
    }
    ++s.restarts;
  }
  throw ResourceError("preprocess_known_c: " + std::to_string(opt.max_attempts) +
                      " primes in a row exceeded fp_cap=" + std::to_string(s.fp_cap));
}

/// For each distinct c in `cq`, the number of pairs of A' x B' summing to c.
/// A', B' and C' must be subsets of the preprocessed A, B and C.
inline QueryAnswer query_known_c(const KnownCState& s, const IntegerSet& aq,
                                 const IntegerSet& bq, std::span<const Value> cq,
                                 WorkCounters* work = nullptr) {
  const auto in_a = ordinal_mask(s.a, aq, "A'", "A");
  const auto in_b = ordinal_mask(s.b, bq, "B'", "B");
  const auto targets = distinct_in_order(cq);
  std::vector<char> in_c(s.c.size(), 0);
  std::vector<std::uint32_t> target_ord;
  target_ord.reserve(targets.size());
  for (Value z : targets) {
    auto ord = z < 0 ? std::nullopt : s.c.ordinal(z);
    if (!ord) {
      throw DomainError("element " + std::to_string(z) + " of C' is not in C");
    }
    in_c[*ord] = 1;
    target_ord.push_back(static_cast<std::uint32_t>(*ord));
  }

  const MultiplicityVector mult = modular_sumset_multiplicities(aq, bq, s.p);
  std::vector<std::uint64_t> h(s.c.size(), 0);
  for (std::size_t t = 0; t < targets.size(); ++t) h[target_ord[t]] = mult.at(targets[t]);

  for (const auto& f : s.fp_ordinals) {
    if (in_a[f.a] && in_b[f.b] && in_c[f.c]) {
      if (h[f.c] == 0) {
        throw InvariantError("false positive subtraction went negative at c=" +
                             std::to_string(s.c[f.c]));
      }
      --h[f.c];
    }
  }

  if (work) {
    work->convolution_length += s.p;
    work->fp_scan_length += s.fp_ordinals.size();
  }

  QueryAnswer out;
  out.entries.reserve(targets.size());
  for (std::size_t t = 0; t < targets.size(); ++t) {
    const std::uint64_t k = h[target_ord[t]];
    out.entries.push_back({targets[t], k > 0, k});
  }
  return out;
}

inline QueryAnswer query_known_c(const KnownCState& s, const IntegerSet& aq,
                                 const IntegerSet& bq, const IntegerSet& cq,
                                 WorkCounters* work = nullptr) {
  return query_known_c(s, aq, bq, cq.values(), work);
}

}  // namespace threesum
