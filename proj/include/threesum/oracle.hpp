#pragma once

// Brute-force reference implementations. Nothing in here is shared with the
// engines: pair loops, membership structures and target deduplication are
// written independently so that a bug in one path cannot hide in the other.

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "threesum/errors.hpp"
#include "threesum/integer_set.hpp"
#include "threesum/types.hpp"

namespace threesum::oracle {

inline QueryAnswer brute_force_all_numbers(const IntegerSet& aq,
                                           const IntegerSet& bq,
                                           std::span<const Value> cq) {
  std::map<Value, std::uint64_t> count;
  std::vector<Value> order;
  for (Value c : cq) {
    if (count.emplace(c, 0).second) order.push_back(c);
  }
  for (Value a : aq) {
    for (Value b : bq) {
      auto it = count.find(a + b);
      if (it != count.end()) ++it->second;
    }
  }
  QueryAnswer out;
  out.entries.reserve(order.size());
  for (Value c : order) {
    const std::uint64_t k = count.at(c);
    out.entries.push_back({c, k > 0, k});
  }
  return out;
}

inline QueryAnswer brute_force_all_numbers(const IntegerSet& aq,
                                           const IntegerSet& bq,
                                           const IntegerSet& cq) {
  return brute_force_all_numbers(aq, bq, cq.values());
}

/// All (a, b, c) in A x B x C with a + b == c (mod m) and a + b != c, sorted.
inline FalsePositiveList enumerate_false_positives(const IntegerSet& a,
                                                   const IntegerSet& b,
                                                   const IntegerSet& c,
                                                   std::uint64_t m) {
  if (m == 0) throw DomainError("enumerate_false_positives: m must be >= 1");
  const Value mod = static_cast<Value>(m);
  std::map<Value, std::vector<Value>> buckets;
  for (Value z : c) buckets[z % mod].push_back(z);

  FalsePositiveList out;
  for (Value x : a) {
    for (Value y : b) {
      auto it = buckets.find((x + y) % mod);
      if (it == buckets.end()) continue;
      for (Value z : it->second) {
        if (z != x + y) out.push_back({x, y, z});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// #{(a, b, c) in T : p divides a + b - c}.
inline std::uint64_t count_divisible(std::span<const Triple> triples,
                                     std::uint64_t p) {
  std::uint64_t k = 0;
  for (const auto& t : triples) {
    if ((t.a + t.b - t.c) % static_cast<Value>(p) == 0) ++k;
  }
  return k;
}

}  // namespace threesum::oracle
