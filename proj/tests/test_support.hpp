#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "threesum/integer_set.hpp"

namespace threesum::support {

inline IntegerSet random_set(std::mt19937_64& rng, std::size_t n, Value max_value) {
  std::set<Value> s;
  std::uniform_int_distribution<Value> d(0, max_value);
  while (s.size() < n && s.size() < static_cast<std::size_t>(max_value + 1)) s.insert(d(rng));
  return IntegerSet(std::vector<Value>(s.begin(), s.end()));
}

inline IntegerSet random_subset(std::mt19937_64& rng, const IntegerSet& s) {
  std::bernoulli_distribution coin(0.5);
  std::vector<Value> out;
  for (Value v : s) {
    if (coin(rng)) out.push_back(v);
  }
  return IntegerSet(std::move(out));
}

// Direct pair counting; shares nothing with the transform path.
inline std::vector<std::uint64_t> pair_counts_mod(const IntegerSet& a, const IntegerSet& b,
                                                  std::uint64_t m) {
  std::vector<std::uint64_t> v(m, 0);
  for (Value x : a) {
    for (Value y : b) ++v[static_cast<std::uint64_t>(x + y) % m];
  }
  return v;
}

inline bool trial_division_prime(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t d = 2; d < x; ++d) {
    if (d * d > x) break;
    if (x % d == 0) return false;
  }
  return true;
}

}  // namespace threesum::support
