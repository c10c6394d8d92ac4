#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "threesum/errors.hpp"

namespace threesum {

/// All primes in [lo, hi), ascending.
struct PrimeRange {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::vector<std::uint64_t> primes;

  bool empty() const noexcept { return primes.empty(); }
  std::size_t size() const noexcept { return primes.size(); }
  bool contains(std::uint64_t p) const {
    return std::binary_search(primes.begin(), primes.end(), p);
  }
};

/// Number of primes >= r that can divide a nonzero integer of magnitude at
/// most 2U: the largest D with r^D <= 2U.
struct DivisorBudget {
  std::uint64_t universe = 0;
  std::uint64_t r = 0;
  std::uint64_t d = 0;
};

struct SieveOptions {
  std::uint64_t segment = std::uint64_t{1} << 22;
  // Upper limit on hi - lo; a flat list of primes this wide is the memory cost.
  std::uint64_t max_span = std::uint64_t{1} << 32;
};

inline bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t d = 2; d * d <= x; ++d) {
    if (x % d == 0) return false;
  }
  return true;
}

/// Segmented sieve of Eratosthenes over [lo, hi).
inline PrimeRange primes_in_range(std::uint64_t lo, std::uint64_t hi,
                                  const SieveOptions& opt = {}) {
  if (lo < 2 || lo >= hi) {
    throw DomainError("primes_in_range: need 2 <= lo < hi, got [" +
                      std::to_string(lo) + ", " + std::to_string(hi) + ")");
  }
  if (hi - lo > opt.max_span) {
    throw ResourceError("primes_in_range: span " + std::to_string(hi - lo) +
                        " exceeds sieve budget " + std::to_string(opt.max_span));
  }

  std::uint64_t root = 1;
  while ((root + 1) * (root + 1) < hi) ++root;
  std::vector<char> small(root + 1, 1);
  std::vector<std::uint64_t> base;
  for (std::uint64_t i = 2; i <= root; ++i) {
    if (!small[i]) continue;
    base.push_back(i);
    for (std::uint64_t j = i * i; j <= root; j += i) small[j] = 0;
  }

  PrimeRange out{lo, hi, {}};
  const std::uint64_t seg = std::max<std::uint64_t>(opt.segment, 1);
  std::vector<char> mark;
  for (std::uint64_t start = lo; start < hi; start += seg) {
    const std::uint64_t stop = std::min(hi, start + seg);
    mark.assign(stop - start, 1);
    for (std::uint64_t p : base) {
      if (p * p >= stop) break;
      std::uint64_t first = std::max(p * p, (start + p - 1) / p * p);
      for (std::uint64_t j = first; j < stop; j += p) mark[j - start] = 0;
    }
    for (std::uint64_t i = 0; i < mark.size(); ++i) {
      if (mark[i]) out.primes.push_back(start + i);
    }
  }
  return out;
}

/// Uniform draw from `range.primes`, deterministic in `rng_seed`.
inline std::uint64_t sample_prime(const PrimeRange& range,
                                  std::uint64_t rng_seed) {
  if (range.empty()) {
    throw InvariantError("sample_prime: empty prime range [" +
                         std::to_string(range.lo) + ", " +
                         std::to_string(range.hi) + ")");
  }
  std::mt19937_64 rng(rng_seed);
  std::uniform_int_distribution<std::size_t> pick(0, range.size() - 1);
  return range.primes[pick(rng)];
}

inline DivisorBudget divisor_budget(std::uint64_t universe, std::uint64_t r) {
  if (r < 2 || universe < 1) {
    throw DomainError("divisor_budget: need r >= 2 and U >= 1");
  }
  const unsigned __int128 limit = static_cast<unsigned __int128>(universe) * 2;
  unsigned __int128 power = r;
  std::uint64_t d = 0;
  while (power <= limit) {
    ++d;
    power *= r;
  }
  return {universe, r, d};
}

/// splitmix64 step; derives independent seeds for successive restarts.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace threesum
