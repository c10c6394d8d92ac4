#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace threesum::ntt {

template <std::uint32_t Mod>
constexpr std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  base %= Mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % Mod;
    base = base * base % Mod;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// NTT-friendly primes: Mod = k * 2^s + 1 with primitive root 3.
struct Prime0 {
  static constexpr std::uint32_t mod = 998244353;  // 119 * 2^23 + 1
  static constexpr std::uint32_t root = 3;
  static constexpr int max_log = 23;
};
struct Prime1 {
  static constexpr std::uint32_t mod = 167772161;  // 5 * 2^25 + 1
  static constexpr std::uint32_t root = 3;
  static constexpr int max_log = 25;
};
struct Prime2 {
  static constexpr std::uint32_t mod = 469762049;  // 7 * 2^26 + 1
  static constexpr std::uint32_t root = 3;
  static constexpr int max_log = 26;
};

/// In-place iterative radix-2 transform; a.size() must be a power of two.
template <typename P>
void transform(std::span<std::uint32_t> a, bool inverse) {
  constexpr std::uint32_t mod = P::mod;
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  std::vector<std::uint32_t> w(n / 2 + 1);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    std::uint32_t step = pow_mod<mod>(P::root, (mod - 1) / len);
    if (inverse) step = pow_mod<mod>(step, mod - 2);
    const std::size_t half = len / 2;
    w[0] = 1;
    for (std::size_t k = 1; k < half; ++k) {
      w[k] = static_cast<std::uint32_t>(std::uint64_t{w[k - 1]} * step % mod);
    }
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < half; ++k) {
        std::uint32_t u = a[i + k];
        std::uint32_t v =
            static_cast<std::uint32_t>(std::uint64_t{a[i + k + half]} * w[k] % mod);
        std::uint32_t s = u + v;
        a[i + k] = s >= mod ? s - mod : s;
        a[i + k + half] = u >= v ? u - v : u + mod - v;
      }
    }
  }
  if (inverse) {
    const std::uint64_t inv_n = pow_mod<mod>(n, mod - 2);
    for (auto& x : a) x = static_cast<std::uint32_t>(x * inv_n % mod);
  }
}

/// Cyclic-free product of two coefficient vectors modulo P::mod.
template <typename P>
std::vector<std::uint32_t> multiply(std::span<const std::uint64_t> f,
                                    std::span<const std::uint64_t> g) {
  const std::size_t out_len = f.size() + g.size() - 1;
  const std::size_t n = std::bit_ceil(out_len);
  std::vector<std::uint32_t> fa(n, 0), ga(n, 0);
  for (std::size_t i = 0; i < f.size(); ++i) fa[i] = f[i] % P::mod;
  for (std::size_t i = 0; i < g.size(); ++i) ga[i] = g[i] % P::mod;
  transform<P>(fa, false);
  transform<P>(ga, false);
  for (std::size_t i = 0; i < n; ++i) {
    fa[i] = static_cast<std::uint32_t>(std::uint64_t{fa[i]} * ga[i] % P::mod);
  }
  transform<P>(fa, true);
  fa.resize(out_len);
  return fa;
}

}  // namespace threesum::ntt
