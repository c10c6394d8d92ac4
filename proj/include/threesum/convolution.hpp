#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "threesum/errors.hpp"
#include "threesum/integer_set.hpp"
#include "threesum/ntt.hpp"

namespace threesum {

/// counts[i] = #{(a, b) in A x B : (a + b) mod m == i}.
struct MultiplicityVector {
  std::uint64_t m = 0;
  std::vector<std::uint64_t> counts;

  std::uint64_t at(Value x) const {
    return counts[static_cast<std::size_t>(floor_mod(x, static_cast<Value>(m)))];
  }
  std::uint64_t total() const {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  }
  friend bool operator==(const MultiplicityVector&,
                         const MultiplicityVector&) = default;
};

namespace detail {

inline constexpr std::uint64_t kDirectCountingBelow = 64;

inline MultiplicityVector direct_counts(const IntegerSet& a, const IntegerSet& b,
                                        std::uint64_t m) {
  MultiplicityVector out{m, std::vector<std::uint64_t>(m, 0)};
  for (Value x : a) {
    const std::uint64_t xr = static_cast<std::uint64_t>(x) % m;
    for (Value y : b) {
      std::uint64_t s = xr + static_cast<std::uint64_t>(y) % m;
      if (s >= m) s -= m;
      ++out.counts[s];
    }
  }
  return out;
}

inline std::vector<std::uint64_t> residue_histogram(const IntegerSet& s,
                                                    std::uint64_t m) {
  std::vector<std::uint64_t> h(m, 0);
  for (Value x : s) ++h[static_cast<std::uint64_t>(x) % m];
  return h;
}

// Exact linear product of two nonnegative histograms whose coefficients are
// bounded by `bound`, reconstructed by CRT over as many NTT primes as needed.
inline std::vector<std::uint64_t> exact_product(
    const std::vector<std::uint64_t>& f, const std::vector<std::uint64_t>& g,
    unsigned __int128 bound) {
  using ntt::Prime0;
  using ntt::Prime1;
  using ntt::Prime2;
  constexpr std::uint64_t m0 = Prime0::mod, m1 = Prime1::mod, m2 = Prime2::mod;

  const std::size_t out_len = f.size() + g.size() - 1;
  if (std::bit_ceil(out_len) > (std::size_t{1} << Prime0::max_log)) {
    throw ResourceError("convolution length " + std::to_string(out_len) +
                        " exceeds transform limit 2^" +
                        std::to_string(Prime0::max_log));
  }

  auto r0 = ntt::multiply<Prime0>(f, g);
  std::vector<std::uint64_t> out(out_len);
  if (bound < m0) {
    for (std::size_t i = 0; i < out_len; ++i) out[i] = r0[i];
    return out;
  }

  auto r1 = ntt::multiply<Prime1>(f, g);
  constexpr std::uint64_t inv_m0_mod_m1 = ntt::pow_mod<m1>(m0, m1 - 2);
  if (bound < static_cast<unsigned __int128>(m0) * m1) {
    for (std::size_t i = 0; i < out_len; ++i) {
      std::uint64_t t = (r1[i] + m1 - r0[i] % m1) % m1 * inv_m0_mod_m1 % m1;
      out[i] = r0[i] + m0 * t;
    }
    return out;
  }

  auto r2 = ntt::multiply<Prime2>(f, g);
  constexpr std::uint64_t inv_m0_mod_m2 = ntt::pow_mod<m2>(m0, m2 - 2);
  constexpr std::uint64_t inv_m1_mod_m2 = ntt::pow_mod<m2>(m1, m2 - 2);
  for (std::size_t i = 0; i < out_len; ++i) {
    // Garner: x = r0 + m0 * t1 + m0 * m1 * t2.
    std::uint64_t t1 = (r1[i] + m1 - r0[i] % m1) % m1 * inv_m0_mod_m1 % m1;
    std::uint64_t x01 = (r0[i] + m0 * t1) % m2;
    std::uint64_t t2 =
        (r2[i] + m2 - x01) % m2 * inv_m0_mod_m2 % m2 * inv_m1_mod_m2 % m2;
    unsigned __int128 x = static_cast<unsigned __int128>(r0[i]) +
                          static_cast<unsigned __int128>(m0) * t1 +
                          static_cast<unsigned __int128>(m0) * m1 * t2;
    if (x > bound) {
      throw InvariantError("CRT reconstruction exceeded coefficient bound");
    }
    out[i] = static_cast<std::uint64_t>(x);
  }
  return out;
}

}  // namespace detail

/// Multiplicity vector of the multiset (A + B) mod m.
///
/// Both sets are reduced to residue histograms, multiplied exactly with a
/// number-theoretic transform and the upper half of the product (degrees
/// m..2m-2) is folded back onto 0..m-2. Moduli below 64 use a direct pair
/// loop instead.
inline MultiplicityVector modular_sumset_multiplicities(const IntegerSet& a,
                                                        const IntegerSet& b,
                                                        std::uint64_t m) {
  if (m == 0) throw DomainError("modular_sumset_multiplicities: m must be >= 1");
  if (m < detail::kDirectCountingBelow || a.empty() || b.empty()) {
    return detail::direct_counts(a, b, m);
  }
  const auto f = detail::residue_histogram(a, m);
  const auto g = detail::residue_histogram(b, m);
  const unsigned __int128 bound =
      static_cast<unsigned __int128>(a.size()) * b.size();
  const auto product = detail::exact_product(f, g, bound);

  MultiplicityVector out{m, std::vector<std::uint64_t>(m, 0)};
  for (std::size_t i = 0; i < product.size(); ++i) {
    out.counts[i < m ? i : i - m] += product[i];
  }
  return out;
}

}  // namespace threesum
