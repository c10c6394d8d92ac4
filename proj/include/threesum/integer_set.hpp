#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "threesum/errors.hpp"

namespace threesum {

using Value = std::int64_t;

/// Sorted, deduplicated set of nonnegative integers.
///
/// The position of a value in the sorted order is its *ordinal*; engines use
/// ordinals assigned at preprocessing time to test subset membership with a
/// flat bitmask instead of hashing.
class IntegerSet {
 public:
  IntegerSet() = default;

  explicit IntegerSet(std::vector<Value> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
    if (!values_.empty() && values_.front() < 0) {
      throw DomainError("IntegerSet: negative value " +
                        std::to_string(values_.front()));
    }
  }

  IntegerSet(std::initializer_list<Value> values)
      : IntegerSet(std::vector<Value>(values)) {}

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  Value operator[](std::size_t i) const { return values_[i]; }
  Value max() const { return values_.empty() ? 0 : values_.back(); }

  std::span<const Value> values() const noexcept { return values_; }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  std::optional<std::size_t> ordinal(Value x) const {
    auto it = std::lower_bound(values_.begin(), values_.end(), x);
    if (it == values_.end() || *it != x) return std::nullopt;
    return static_cast<std::size_t>(it - values_.begin());
  }

  bool contains(Value x) const { return ordinal(x).has_value(); }

  friend bool operator==(const IntegerSet&, const IntegerSet&) = default;

 private:
  std::vector<Value> values_;
};

/// Distinct values of `xs` in order of first occurrence.
inline std::vector<Value> distinct_in_order(std::span<const Value> xs) {
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return xs[i] < xs[j]; });
  std::vector<char> keep(xs.size(), 0);
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k == 0 || xs[order[k]] != xs[order[k - 1]]) keep[order[k]] = 1;
  }
  std::vector<Value> out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (keep[i]) out.push_back(xs[i]);
  }
  return out;
}

/// Marks the preprocessing ordinals of `subset` inside `universe`.
/// `name` labels the subset in the error message ("A'", "B'", ...).
inline std::vector<char> ordinal_mask(const IntegerSet& universe,
                                      const IntegerSet& subset,
                                      const std::string& name,
                                      const std::string& universe_name) {
  std::vector<char> mask(universe.size(), 0);
  for (Value x : subset) {
    auto ord = universe.ordinal(x);
    if (!ord) {
      throw DomainError("element " + std::to_string(x) + " of " + name +
                        " is not in " + universe_name);
    }
    mask[*ord] = 1;
  }
  return mask;
}

inline Value floor_mod(Value x, Value m) {
  Value r = x % m;
  return r < 0 ? r + m : r;
}

/// Smallest r with r*r >= n.
inline std::uint64_t ceil_sqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<unsigned __int128>(r) * r >= n) --r;
  while (static_cast<unsigned __int128>(r) * r < n) ++r;
  return r;
}

/// Smallest r with r*r >= n^3, i.e. the ceiling of n^1.5.
inline std::uint64_t ceil_pow_three_halves(std::uint64_t n) {
  return ceil_sqrt(n * n * n);
}

}  // namespace threesum
