#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "threesum/errors.hpp"
#include "threesum/integer_set.hpp"

namespace threesum {

/// Pair of preprocessing ordinals (index into A, index into B).
struct OrdinalPair {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  friend bool operator==(const OrdinalPair&, const OrdinalPair&) = default;
};

/// W_x for every x in A + B, stored contiguously and grouped by x.
///
/// keys() is ascending; the witnesses of keys()[k] are
/// pairs()[offsets[k] .. offsets[k+1]). Lookup of x is a binary search, so
/// the table doubles as the ordered dictionary used for the c in A + B test.
class WitnessTable {
 public:
  WitnessTable() = default;

  static std::uint64_t estimated_bytes(std::size_t na, std::size_t nb) {
    // Build-time peak: one (sum, pair) record per pair plus the final arrays.
    return static_cast<std::uint64_t>(na) * nb *
           (sizeof(Value) + 2 * sizeof(OrdinalPair) + sizeof(std::uint32_t));
  }

  static WitnessTable build(const IntegerSet& a, const IntegerSet& b,
                            std::uint64_t memory_budget) {
    const std::uint64_t need = estimated_bytes(a.size(), b.size());
    if (need > memory_budget) {
      throw ResourceError("witness table needs ~" + std::to_string(need) +
                          " bytes, budget is " + std::to_string(memory_budget));
    }
    struct Rec {
      Value sum;
      OrdinalPair pair;
    };
    std::vector<Rec> recs;
    recs.reserve(a.size() * b.size());
    for (std::uint32_t i = 0; i < a.size(); ++i) {
      for (std::uint32_t j = 0; j < b.size(); ++j) {
        recs.push_back({a[i] + b[j], {i, j}});
      }
    }
    std::sort(recs.begin(), recs.end(), [](const Rec& x, const Rec& y) {
      if (x.sum != y.sum) return x.sum < y.sum;
      if (x.pair.a != y.pair.a) return x.pair.a < y.pair.a;
      return x.pair.b < y.pair.b;
    });

    WitnessTable t;
    t.pairs_.reserve(recs.size());
    for (std::size_t i = 0; i < recs.size(); ++i) {
      if (i == 0 || recs[i].sum != recs[i - 1].sum) {
        t.keys_.push_back(recs[i].sum);
        t.offsets_.push_back(static_cast<std::uint32_t>(i));
      }
      t.pairs_.push_back(recs[i].pair);
    }
    t.offsets_.push_back(static_cast<std::uint32_t>(recs.size()));
    return t;
  }

  std::size_t key_count() const noexcept { return keys_.size(); }
  std::uint64_t total_pairs() const noexcept { return pairs_.size(); }
  std::span<const Value> keys() const noexcept { return keys_; }
  Value key(std::size_t k) const { return keys_[k]; }

  std::optional<std::size_t> find(Value x) const {
    auto it = std::lower_bound(keys_.begin(), keys_.end(), x);
    if (it == keys_.end() || *it != x) return std::nullopt;
    return static_cast<std::size_t>(it - keys_.begin());
  }

  std::span<const OrdinalPair> witnesses(std::size_t k) const {
    return std::span<const OrdinalPair>(pairs_).subspan(
        offsets_[k], offsets_[k + 1] - offsets_[k]);
  }
  std::uint64_t witness_count(std::size_t k) const {
    return offsets_[k + 1] - offsets_[k];
  }

  /// |W_k intersected with A' x B'| given ordinal masks of A' and B'.
  std::uint64_t count_present(std::size_t k, const std::vector<char>& in_a,
                              const std::vector<char>& in_b) const {
    std::uint64_t n = 0;
    for (const auto& w : witnesses(k)) n += (in_a[w.a] && in_b[w.b]) ? 1 : 0;
    return n;
  }

 private:
  std::vector<Value> keys_;
  std::vector<std::uint32_t> offsets_;
  std::vector<OrdinalPair> pairs_;
};

/// For each residue i mod m, the indices (into WitnessTable::keys) of the
/// sumset elements congruent to i, ascending.
class RemainderLists {
 public:
  RemainderLists() = default;

  static RemainderLists build(const WitnessTable& table, std::uint64_t m) {
    RemainderLists r;
    r.m_ = m;
    r.offsets_.assign(m + 1, 0);
    for (Value x : table.keys()) ++r.offsets_[static_cast<std::uint64_t>(x) % m + 1];
    for (std::uint64_t i = 0; i < m; ++i) r.offsets_[i + 1] += r.offsets_[i];
    r.items_.resize(table.key_count());
    std::vector<std::uint32_t> cursor(r.offsets_.begin(), r.offsets_.end() - 1);
    for (std::uint32_t k = 0; k < table.key_count(); ++k) {
      r.items_[cursor[static_cast<std::uint64_t>(table.key(k)) % m]++] = k;
    }
    return r;
  }

  std::uint64_t modulus() const noexcept { return m_; }
  std::span<const std::uint32_t> list(std::uint64_t residue) const {
    return std::span<const std::uint32_t>(items_).subspan(
        offsets_[residue], offsets_[residue + 1] - offsets_[residue]);
  }
  std::size_t total() const noexcept { return items_.size(); }

 private:
  std::uint64_t m_ = 0;
  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint32_t> items_;
};

/// Per-target scan shared by the unknown-C engines: the number of pairs of
/// A' x B' congruent to c mod m, minus the false positives found by walking
/// L_{c mod m}. `scanned` receives the witness mass visited.
inline std::uint64_t count_via_remainders(const WitnessTable& table,
                                          const RemainderLists& lists,
                                          std::size_t key_index,
                                          std::uint64_t congruent,
                                          const std::vector<char>& in_a,
                                          const std::vector<char>& in_b,
                                          std::uint64_t& scanned) {
  const Value c = table.key(key_index);
  std::uint64_t false_positives = 0;
  for (std::uint32_t k : lists.list(static_cast<std::uint64_t>(c) % lists.modulus())) {
    if (k == key_index) continue;
    scanned += table.witness_count(k);
    false_positives += table.count_present(k, in_a, in_b);
  }
  if (false_positives > congruent) {
    throw InvariantError("negative solution count for c=" + std::to_string(c));
  }
  return congruent - false_positives;
}

}  // namespace threesum
