#pragma once

// Versioned binary state files.
//
//   magic "3SUMSTAT" | u32 version | u8 kind | payload
//
// All integers little-endian. Sets are u64 count followed by i64 values.
//   kind 1 known-c:         n U seed range_lo prime_count D fp_cap p restarts,
//                           A B C, u64 |F|, |F| x (u32 a, u32 b, u32 c) ordinals
//   kind 2 unknown-c-rand:  U seed m, A B   (witness table rebuilt on load)
//   kind 3 unknown-c-det:   U, A B, u64 |M|, moduli, u64 #heavy,
//                           #heavy x (i64 x, u32 modulus index, u64 fp, u64 bound)
//   kind 4 unknown-c-det compact: U, A B   (plan recomputed on load)

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include "threesum/errors.hpp"
#include "threesum/harness/engine.hpp"
#include "threesum/harness/instance.hpp"

namespace threesum::harness {

inline constexpr char kStateMagic[8] = {'3', 'S', 'U', 'M', 'S', 'T', 'A', 'T'};
inline constexpr std::uint32_t kStateVersion = 1;

enum class StateKind : std::uint8_t {
  known_c = 1,
  unknown_c_rand = 2,
  unknown_c_det = 3,
  unknown_c_det_compact = 4,
};

namespace detail {

class ByteWriter {
 public:
  void raw(const void* p, std::size_t n) {
    const auto* b = static_cast<const std::uint8_t*>(p);
    bytes_.insert(bytes_.end(), b, b + n);
  }
  template <typename T>
  void put(T v) {
    static_assert(std::is_integral_v<T>);
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      bytes_.push_back(static_cast<std::uint8_t>(static_cast<std::uint64_t>(v) >> (8 * i)));
    }
  }
  void set(const IntegerSet& s) {
    put<std::uint64_t>(s.size());
    for (Value v : s) put<std::int64_t>(v);
  }
  std::vector<std::uint8_t> take() { return std::move(bytes_); }

 private:
  std::vector<std::uint8_t> bytes_;
};

class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> b) : b_(b) {}
  template <typename T>
  T get() {
    need(sizeof(T));
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) v |= std::uint64_t{b_[pos_ + i]} << (8 * i);
    pos_ += sizeof(T);
    return static_cast<T>(v);
  }
  void raw(void* p, std::size_t n) {
    need(n);
    std::memcpy(p, b_.data() + pos_, n);
    pos_ += n;
  }
  IntegerSet set() {
    const auto count = get<std::uint64_t>();
    if (count > (std::uint64_t{1} << 40)) throw ParseError("state file: absurd set size");
    need(count * 8);
    std::vector<Value> v(count);
    for (auto& x : v) x = get<std::int64_t>();
    if (!std::is_sorted(v.begin(), v.end()) ||
        std::adjacent_find(v.begin(), v.end()) != v.end()) {
      throw ParseError("state file: set is not sorted and distinct");
    }
    return IntegerSet(std::move(v));
  }
  bool done() const { return pos_ == b_.size(); }

 private:
  void need(std::uint64_t n) const {
    if (n > b_.size() - pos_) throw ParseError("state file: truncated");
  }
  std::span<const std::uint8_t> b_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Serializes a state. `compact` applies to unknown-c-det only and stores
/// just the inputs; loading replays the deterministic preprocessing.
inline std::vector<std::uint8_t> serialize_state(const EngineState& state, bool compact = false) {
  detail::ByteWriter w;
  w.raw(kStateMagic, sizeof kStateMagic);
  w.put<std::uint32_t>(kStateVersion);
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, KnownCState>) {
          w.put<std::uint8_t>(static_cast<std::uint8_t>(StateKind::known_c));
          for (std::uint64_t v : {s.n, s.universe, s.seed, s.range_lo, s.prime_count,
                                  s.divisor_budget, s.fp_cap, s.p, s.restarts}) {
            w.put<std::uint64_t>(v);
          }
          w.set(s.a);
          w.set(s.b);
          w.set(s.c);
          w.put<std::uint64_t>(s.fp_ordinals.size());
          for (const auto& f : s.fp_ordinals) {
            w.put<std::uint32_t>(f.a);
            w.put<std::uint32_t>(f.b);
            w.put<std::uint32_t>(f.c);
          }
        } else if constexpr (std::is_same_v<T, UnknownCRandState>) {
          w.put<std::uint8_t>(static_cast<std::uint8_t>(StateKind::unknown_c_rand));
          w.put<std::uint64_t>(s.universe);
          w.put<std::uint64_t>(s.seed);
          w.put<std::uint64_t>(s.m);
          w.set(s.a);
          w.set(s.b);
        } else {
          w.put<std::uint8_t>(static_cast<std::uint8_t>(
              compact ? StateKind::unknown_c_det_compact : StateKind::unknown_c_det));
          w.put<std::uint64_t>(s.universe);
          w.set(s.a);
          w.set(s.b);
          if (compact) return;
          w.put<std::uint64_t>(s.plan.moduli.size());
          for (std::uint64_t m : s.plan.moduli) w.put<std::uint64_t>(m);
          w.put<std::uint64_t>(s.classification.heavy.size());
          for (std::uint32_t k : s.classification.heavy) {
            w.put<std::int64_t>(s.witnesses.key(k));
            w.put<std::uint32_t>(static_cast<std::uint32_t>(s.plan.assignment[k]));
            w.put<std::uint64_t>(s.plan.fp[k]);
            w.put<std::uint64_t>(s.plan.bound[k]);
          }
        }
      },
      state);
  return w.take();
}

inline EngineState deserialize_state(std::span<const std::uint8_t> bytes,
                                     std::uint64_t memory_budget = std::uint64_t{4} << 30) {
  detail::ByteReader r(bytes);
  char magic[8];
  r.raw(magic, sizeof magic);
  if (std::memcmp(magic, kStateMagic, sizeof magic) != 0) {
    throw ParseError("state file: bad magic");
  }
  if (const auto v = r.get<std::uint32_t>(); v != kStateVersion) {
    throw ParseError("state file: unsupported version " + std::to_string(v));
  }
  const auto kind = static_cast<StateKind>(r.get<std::uint8_t>());

  EngineState out;
  switch (kind) {
    case StateKind::known_c: {
      KnownCState s;
      s.n = r.get<std::uint64_t>();
      s.universe = r.get<std::uint64_t>();
      s.seed = r.get<std::uint64_t>();
      s.range_lo = r.get<std::uint64_t>();
      s.prime_count = r.get<std::uint64_t>();
      s.divisor_budget = r.get<std::uint64_t>();
      s.fp_cap = r.get<std::uint64_t>();
      s.p = r.get<std::uint64_t>();
      s.restarts = r.get<std::uint64_t>();
      s.a = r.set();
      s.b = r.set();
      s.c = r.set();
      const auto count = r.get<std::uint64_t>();
      if (count > s.fp_cap || s.p == 0) throw ParseError("state file: bad false-positive list");
      for (std::uint64_t i = 0; i < count; ++i) {
        OrdinalTriple t{r.get<std::uint32_t>(), r.get<std::uint32_t>(), r.get<std::uint32_t>()};
        if (t.a >= s.a.size() || t.b >= s.b.size() || t.c >= s.c.size()) {
          throw ParseError("state file: ordinal out of range");
        }
        const Triple v{s.a[t.a], s.b[t.b], s.c[t.c]};
        const auto p = static_cast<Value>(s.p);
        if (v.a + v.b == v.c || (v.a + v.b - v.c) % p != 0) {
          throw ParseError("state file: stored triple is not a false positive");
        }
        s.fp_ordinals.push_back(t);
        s.false_positives.push_back(v);
      }
      out = std::move(s);
      break;
    }
    case StateKind::unknown_c_rand: {
      const auto universe = r.get<std::uint64_t>();
      const auto seed = r.get<std::uint64_t>();
      const auto m = r.get<std::uint64_t>();
      IntegerSet a = r.set();
      IntegerSet b = r.set();
      UnknownCRandOptions o;
      o.universe = universe;
      o.force_prime = m;
      o.memory_budget = memory_budget;
      out = preprocess_unknown_c_rand(std::move(a), std::move(b), seed, o);
      break;
    }
    case StateKind::unknown_c_det:
    case StateKind::unknown_c_det_compact: {
      const auto universe = r.get<std::uint64_t>();
      IntegerSet a = r.set();
      IntegerSet b = r.set();
      if (kind == StateKind::unknown_c_det_compact) {
        UnknownCDetOptions o;
        o.universe = universe;
        o.memory_budget = memory_budget;
        out = preprocess_unknown_c_det(std::move(a), std::move(b), o);
        break;
      }
      UnknownCDetState s;
      s.universe = threesum::detail::resolve_universe(universe, {&a, &b});
      s.n = std::max(a.size(), b.size());
      s.a = std::move(a);
      s.b = std::move(b);
      s.witnesses = WitnessTable::build(s.a, s.b, memory_budget);
      s.classification = threesum::detail::classify(s.witnesses, s.n);
      const auto moduli = r.get<std::uint64_t>();
      for (std::uint64_t i = 0; i < moduli; ++i) s.plan.moduli.push_back(r.get<std::uint64_t>());
      const auto heavy = r.get<std::uint64_t>();
      if (heavy != s.classification.heavy.size()) {
        throw ParseError("state file: heavy set does not match A and B");
      }
      const auto keys = s.witnesses.key_count();
      s.plan.assignment.assign(keys, -1);
      s.plan.fp.assign(keys, 0);
      s.plan.bound.assign(keys, 0);
      for (std::uint64_t i = 0; i < heavy; ++i) {
        const auto x = r.get<std::int64_t>();
        const auto idx = r.get<std::uint32_t>();
        const auto fp = r.get<std::uint64_t>();
        const auto bound = r.get<std::uint64_t>();
        const std::uint32_t k = s.classification.heavy[i];
        if (s.witnesses.key(k) != x || idx >= s.plan.moduli.size()) {
          throw ParseError("state file: bad heavy assignment for x=" + std::to_string(x));
        }
        s.plan.assignment[k] = static_cast<std::int32_t>(idx);
        s.plan.fp[k] = fp;
        s.plan.bound[k] = bound;
      }
      threesum::detail::build_remainders(s);
      out = std::move(s);
      break;
    }
    default:
      throw ParseError("state file: unknown kind " + std::to_string(static_cast<int>(kind)));
  }
  if (!r.done()) throw ParseError("state file: trailing bytes");
  return out;
}

inline void write_state_file(const std::filesystem::path& path, const EngineState& state,
                             bool compact = false) {
  const auto bytes = serialize_state(state, compact);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

inline EngineState read_state_file(const std::filesystem::path& path,
                                   std::uint64_t memory_budget = std::uint64_t{4} << 30) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return deserialize_state(bytes, memory_budget);
}

}  // namespace threesum::harness
