#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "threesum/engine_known_c.hpp"
#include "threesum/engine_unknown_c_det.hpp"
#include "threesum/engine_unknown_c_rand.hpp"
#include "threesum/errors.hpp"
#include "threesum/harness/instance.hpp"

namespace threesum::harness {

enum class Algo { known_c, unknown_c_rand, unknown_c_det };

inline std::string to_string(Algo a) {
  switch (a) {
    case Algo::known_c: return "known-c";
    case Algo::unknown_c_rand: return "unknown-c-rand";
    case Algo::unknown_c_det: return "unknown-c-det";
  }
  return "?";
}

inline Algo parse_algo(const std::string& s) {
  if (s == "known-c") return Algo::known_c;
  if (s == "unknown-c-rand") return Algo::unknown_c_rand;
  if (s == "unknown-c-det") return Algo::unknown_c_det;
  throw DomainError("unknown algorithm '" + s + "'");
}

inline bool knows_c(Algo a) { return a == Algo::known_c; }

using EngineState = std::variant<KnownCState, UnknownCRandState, UnknownCDetState>;

struct PreprocessConfig {
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> universe;
  std::optional<std::uint64_t> force_modulus;
  std::uint64_t memory_budget = std::uint64_t{4} << 30;
};

inline Algo algo_of(const EngineState& s) {
  return static_cast<Algo>(s.index());
}

inline EngineState preprocess(Algo algo, const Instance& inst, const PreprocessConfig& cfg) {
  switch (algo) {
    case Algo::known_c: {
      if (!inst.c) throw DomainError("known-c needs C (C.txt) at preprocessing time");
      KnownCOptions o;
      o.universe = cfg.universe;
      o.force_prime = cfg.force_modulus;
      return preprocess_known_c(inst.a, inst.b, *inst.c, cfg.seed, o);
    }
    case Algo::unknown_c_rand: {
      UnknownCRandOptions o;
      o.universe = cfg.universe;
      o.force_prime = cfg.force_modulus;
      o.memory_budget = cfg.memory_budget;
      return preprocess_unknown_c_rand(inst.a, inst.b, cfg.seed, o);
    }
    case Algo::unknown_c_det: {
      if (cfg.force_modulus) {
        throw DomainError("unknown-c-det selects its moduli deterministically; "
                          "--force-modulus does not apply");
      }
      UnknownCDetOptions o;
      o.universe = cfg.universe;
      o.memory_budget = cfg.memory_budget;
      return preprocess_unknown_c_det(inst.a, inst.b, o);
    }
  }
  throw InvariantError("unreachable");
}

inline QueryAnswer run_query(const EngineState& state, const IntegerSet& aq,
                             const IntegerSet& bq, std::span<const Value> cq,
                             WorkCounters* work = nullptr) {
  return std::visit(
      [&](const auto& s) -> QueryAnswer {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, KnownCState>) {
          return query_known_c(s, aq, bq, cq, work);
        } else if constexpr (std::is_same_v<T, UnknownCRandState>) {
          return query_unknown_c_rand(s, aq, bq, cq, work);
        } else {
          return query_unknown_c_det(s, aq, bq, cq, work);
        }
      },
      state);
}

/// One-line human summary of a preprocessed state.
inline std::string describe(const EngineState& state) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        std::string out = "n=" + std::to_string(s.n) + " U=" + std::to_string(s.universe);
        if constexpr (std::is_same_v<T, KnownCState>) {
          out += " p=" + std::to_string(s.p) + " |F|=" + std::to_string(s.false_positives.size()) +
                 " fp_cap=" + std::to_string(s.fp_cap) + " restarts=" + std::to_string(s.restarts);
        } else if constexpr (std::is_same_v<T, UnknownCRandState>) {
          out += " m=" + std::to_string(s.m) + " |A+B|=" + std::to_string(s.witnesses.key_count());
        } else {
          out += " |A+B|=" + std::to_string(s.witnesses.key_count()) +
                 " heavy=" + std::to_string(s.classification.heavy.size()) +
                 " |M|=" + std::to_string(s.plan.moduli.size());
        }
        return out;
      },
      state);
}

}  // namespace threesum::harness
