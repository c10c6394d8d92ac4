#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "threesum/convolution.hpp"
#include "threesum/engine_known_c.hpp"
#include "threesum/errors.hpp"
#include "threesum/integer_set.hpp"
#include "threesum/numtheory.hpp"
#include "threesum/types.hpp"
#include "threesum/witness_table.hpp"

namespace threesum {

/// Outcome of the three-round prime minimization that picks one composite
/// modulus m3 = p1 * p2 * p3 with every p_i from [r, 2r), r = ceil(sqrt(n)).
struct ModulusSelection {
  std::uint64_t modulus = 0;
  std::array<std::uint64_t, 3> primes{};
  std::array<std::uint64_t, 4> partial{};  // m0 = 1, m1, m2, m3
  std::array<std::uint64_t, 3> mu{};       // mu(m_i) of the chosen candidates
  std::uint64_t range_lo = 0;
  std::uint64_t prime_count = 0;
  std::uint64_t divisor_budget = 0;  // D' = divisor_budget(U, r).d
  std::uint64_t convolution_length = 0;
};

/// Number of triples of A x B x X congruent modulo m, read off one
/// multiplicity vector.
inline std::uint64_t congruent_triples(const MultiplicityVector& v,
                                       const IntegerSet& x) {
  std::uint64_t mu = 0;
  for (Value t : x) mu += v.at(t);
  return mu;
}

/// Deterministically picks a modulus with few false positives on A x B x X.
///
/// Round i tries m_{i-1} * p for every prime p of the range and keeps the
/// candidate with the fewest congruent triples (smallest p on ties). The
/// true-solution count is the same for every candidate, so this also
/// minimizes the false-positive count, and minimum <= average gives
/// |F(m_i)| * |P| <= |F(m_{i-1})| * D'.
inline ModulusSelection select_modulus(const IntegerSet& a, const IntegerSet& b,
                                       const IntegerSet& x, std::uint64_t universe) {
  const std::uint64_t n = std::max(a.size(), b.size());
  if (n == 0) throw DomainError("select_modulus: A and B are empty");
  if (x.empty()) throw DomainError("select_modulus: X is empty");
  const Value limit = 2 * static_cast<Value>(universe);
  if (a.max() > limit || b.max() > limit || x.max() > limit) {
    throw DomainError("select_modulus: values must be <= 2U");
  }

  ModulusSelection sel;
  sel.range_lo = std::max<std::uint64_t>(2, ceil_sqrt(n));
  const PrimeRange primes = primes_in_range(sel.range_lo, 2 * sel.range_lo);
  if (primes.empty()) throw InvariantError("select_modulus: no prime in range");
  sel.prime_count = primes.size();
  sel.divisor_budget = divisor_budget(universe, sel.range_lo).d;

  sel.partial[0] = 1;
  for (int round = 0; round < 3; ++round) {
    std::optional<std::uint64_t> best_mu;
    for (std::uint64_t p : primes.primes) {
      const std::uint64_t m = sel.partial[round] * p;
      const auto v = modular_sumset_multiplicities(a, b, m);
      sel.convolution_length += m;
      const std::uint64_t mu = congruent_triples(v, x);
      if (!best_mu || mu < *best_mu) {
        best_mu = mu;
        sel.primes[round] = p;
      }
    }
    sel.mu[round] = *best_mu;
    sel.partial[round + 1] = sel.partial[round] * sel.primes[round];
  }
  sel.modulus = sel.partial[3];
  return sel;
}

/// Light iff |W_x| <= threshold = ceil(sqrt(n)).
struct HeavyClassification {
  std::uint64_t threshold = 0;
  std::vector<std::uint32_t> heavy;  // witness-table key indices, ascending
};

struct PlanRound {
  std::uint64_t x_size = 0;
  std::uint64_t removed = 0;
  std::uint64_t modulus = 0;
  std::uint64_t fp_sum = 0;    // sum of fp(x, m) over the round's X
  std::uint64_t fp_bound = 0;  // floor(2 * fp_sum / x_size)
  ModulusSelection selection;
};

/// Moduli covering every heavy sumset element.
///
/// Each heavy key k is assigned moduli[assignment[k]], recorded with its
/// false-positive count fp[k] among the full A x B and the bound
/// bound[k] = floor(2 * average) of the round it was removed in.
struct ModuliPlan {
  std::vector<std::uint64_t> moduli;
  std::vector<RemainderLists> remainders;  // parallel to moduli
  std::vector<std::int32_t> assignment;    // per key; -1 for light keys
  std::vector<std::uint64_t> fp;
  std::vector<std::uint64_t> bound;
  std::vector<PlanRound> rounds;  // empty when restored from a dump
};

struct UnknownCDetOptions {
  std::optional<std::uint64_t> universe;
  std::uint64_t memory_budget = std::uint64_t{4} << 30;
};

struct UnknownCDetState {
  IntegerSet a, b;
  std::uint64_t n = 0;
  std::uint64_t universe = 0;
  WitnessTable witnesses;
  HeavyClassification classification;
  ModuliPlan plan;
};

/// floor(log2(h)) + 1 for h >= 1: the most rounds a halving loop can take.
inline std::uint64_t max_plan_rounds(std::uint64_t heavy_count) {
  return heavy_count == 0 ? 0 : static_cast<std::uint64_t>(std::bit_width(heavy_count));
}

namespace detail {

inline HeavyClassification classify(const WitnessTable& t, std::uint64_t n) {
  HeavyClassification c;
  c.threshold = ceil_sqrt(n);
  for (std::uint32_t k = 0; k < t.key_count(); ++k) {
    if (t.witness_count(k) > c.threshold) c.heavy.push_back(k);
  }
  return c;
}

inline std::uint64_t find_or_add_modulus(ModuliPlan& plan, std::uint64_t m) {
  auto it = std::find(plan.moduli.begin(), plan.moduli.end(), m);
  if (it != plan.moduli.end()) return static_cast<std::uint64_t>(it - plan.moduli.begin());
  plan.moduli.push_back(m);
  return plan.moduli.size() - 1;
}

inline void build_remainders(UnknownCDetState& s) {
  s.plan.remainders.clear();
  for (std::uint64_t m : s.plan.moduli) {
    s.plan.remainders.push_back(RemainderLists::build(s.witnesses, m));
  }
}

}  // namespace detail

inline UnknownCDetState preprocess_unknown_c_det(IntegerSet a, IntegerSet b,
                                                 const UnknownCDetOptions& opt = {}) {
  UnknownCDetState s;
  s.universe = detail::resolve_universe(opt.universe, {&a, &b});
  s.n = std::max(a.size(), b.size());
  if (s.n == 0) throw DomainError("preprocess_unknown_c_det: A and B are empty");
  s.a = std::move(a);
  s.b = std::move(b);

  s.witnesses = WitnessTable::build(s.a, s.b, opt.memory_budget);
  s.classification = detail::classify(s.witnesses, s.n);

  auto& plan = s.plan;
  plan.assignment.assign(s.witnesses.key_count(), -1);
  plan.fp.assign(s.witnesses.key_count(), 0);
  plan.bound.assign(s.witnesses.key_count(), 0);

  const std::uint64_t max_rounds = max_plan_rounds(s.classification.heavy.size());
  std::vector<std::uint32_t> pending = s.classification.heavy;
  while (!pending.empty()) {
    if (plan.rounds.size() == max_rounds) {
      throw InvariantError("moduli loop exceeded " + std::to_string(max_rounds) +
                           " rounds");
    }
    std::vector<Value> xs;
    xs.reserve(pending.size());
    for (std::uint32_t k : pending) xs.push_back(s.witnesses.key(k));
    const IntegerSet x_set(std::move(xs));

    PlanRound round;
    round.x_size = pending.size();
    round.selection = select_modulus(s.a, s.b, x_set, s.universe);
    round.modulus = round.selection.modulus;
    const auto v = modular_sumset_multiplicities(s.a, s.b, round.modulus);

    std::vector<std::uint64_t> fp(pending.size());
    for (std::size_t i = 0; i < pending.size(); ++i) {
      const std::uint64_t congruent = v.at(s.witnesses.key(pending[i]));
      const std::uint64_t exact = s.witnesses.witness_count(pending[i]);
      if (congruent < exact) throw InvariantError("congruent count below witness count");
      fp[i] = congruent - exact;
      round.fp_sum += fp[i];
    }
    round.fp_bound = 2 * round.fp_sum / round.x_size;

    const auto index = static_cast<std::int32_t>(detail::find_or_add_modulus(plan, round.modulus));
    std::vector<std::uint32_t> remaining;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      // fp <= 2 * average, compared without division.
      if (fp[i] * round.x_size <= 2 * round.fp_sum) {
        plan.assignment[pending[i]] = index;
        plan.fp[pending[i]] = fp[i];
        plan.bound[pending[i]] = round.fp_bound;
      } else {
        remaining.push_back(pending[i]);
      }
    }
    round.removed = pending.size() - remaining.size();
    if (round.removed < (round.x_size + 1) / 2) {
      throw InvariantError("moduli round removed fewer than half of X");
    }
    plan.rounds.push_back(round);
    pending = std::move(remaining);
  }
  detail::build_remainders(s);
  return s;
}

inline QueryAnswer query_unknown_c_det(const UnknownCDetState& s,
                                       const IntegerSet& aq, const IntegerSet& bq,
                                       std::span<const Value> cq,
                                       WorkCounters* work = nullptr) {
  const auto in_a = ordinal_mask(s.a, aq, "A'", "A");
  const auto in_b = ordinal_mask(s.b, bq, "B'", "B");
  const auto targets = distinct_in_order(cq);

  std::vector<MultiplicityVector> mults;
  mults.reserve(s.plan.moduli.size());
  std::uint64_t conv_len = 0;
  for (std::uint64_t m : s.plan.moduli) {
    mults.push_back(modular_sumset_multiplicities(aq, bq, m));
    conv_len += m;
  }

  std::uint64_t fp_scanned = 0;
  std::uint64_t light_scanned = 0;
  QueryAnswer out;
  out.entries.reserve(targets.size());
  for (Value c : targets) {
    const auto key = s.witnesses.find(c);
    if (!key) {
      out.entries.push_back({c, false, 0});
      continue;
    }
    const std::int32_t idx = s.plan.assignment[*key];
    std::uint64_t k = 0;
    if (idx < 0) {
      light_scanned += s.witnesses.witness_count(*key);
      k = s.witnesses.count_present(*key, in_a, in_b);
    } else {
      const auto i = static_cast<std::size_t>(idx);
      k = count_via_remainders(s.witnesses, s.plan.remainders[i], *key,
                               mults[i].at(c), in_a, in_b, fp_scanned);
    }
    out.entries.push_back({c, k > 0, k});
  }
  if (work) {
    work->convolution_length += conv_len;
    work->fp_scan_length += fp_scanned;
    work->witness_scan_length += light_scanned;
    work->moduli_count = std::max<std::uint64_t>(work->moduli_count, s.plan.moduli.size());
  }
  return out;
}

inline QueryAnswer query_unknown_c_det(const UnknownCDetState& s,
                                       const IntegerSet& aq, const IntegerSet& bq,
                                       const IntegerSet& cq,
                                       WorkCounters* work = nullptr) {
  return query_unknown_c_det(s, aq, bq, cq.values(), work);
}

}  // namespace threesum
