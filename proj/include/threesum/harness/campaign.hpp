#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "threesum/harness/engine.hpp"
#include "threesum/harness/instance.hpp"
#include "threesum/oracle.hpp"

namespace threesum::harness {

struct QueryWorkload {
  IntegerSet aq, bq;
  std::vector<Value> cq;
};

inline IntegerSet random_subset(std::mt19937_64& rng, const IntegerSet& s, double keep = 0.5) {
  std::bernoulli_distribution coin(keep);
  std::vector<Value> out;
  for (Value v : s) {
    if (coin(rng)) out.push_back(v);
  }
  return IntegerSet(std::move(out));
}

/// Random subset query.
///
/// Known-C targets are a shuffled random subset of C. Unknown-C targets are
/// |A| values drawn independently of preprocessing: a third are sums from
/// A' + B', a third sums from the full A + B (members of the sumset that may
/// or may not be reachable inside A' x B') and a third uniform in [0, 2U],
/// mostly outside the sumset. Some targets repeat on purpose.
inline QueryWorkload random_query(std::mt19937_64& rng, const Instance& inst, Algo algo) {
  QueryWorkload q;
  q.aq = random_subset(rng, inst.a);
  q.bq = random_subset(rng, inst.b);
  if (knows_c(algo)) {
    const IntegerSet cs = random_subset(rng, *inst.c);
    q.cq.assign(cs.begin(), cs.end());
    std::shuffle(q.cq.begin(), q.cq.end(), rng);
    return q;
  }
  auto pick = [&](const IntegerSet& s) {
    return s[std::uniform_int_distribution<std::size_t>(0, s.size() - 1)(rng)];
  };
  const std::size_t count = std::max<std::size_t>(1, inst.a.size());
  const auto top = 2 * static_cast<Value>(inst.universe);
  for (std::size_t i = 0; i < count; ++i) {
    switch (i % 3) {
      case 0:
        if (!q.aq.empty() && !q.bq.empty()) {
          q.cq.push_back(pick(q.aq) + pick(q.bq));
          break;
        }
        [[fallthrough]];
      case 1:
        q.cq.push_back(pick(inst.a) + pick(inst.b));
        break;
      default:
        q.cq.push_back(std::uniform_int_distribution<Value>(0, top)(rng));
    }
  }
  std::shuffle(q.cq.begin(), q.cq.end(), rng);
  return q;
}

struct EngineReport {
  Algo algo{};
  std::uint64_t trials = 0;
  std::uint64_t mismatches = 0;
  std::string first_mismatch;
  std::uint64_t fp_scan_max = 0;
  double fp_scan_mean = 0;
  std::uint64_t witness_scan_max = 0;
  double witness_scan_mean = 0;
  double convolution_mean = 0;
  std::uint64_t restarts = 0;
  std::uint64_t moduli_count = 0;
};

struct VerifyOptions {
  std::uint64_t trials = 100;
  std::uint64_t seed = 1;
  bool inject_fault = false;  // flips one count per engine to test the detector
  PreprocessConfig preprocess;
};

inline std::string describe_mismatch(const QueryAnswer& got, const QueryAnswer& want) {
  if (got.entries.size() != want.entries.size()) {
    return "answer has " + std::to_string(got.entries.size()) + " entries, oracle has " +
           std::to_string(want.entries.size());
  }
  for (std::size_t i = 0; i < got.entries.size(); ++i) {
    const auto& g = got.entries[i];
    const auto& w = want.entries[i];
    if (!(g == w)) {
      return "c=" + std::to_string(w.c) + ": engine says (" + std::to_string(g.c) + "," +
             std::to_string(g.hit) + "," + std::to_string(g.count) + "), oracle says (" +
             std::to_string(w.hit) + "," + std::to_string(w.count) + ")";
    }
  }
  return "";
}

inline std::vector<EngineReport> run_verify(const Instance& inst, const std::vector<Algo>& algos,
                                            const VerifyOptions& opt) {
  std::vector<EngineReport> reports;
  for (Algo algo : algos) {
    EngineReport rep;
    rep.algo = algo;
    const EngineState state = preprocess(algo, inst, opt.preprocess);
    if (const auto* k = std::get_if<KnownCState>(&state)) rep.restarts = k->restarts;
    if (const auto* d = std::get_if<UnknownCDetState>(&state)) rep.moduli_count = d->plan.moduli.size();

    std::mt19937_64 rng(mix_seed(opt.seed, static_cast<std::uint64_t>(algo)));
    double fp_sum = 0, witness_sum = 0, conv_sum = 0;
    for (std::uint64_t t = 0; t < opt.trials; ++t) {
      const QueryWorkload q = random_query(rng, inst, algo);
      WorkCounters work;
      QueryAnswer got = run_query(state, q.aq, q.bq, q.cq, &work);
      if (opt.inject_fault && t == 0 && !got.entries.empty()) {
        auto& e = got.entries.front();
        e.count += 1;
        e.hit = e.count > 0;
      }
      const QueryAnswer want = oracle::brute_force_all_numbers(q.aq, q.bq, q.cq);
      if (!(got == want)) {
        if (rep.mismatches == 0) rep.first_mismatch = "trial " + std::to_string(t) + ": " +
                                                      describe_mismatch(got, want);
        ++rep.mismatches;
      }
      ++rep.trials;
      fp_sum += static_cast<double>(work.fp_scan_length);
      witness_sum += static_cast<double>(work.witness_scan_length);
      conv_sum += static_cast<double>(work.convolution_length);
      rep.fp_scan_max = std::max(rep.fp_scan_max, work.fp_scan_length);
      rep.witness_scan_max = std::max(rep.witness_scan_max, work.witness_scan_length);
    }
    if (rep.trials > 0) {
      const auto t = static_cast<double>(rep.trials);
      rep.fp_scan_mean = fp_sum / t;
      rep.witness_scan_mean = witness_sum / t;
      rep.convolution_mean = conv_sum / t;
    }
    reports.push_back(std::move(rep));
  }
  return reports;
}

inline void print_verify_report(std::ostream& out, const std::vector<EngineReport>& reports) {
  for (const auto& r : reports) {
    out << to_string(r.algo) << ": trials=" << r.trials << " mismatches=" << r.mismatches
        << " fp_scan_mean=" << r.fp_scan_mean << " fp_scan_max=" << r.fp_scan_max
        << " witness_scan_mean=" << r.witness_scan_mean
        << " witness_scan_max=" << r.witness_scan_max
        << " convolution_mean=" << r.convolution_mean << " restarts=" << r.restarts
        << " moduli_count=" << r.moduli_count << '\n';
    if (r.mismatches > 0) out << "  first mismatch: " << r.first_mismatch << '\n';
  }
}

// ---- benchmarking ----

struct BenchRow {
  std::uint64_t n = 0;
  double preprocess_ms = 0;
  double query_ms_mean = 0;
  double convolution_length = 0;  // mean per query
  double fp_scan_mean = 0;        // false-positive plus light-witness scan, per query
  std::uint64_t restarts = 0;
  std::uint64_t moduli_count = 0;

  double query_work() const { return convolution_length + fp_scan_mean; }
};

struct BenchOptions {
  std::uint64_t trials = 5;
  std::uint64_t seed = 1;
  GenMode mode = GenMode::uniform;
  std::uint64_t memory_budget = std::uint64_t{4} << 30;
};

/// Uniform instances with U = n^3, one per size.
inline std::vector<BenchRow> run_bench(const std::vector<std::uint64_t>& sizes, Algo algo,
                                       const BenchOptions& opt) {
  using Clock = std::chrono::steady_clock;
  auto ms = [](Clock::duration d) {
    return std::chrono::duration<double, std::milli>(d).count();
  };
  std::vector<BenchRow> rows;
  for (std::uint64_t n : sizes) {
    const Instance inst =
        generate_instance(n, n * n * n, opt.mode, mix_seed(opt.seed, n), knows_c(algo));
    PreprocessConfig cfg;
    cfg.seed = mix_seed(opt.seed, n + 1);
    cfg.memory_budget = opt.memory_budget;

    BenchRow row;
    row.n = n;
    const auto t0 = Clock::now();
    const EngineState state = preprocess(algo, inst, cfg);
    row.preprocess_ms = ms(Clock::now() - t0);
    if (const auto* k = std::get_if<KnownCState>(&state)) row.restarts = k->restarts;
    if (const auto* d = std::get_if<UnknownCDetState>(&state)) row.moduli_count = d->plan.moduli.size();

    std::mt19937_64 rng(mix_seed(opt.seed, n + 2));
    double query_ms = 0, conv = 0, scan = 0;
    for (std::uint64_t t = 0; t < opt.trials; ++t) {
      const QueryWorkload q = random_query(rng, inst, algo);
      WorkCounters work;
      const auto q0 = Clock::now();
      (void)run_query(state, q.aq, q.bq, q.cq, &work);
      query_ms += ms(Clock::now() - q0);
      conv += static_cast<double>(work.convolution_length);
      scan += static_cast<double>(work.fp_scan_length + work.witness_scan_length);
    }
    const double trials = static_cast<double>(std::max<std::uint64_t>(1, opt.trials));
    row.query_ms_mean = query_ms / trials;
    row.convolution_length = conv / trials;
    row.fp_scan_mean = scan / trials;
    rows.push_back(row);
  }
  return rows;
}

inline void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "n,preprocess_ms,query_ms_mean,convolution_length,fp_scan_mean,restarts,moduli_count\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.preprocess_ms << ',' << r.query_ms_mean << ','
        << r.convolution_length << ',' << r.fp_scan_mean << ',' << r.restarts << ','
        << r.moduli_count << '\n';
  }
}

/// Least-squares slope of log(query work) against log(n).
inline double fitted_exponent(const std::vector<BenchRow>& rows) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const auto k = static_cast<double>(rows.size());
  for (const auto& r : rows) {
    const double x = std::log(static_cast<double>(r.n));
    const double y = std::log(std::max(1.0, r.query_work()));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

}  // namespace threesum::harness
