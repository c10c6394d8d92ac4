#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "threesum/harness/campaign.hpp"
#include "threesum/harness/engine.hpp"
#include "threesum/harness/instance.hpp"
#include "threesum/harness/query_file.hpp"
#include "threesum/harness/state_io.hpp"

namespace threesum::harness {

enum ExitCode : int { kOk = 0, kUsage = 1, kMismatch = 2, kResource = 3 };

namespace detail {

inline std::vector<Algo> parse_algo_list(const std::string& s) {
  std::vector<Algo> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(parse_algo(item));
  }
  if (out.empty()) throw DomainError("no algorithm given");
  return out;
}

}  // namespace detail

/// Entry point of the `threesum` tool. `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"3SUM in preprocessed universes: preprocess A, B (and C), answer subset queries"};
  app.name("threesum");
  app.require_subcommand(1);

  // gen
  std::uint64_t gen_n = 0;
  std::optional<std::uint64_t> gen_u;
  std::string gen_mode = "uniform";
  std::uint64_t gen_seed = 1;
  bool gen_with_c = false;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "write a random instance (A.txt, B.txt, C.txt)");
  gen->add_option("--n", gen_n, "set size")->required();
  gen->add_option("--universe", gen_u, "universe bound U (default n^3)");
  gen->add_option("--mode", gen_mode, "uniform | clustered | adversarial-progression");
  gen->add_option("--seed", gen_seed);
  gen->add_flag("--with-c", gen_with_c, "also write C.txt");
  gen->add_option("--out", gen_out, "output directory")->required();

  // preprocess
  std::string pre_algo, pre_instance, pre_out;
  PreprocessConfig pre_cfg;
  std::optional<std::uint64_t> pre_force, pre_universe;
  std::uint64_t memory_budget = pre_cfg.memory_budget;
  bool pre_compact = false;
  auto* pre = app.add_subcommand("preprocess", "preprocess an instance into a state file");
  pre->add_option("--algo", pre_algo, "known-c | unknown-c-rand | unknown-c-det")->required();
  pre->add_option("--instance", pre_instance, "directory with A.txt, B.txt [C.txt]")->required();
  pre->add_option("--seed", pre_cfg.seed);
  pre->add_option("--force-modulus", pre_force, "test hook: use this prime");
  pre->add_option("--universe", pre_universe, "universe bound U (default: largest value)");
  pre->add_option("--memory-budget", memory_budget, "bytes");
  pre->add_flag("--compact", pre_compact, "unknown-c-det: store inputs only, rebuild on load");
  pre->add_option("--out", pre_out, "state file")->required();

  // query
  std::string q_state, q_file, q_out;
  auto* query = app.add_subcommand("query", "answer query blocks against a state file");
  query->add_option("--state", q_state)->required();
  query->add_option("--queries", q_file)->required();
  query->add_option("--out", q_out, "answers file (default stdout)");
  query->add_option("--memory-budget", memory_budget, "bytes");

  // verify
  std::string v_instance, v_algos = "known-c,unknown-c-rand,unknown-c-det", v_mode = "uniform";
  std::uint64_t v_n = 32, v_seed = 1, v_trials = 100;
  std::optional<std::uint64_t> v_universe;
  bool v_fault = false;
  auto* verify = app.add_subcommand("verify", "compare engines against the brute-force oracle");
  verify->add_option("--instance", v_instance, "instance directory (else generate)");
  verify->add_option("--n", v_n);
  verify->add_option("--universe", v_universe);
  verify->add_option("--mode", v_mode);
  verify->add_option("--seed", v_seed);
  verify->add_option("--algo", v_algos, "comma-separated list");
  verify->add_option("--trials", v_trials);
  verify->add_option("--memory-budget", memory_budget, "bytes");
  verify->add_flag("--inject-fault", v_fault, "corrupt one answer per engine (detector check)");

  // bench
  std::vector<std::uint64_t> b_sizes{64, 256, 1024};
  std::string b_algo = "known-c", b_out, b_mode = "uniform";
  std::uint64_t b_trials = 5, b_seed = 1;
  auto* bench = app.add_subcommand("bench", "work counters per size, as CSV");
  bench->add_option("--sizes", b_sizes)->delimiter(',');
  bench->add_option("--algo", b_algo);
  bench->add_option("--mode", b_mode);
  bench->add_option("--trials", b_trials);
  bench->add_option("--seed", b_seed);
  bench->add_option("--memory-budget", memory_budget, "bytes");
  bench->add_option("--out", b_out, "CSV file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*gen) {
      const std::uint64_t u = gen_u.value_or(gen_n * gen_n * gen_n);
      const Instance inst = generate_instance(gen_n, u, parse_gen_mode(gen_mode), gen_seed, gen_with_c);
      write_instance(gen_out, inst);
      out << "wrote " << gen_out << " (" << inst.provenance << ", n=" << gen_n << ", U=" << u << ")\n";
      return kOk;
    }

    if (*pre) {
      const Algo algo = parse_algo(pre_algo);
      const std::filesystem::path dir = pre_instance;
      if (knows_c(algo) && !std::filesystem::exists(dir / "C.txt")) {
        err << "error: --algo known-c needs " << (dir / "C.txt").string() << '\n';
        return kUsage;
      }
      const Instance inst = read_instance(dir);
      pre_cfg.force_modulus = pre_force;
      pre_cfg.universe = pre_universe;
      pre_cfg.memory_budget = memory_budget;
      const auto t0 = std::chrono::steady_clock::now();
      const EngineState state = preprocess(algo, inst, pre_cfg);
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      write_state_file(pre_out, state, pre_compact);
      out << to_string(algo) << ": " << describe(state) << " preprocess_ms=" << ms << '\n';
      return kOk;
    }

    if (*query) {
      const EngineState state = read_state_file(q_state, memory_budget);
      std::ifstream in(q_file);
      if (!in) throw ParseError("cannot open " + q_file);
      const auto blocks = parse_query_file(in, q_file);
      // Only the known-C engine checks C' against its universe.
      std::vector<QueryAnswer> answers;
      for (const auto& b : blocks) {
        try {
          answers.push_back(run_query(state, IntegerSet(b.a), IntegerSet(b.b), b.c));
        } catch (const DomainError& e) {
          throw DomainError(q_file + ":" + std::to_string(b.line) + ": " + e.what());
        }
      }
      if (q_out.empty()) {
        write_answers(out, answers);
      } else {
        std::ofstream f(q_out);
        if (!f) throw ParseError("cannot write " + q_out);
        write_answers(f, answers);
      }
      return kOk;
    }

    if (*verify) {
      Instance inst;
      if (!v_instance.empty()) {
        inst = read_instance(v_instance);
        if (v_universe) inst.universe = *v_universe;
      } else {
        const std::uint64_t u = v_universe.value_or(v_n * v_n * v_n);
        inst = generate_instance(v_n, u, parse_gen_mode(v_mode), v_seed, true);
      }
      auto algos = detail::parse_algo_list(v_algos);
      if (!inst.c) {
        std::erase(algos, Algo::known_c);
        if (algos.empty()) {
          err << "error: known-c verification needs C.txt\n";
          return kUsage;
        }
      }
      VerifyOptions opt;
      opt.trials = v_trials;
      opt.seed = v_seed;
      opt.inject_fault = v_fault;
      opt.preprocess.seed = v_seed;
      opt.preprocess.universe = inst.universe;
      opt.preprocess.memory_budget = memory_budget;
      const auto reports = run_verify(inst, algos, opt);
      out << "instance: " << inst.provenance << " n=" << inst.n << " U=" << inst.universe << '\n';
      print_verify_report(out, reports);
      for (const auto& r : reports) {
        if (r.mismatches > 0) return kMismatch;
      }
      return kOk;
    }

    if (*bench) {
      if (!std::is_sorted(b_sizes.begin(), b_sizes.end())) {
        err << "error: --sizes must be ascending\n";
        return kUsage;
      }
      BenchOptions opt;
      opt.trials = b_trials;
      opt.seed = b_seed;
      opt.mode = parse_gen_mode(b_mode);
      opt.memory_budget = memory_budget;
      const auto rows = run_bench(b_sizes, parse_algo(b_algo), opt);
      if (b_out.empty()) {
        write_bench_csv(out, rows);
      } else {
        std::ofstream f(b_out);
        if (!f) throw ParseError("cannot write " + b_out);
        write_bench_csv(f, rows);
      }
      return kOk;
    }
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return kResource;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace threesum::harness
