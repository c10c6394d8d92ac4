#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "threesum/errors.hpp"
#include "threesum/integer_set.hpp"

namespace threesum::harness {

/// Malformed text input; carries the 1-based line number in what().
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GenMode { uniform, clustered, adversarial_progression };

inline std::string to_string(GenMode m) {
  switch (m) {
    case GenMode::uniform: return "uniform";
    case GenMode::clustered: return "clustered";
    case GenMode::adversarial_progression: return "adversarial-progression";
  }
  return "?";
}

inline GenMode parse_gen_mode(const std::string& s) {
  if (s == "uniform") return GenMode::uniform;
  if (s == "clustered") return GenMode::clustered;
  if (s == "adversarial-progression") return GenMode::adversarial_progression;
  throw DomainError("unknown generator mode '" + s + "'");
}

struct Instance {
  std::uint64_t n = 0;
  std::uint64_t universe = 0;
  IntegerSet a, b;
  std::optional<IntegerSet> c;
  std::string provenance;
};

namespace detail {

inline Value uniform_in(std::mt19937_64& rng, Value lo, Value hi) {
  return std::uniform_int_distribution<Value>(lo, hi)(rng);
}

// Floyd's algorithm: `count` distinct values from [0, u].
inline std::vector<Value> distinct_uniform(std::mt19937_64& rng, std::uint64_t count,
                                           std::uint64_t u) {
  std::set<Value> chosen;
  const auto hi = static_cast<Value>(u);
  for (Value j = hi - static_cast<Value>(count) + 1; j <= hi; ++j) {
    Value t = uniform_in(rng, 0, j);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  return {chosen.begin(), chosen.end()};
}

struct ProgressionLayout {
  std::uint64_t windows = 1;
  std::uint64_t width = 0;
  Value step = 1;
};

// Up to four disjoint windows of [0, U], each holding one arithmetic
// progression with the shared step.
inline ProgressionLayout clustered_layout(std::mt19937_64& rng, std::uint64_t n,
                                          std::uint64_t u) {
  ProgressionLayout l;
  for (std::uint64_t k = std::min<std::uint64_t>(4, n); k >= 1; --k) {
    if ((u + 1) / k >= (n + k - 1) / k) {
      l.windows = k;
      break;
    }
  }
  l.width = (u + 1) / l.windows;
  const std::uint64_t longest = (n + l.windows - 1) / l.windows;
  const std::uint64_t max_step = longest > 1 ? (l.width - 1) / (longest - 1) : 1;
  l.step = uniform_in(rng, 1, static_cast<Value>(std::max<std::uint64_t>(1, max_step)));
  return l;
}

inline std::vector<Value> clustered_values(std::mt19937_64& rng, std::uint64_t n,
                                           const ProgressionLayout& l) {
  std::vector<Value> out;
  for (std::uint64_t w = 0; w < l.windows; ++w) {
    const std::uint64_t len = n / l.windows + (w < n % l.windows ? 1 : 0);
    if (len == 0) continue;
    const Value span = static_cast<Value>(len - 1) * l.step;
    const Value base = static_cast<Value>(w * l.width);
    const Value start = base + uniform_in(rng, 0, static_cast<Value>(l.width) - 1 - span);
    for (std::uint64_t i = 0; i < len; ++i) out.push_back(start + static_cast<Value>(i) * l.step);
  }
  return out;
}

inline std::vector<Value> progression_values(std::mt19937_64& rng, std::uint64_t n,
                                             std::uint64_t u, Value step) {
  const Value span = static_cast<Value>(n - 1) * step;
  const Value start = uniform_in(rng, 0, static_cast<Value>(u) - span);
  std::vector<Value> out;
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(start + static_cast<Value>(i) * step);
  return out;
}

// Half of C from sums a + b that fit under U, the rest uniform.
inline std::vector<Value> target_values(std::mt19937_64& rng, const IntegerSet& a,
                                        const IntegerSet& b, std::uint64_t n,
                                        std::uint64_t u) {
  const std::uint64_t want = std::min<std::uint64_t>(n, u + 1);
  std::set<Value> chosen;
  for (std::uint64_t tries = 0; tries < 8 * n && chosen.size() < want / 2; ++tries) {
    const Value s = a[static_cast<std::size_t>(uniform_in(rng, 0, static_cast<Value>(a.size()) - 1))] +
                    b[static_cast<std::size_t>(uniform_in(rng, 0, static_cast<Value>(b.size()) - 1))];
    if (s <= static_cast<Value>(u)) chosen.insert(s);
  }
  while (chosen.size() < want) chosen.insert(uniform_in(rng, 0, static_cast<Value>(u)));
  return {chosen.begin(), chosen.end()};
}

}  // namespace detail

inline Instance generate_instance(std::uint64_t n, std::uint64_t universe, GenMode mode,
                                  std::uint64_t seed, bool with_c) {
  if (n < 1 || universe < 1) throw DomainError("gen: need n >= 1 and U >= 1");
  if (universe + 1 < n) {
    throw DomainError("gen: cannot draw " + std::to_string(n) +
                      " distinct values from [0, " + std::to_string(universe) + "]");
  }
  std::mt19937_64 rng(seed);
  Instance inst;
  inst.n = n;
  inst.universe = universe;
  switch (mode) {
    case GenMode::uniform:
      inst.a = IntegerSet(detail::distinct_uniform(rng, n, universe));
      inst.b = IntegerSet(detail::distinct_uniform(rng, n, universe));
      break;
    case GenMode::clustered: {
      const auto layout = detail::clustered_layout(rng, n, universe);
      inst.a = IntegerSet(detail::clustered_values(rng, n, layout));
      inst.b = IntegerSet(detail::clustered_values(rng, n, layout));
      break;
    }
    case GenMode::adversarial_progression: {
      const Value step = n > 1 ? static_cast<Value>(std::max<std::uint64_t>(1, universe / (n - 1))) : 1;
      inst.a = IntegerSet(detail::progression_values(rng, n, universe, step));
      inst.b = IntegerSet(detail::progression_values(rng, n, universe, step));
      break;
    }
  }
  if (with_c) inst.c = IntegerSet(detail::target_values(rng, inst.a, inst.b, n, universe));
  inst.provenance = to_string(mode) + " seed=" + std::to_string(seed);
  return inst;
}

/// Fewest arithmetic progressions with common difference `step` that cover
/// `s`: the number of maximal step-runs within each residue class.
inline std::uint64_t progression_runs(const IntegerSet& s, Value step) {
  std::vector<Value> v(s.begin(), s.end());
  std::stable_sort(v.begin(), v.end(), [step](Value x, Value y) {
    return floor_mod(x, step) < floor_mod(y, step);
  });
  std::uint64_t runs = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i == 0 || v[i] - v[i - 1] != step) ++runs;
  }
  return runs;
}

// ---- text files: one decimal integer per line ----

inline std::vector<Value> parse_integer_lines(std::istream& in, const std::string& what) {
  std::vector<Value> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::istringstream ss(line);
    Value v = 0;
    std::string rest;
    if (!(ss >> v) || (ss >> rest)) {
      throw ParseError(what + ":" + std::to_string(lineno) + ": expected one integer, got '" +
                       line + "'");
    }
    out.push_back(v);
  }
  return out;
}

inline IntegerSet read_set_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  auto values = parse_integer_lines(in, path.string());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0) {
      throw ParseError(path.string() + ": negative value " + std::to_string(values[i]));
    }
  }
  return IntegerSet(std::move(values));
}

inline void write_set_file(const std::filesystem::path& path, const IntegerSet& s) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  for (Value v : s) out << v << '\n';
}

inline void write_instance(const std::filesystem::path& dir, const Instance& inst) {
  std::filesystem::create_directories(dir);
  write_set_file(dir / "A.txt", inst.a);
  write_set_file(dir / "B.txt", inst.b);
  if (inst.c) write_set_file(dir / "C.txt", *inst.c);
}

/// Reads A.txt, B.txt and, when present, C.txt from `dir`.
inline Instance read_instance(const std::filesystem::path& dir) {
  Instance inst;
  inst.a = read_set_file(dir / "A.txt");
  inst.b = read_set_file(dir / "B.txt");
  if (std::filesystem::exists(dir / "C.txt")) inst.c = read_set_file(dir / "C.txt");
  inst.n = std::max(inst.a.size(), inst.b.size());
  Value largest = std::max(inst.a.max(), inst.b.max());
  if (inst.c) largest = std::max(largest, inst.c->max());
  inst.universe = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(largest));
  inst.provenance = "file " + dir.string();
  return inst;
}

}  // namespace threesum::harness
