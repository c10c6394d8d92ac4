#pragma once

#include <cstdint>
#include <vector>

#include "threesum/integer_set.hpp"

namespace threesum {

struct Triple {
  Value a = 0;
  Value b = 0;
  Value c = 0;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// Triples with a + b == c (mod p) but a + b != c.
using FalsePositiveList = std::vector<Triple>;

struct AnswerEntry {
  Value c = 0;
  bool hit = false;
  std::uint64_t count = 0;
  friend bool operator==(const AnswerEntry&, const AnswerEntry&) = default;
};

/// One entry per distinct target, in first-occurrence order of C'.
struct QueryAnswer {
  std::vector<AnswerEntry> entries;
  friend bool operator==(const QueryAnswer&, const QueryAnswer&) = default;
};

/// Work units spent by one operation. Acceptance checks use these, never
/// wall-clock time.
struct WorkCounters {
  std::uint64_t convolution_length = 0;
  std::uint64_t fp_scan_length = 0;
  std::uint64_t witness_scan_length = 0;
  std::uint64_t restarts = 0;
  std::uint64_t moduli_count = 0;

  std::uint64_t query_work() const {
    return convolution_length + fp_scan_length + witness_scan_length;
  }
};

}  // namespace threesum
