#pragma once

// Query files hold one or more blocks separated by blank lines. Each block
// has three sections introduced by the header lines A', B' and C', followed
// by one integer per line:
//
//   A'
//   1
//   3
//   B'
//   2
//   4
//   C'
//   5
//   8
//
// Answer files mirror the blocks: one "<c> <0|1> <count>" line per distinct
// target in input order, blocks separated by a blank line.

#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "threesum/harness/instance.hpp"
#include "threesum/types.hpp"

namespace threesum::harness {

struct QueryBlock {
  std::vector<Value> a, b, c;
  std::size_t line = 0;  // line of the block's first header
};

inline std::vector<QueryBlock> parse_query_file(std::istream& in,
                                                const std::string& name = "queries") {
  std::vector<QueryBlock> blocks;
  QueryBlock cur;
  std::vector<Value>* section = nullptr;
  bool seen[3] = {false, false, false};
  std::size_t lineno = 0;

  auto finish = [&] {
    if (!seen[0] && !seen[1] && !seen[2]) return;
    if (!(seen[0] && seen[1] && seen[2])) {
      throw ParseError(name + ":" + std::to_string(cur.line) +
                       ": query block needs A', B' and C' sections");
    }
    blocks.push_back(std::move(cur));
    cur = QueryBlock{};
    section = nullptr;
    seen[0] = seen[1] = seen[2] = false;
  };

  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) {
      finish();
      continue;
    }
    const auto last = line.find_last_not_of(" \t");
    const std::string tok = line.substr(first, last - first + 1);
    int header = tok == "A'" ? 0 : tok == "B'" ? 1 : tok == "C'" ? 2 : -1;
    if (header >= 0) {
      if (seen[header]) {
        throw ParseError(name + ":" + std::to_string(lineno) + ": duplicate " + tok +
                         " section (missing blank line between blocks?)");
      }
      if (!seen[0] && !seen[1] && !seen[2]) cur.line = lineno;
      seen[header] = true;
      section = header == 0 ? &cur.a : header == 1 ? &cur.b : &cur.c;
      continue;
    }
    if (!section) {
      throw ParseError(name + ":" + std::to_string(lineno) +
                       ": value outside of an A'/B'/C' section");
    }
    std::istringstream ss(tok);
    Value v = 0;
    std::string rest;
    if (!(ss >> v) || (ss >> rest)) {
      throw ParseError(name + ":" + std::to_string(lineno) + ": expected one integer, got '" +
                       tok + "'");
    }
    section->push_back(v);
  }
  finish();
  return blocks;
}

inline void write_query_block(std::ostream& out, const QueryBlock& q) {
  out << "A'\n";
  for (Value v : q.a) out << v << '\n';
  out << "B'\n";
  for (Value v : q.b) out << v << '\n';
  out << "C'\n";
  for (Value v : q.c) out << v << '\n';
}

inline void write_answers(std::ostream& out, const std::vector<QueryAnswer>& answers) {
  for (std::size_t i = 0; i < answers.size(); ++i) {
    if (i > 0) out << '\n';
    for (const auto& e : answers[i].entries) {
      out << e.c << ' ' << (e.hit ? 1 : 0) << ' ' << e.count << '\n';
    }
  }
}

}  // namespace threesum::harness
