#pragma once

#include <algorithm>
#include <cstdint>

namespace gdmatch {

/// Query accounting for the quantum engine. Level counters count oracle
/// applications; char_queries counts single-character memory reads (two per
/// mismatch-oracle evaluation: one text character, one pattern character).
/// simulator_evaluations is classical work the simulator spends to learn
/// marked counts and is not part of the modelled cost.
struct QueryLedger {
  std::uint64_t g1_calls = 0;
  std::uint64_t g2_calls = 0;
  std::uint64_t g3_calls = 0;
  std::uint64_t substring_outer_calls = 0;
  std::uint64_t substring_inner_calls = 0;
  std::uint64_t char_queries = 0;
  std::uint64_t simulator_evaluations = 0;

  QueryLedger& operator+=(const QueryLedger& o) {
    g1_calls += o.g1_calls;
    g2_calls += o.g2_calls;
    g3_calls += o.g3_calls;
    substring_outer_calls += o.substring_outer_calls;
    substring_inner_calls += o.substring_inner_calls;
    char_queries += o.char_queries;
    simulator_evaluations += o.simulator_evaluations;
    return *this;
  }

  friend QueryLedger operator+(QueryLedger a, const QueryLedger& b) { return a += b; }

  /// Cost of `times` sequential applications. Simulator work is not repeated.
  QueryLedger repeated(std::uint64_t times) const {
    QueryLedger r = *this;
    r.g1_calls *= times;
    r.g2_calls *= times;
    r.g3_calls *= times;
    r.substring_outer_calls *= times;
    r.substring_inner_calls *= times;
    r.char_queries *= times;
    return r;
  }

  /// Pointwise maximum: the cost of one circuit that serves every branch.
  static QueryLedger pointwise_max(const QueryLedger& a, const QueryLedger& b) {
    QueryLedger r;
    r.g1_calls = std::max(a.g1_calls, b.g1_calls);
    r.g2_calls = std::max(a.g2_calls, b.g2_calls);
    r.g3_calls = std::max(a.g3_calls, b.g3_calls);
    r.substring_outer_calls = std::max(a.substring_outer_calls, b.substring_outer_calls);
    r.substring_inner_calls = std::max(a.substring_inner_calls, b.substring_inner_calls);
    r.char_queries = std::max(a.char_queries, b.char_queries);
    r.simulator_evaluations = a.simulator_evaluations + b.simulator_evaluations;
    return r;
  }

  friend bool operator==(const QueryLedger&, const QueryLedger&) = default;
};

}  // namespace gdmatch
