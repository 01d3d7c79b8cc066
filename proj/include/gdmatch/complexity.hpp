#pragma once

#include <cmath>
#include <cstddef>
#include <string>

#include "gd_string.hpp"

namespace gdmatch {

struct ComplexityReport {
  double sum_sqrt = 0.0;         // sum_i sqrt(|T[i]| * k_i)
  double bound_rhs = 0.0;        // sqrt(n * N)
  double predicted_total = 0.0;  // sqrt(m) * sum_sqrt
  bool holds = false;            // sum_sqrt <= bound_rhs (+1e-9)
  std::size_t qubits = 0;
};

inline constexpr const char* kQubitFormula =
    "ceil(log2 m) [ID] + ceil(log2 m) [prefix] + n * (5 [active,match,ext,suffm,prefm] + ceil(log2(max k_i + 1)) [K_i])";

inline std::size_t ceil_log2(std::size_t x) {
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < x) ++bits;
  return bits;
}

inline ComplexityReport cauchy_schwarz_check(const GdString& t) {
  ComplexityReport r;
  for (const auto& seg : t.segments()) r.sum_sqrt += std::sqrt(static_cast<double>(seg.size() * seg.width()));
  const Metrics mt = metrics(t);
  r.bound_rhs = std::sqrt(static_cast<double>(mt.n) * static_cast<double>(mt.N));
  r.holds = r.sum_sqrt <= r.bound_rhs + 1e-9;
  return r;
}

inline double predicted_queries(const GdString& t, const Pattern& p) {
  return std::sqrt(static_cast<double>(p.size())) * cauchy_schwarz_check(t).sum_sqrt;
}

/// Concrete register count for the thread ID, prefix pointer and the n
/// per-iteration register groups; see kQubitFormula.
inline std::size_t qubit_estimate(const GdString& t, const Pattern& p) {
  std::size_t max_k = 0;
  for (const auto& seg : t.segments()) max_k = std::max(max_k, seg.width());
  const std::size_t per_iteration = 5 + ceil_log2(max_k + 1);
  return 2 * ceil_log2(p.size()) + t.num_segments() * per_iteration;
}

inline ComplexityReport complexity_report(const GdString& t, const Pattern& p) {
  ComplexityReport r = cauchy_schwarz_check(t);
  r.predicted_total = std::sqrt(static_cast<double>(p.size())) * r.sum_sqrt;
  r.qubits = qubit_estimate(t, p);
  return r;
}

}  // namespace gdmatch
