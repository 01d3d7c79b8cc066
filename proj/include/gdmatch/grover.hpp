#pragma once

// Amplitude amplification in the query model. A run never stores a state
// vector: with M marked items out of K all marked items share one amplitude
// and all unmarked items share another, so the two-number recurrence is exact.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

#include "gd_string.hpp"

namespace gdmatch {

struct GroverRun {
  std::size_t domain_size = 0;         // K
  std::size_t padded_domain_size = 0;  // K with unmarked dummies appended
  std::size_t marked_count = 0;        // M
  std::size_t iterations = 0;
  double success_probability = 0.0;
  std::optional<std::size_t> measured;  // raw measurement, may be unmarked
  std::optional<std::size_t> outcome;   // measured index that passed verification
  std::uint64_t oracle_calls = 0;       // iterations + verifications
  std::uint64_t char_queries = 0;
  std::uint64_t classical_evaluations = 0;  // simulator work to learn M
};

enum class SimKind { ideal, sampled };

struct SimMode {
  SimKind kind = SimKind::ideal;
  std::size_t boost_repetitions = 0;  // 0 selects ceil(18 ln(inner calls))
  std::size_t outer_attempts = 3;
  std::uint64_t seed = 0;

  static SimMode ideal() { return {}; }
  static SimMode sampled(std::uint64_t seed, std::size_t boost = 0) {
    SimMode m;
    m.kind = SimKind::sampled;
    m.seed = seed;
    m.boost_repetitions = boost;
    return m;
  }
};

/// Majority-vote repetitions for a nested search issuing `inner_calls`
/// inner searches per outer oracle evaluation.
inline std::size_t default_boost(std::uint64_t inner_calls) {
  const double calls = std::max<double>(2.0, static_cast<double>(inner_calls));
  return static_cast<std::size_t>(std::ceil(18.0 * std::log(calls)));
}

/// Domain after padding: doubled with unmarked items until 4M <= K, so the
/// rotation angle never exceeds pi/6. Untouched when M == 0 or M == K.
inline std::size_t padded_domain(std::size_t k, std::size_t marked) {
  if (marked == 0 || marked >= k) return k;
  std::size_t padded = k;
  while (4 * marked > padded) padded *= 2;
  return padded;
}

/// floor(pi/4 * sqrt(K'/M)) on the padded domain. M == 0 gets the M == 1
/// count, since a real search cannot know that nothing is marked.
inline std::size_t grover_iterations(std::size_t k, std::size_t marked) {
  if (k == 0) throw ArgumentError("empty search domain");
  if (marked == 0) marked = 1;
  const std::size_t padded = padded_domain(k, marked);
  return static_cast<std::size_t>(
      std::floor(std::numbers::pi / 4.0 * std::sqrt(static_cast<double>(padded) / static_cast<double>(marked))));
}

/// Per-item amplitudes after `iterations` rounds of oracle + diffusion.
struct Amplitudes {
  double marked = 0.0;
  double unmarked = 0.0;
};

inline Amplitudes amplify(std::size_t domain, std::size_t marked, std::size_t iterations) {
  const double K = static_cast<double>(domain);
  const double M = static_cast<double>(marked);
  const double uniform = 1.0 / std::sqrt(K);
  Amplitudes a{uniform, uniform};
  for (std::size_t r = 0; r < iterations; ++r) {
    const double flipped = -a.marked;
    const double mean = (M * flipped + (K - M) * a.unmarked) / K;
    a.marked = 2.0 * mean - flipped;
    a.unmarked = 2.0 * mean - a.unmarked;
  }
  return a;
}

inline double success_probability(std::size_t domain, std::size_t marked, std::size_t iterations) {
  if (marked == 0) return 0.0;
  const Amplitudes a = amplify(domain, marked, iterations);
  return static_cast<double>(marked) * a.marked * a.marked;
}

namespace detail {

// Item index drawn from the post-amplification distribution. Dummies of
// the padded domain map to nullopt.
template <class Rng>
std::optional<std::size_t> measure(const std::vector<std::size_t>& marked, std::size_t domain, std::size_t padded,
                                   double p_success, Rng& rng) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  if (!marked.empty() && coin(rng) < p_success)
    return marked[std::uniform_int_distribution<std::size_t>(0, marked.size() - 1)(rng)];
  const std::size_t unmarked = padded - marked.size();
  if (unmarked == 0) return marked.front();
  std::size_t pick = std::uniform_int_distribution<std::size_t>(0, unmarked - 1)(rng);
  // walk to the pick-th unmarked real item; beyond the real ones it is a dummy
  std::size_t mi = 0;
  for (std::size_t x = 0; x < domain; ++x) {
    if (mi < marked.size() && marked[mi] == x) {
      ++mi;
      continue;
    }
    if (pick-- == 0) return x;
  }
  return std::nullopt;
}

template <class Oracle, class Rng>
GroverRun grover_exact_impl(Oracle&& oracle, std::size_t k, Rng* rng) {
  if (k == 0) throw ArgumentError("empty search domain");
  GroverRun run;
  run.domain_size = k;
  std::vector<std::size_t> marked;
  for (std::size_t x = 0; x < k; ++x)
    if (oracle(x)) marked.push_back(x);
  run.classical_evaluations = k;
  run.marked_count = marked.size();
  run.padded_domain_size = padded_domain(k, marked.size());
  run.iterations = grover_iterations(k, marked.size());
  run.success_probability = success_probability(run.padded_domain_size, marked.size(), run.iterations);

  if (rng == nullptr) {
    run.measured = marked.empty() ? std::optional<std::size_t>(0) : std::optional<std::size_t>(marked.front());
  } else {
    run.measured = measure(marked, k, run.padded_domain_size, run.success_probability, *rng);
  }
  run.oracle_calls = run.iterations;
  if (run.measured) {
    ++run.oracle_calls;
    if (oracle(*run.measured)) run.outcome = run.measured;
  }
  return run;
}

}  // namespace detail

/// Grover search with the ideal iteration count; the outcome is the first
/// marked index (deterministic).
template <class Oracle>
GroverRun grover_exact(Oracle&& oracle, std::size_t k) {
  return detail::grover_exact_impl<Oracle, std::mt19937_64>(std::forward<Oracle>(oracle), k, nullptr);
}

/// Same run, measurement sampled from the amplified distribution.
template <class Oracle, class Rng>
GroverRun grover_exact(Oracle&& oracle, std::size_t k, Rng& rng) {
  return detail::grover_exact_impl(std::forward<Oracle>(oracle), k, &rng);
}

/// Search without knowing M: exponentially growing random iteration counts
/// (factor 6/5), each followed by one classical verification, stopping at a
/// verified hit or once the iteration budget of ceil(9/4 * sqrt(K)) + 1
/// rounds is spent.
template <class Oracle, class Rng>
GroverRun grover_unknown(Oracle&& oracle, std::size_t k, Rng& rng) {
  if (k == 0) throw ArgumentError("empty search domain");
  GroverRun run;
  run.domain_size = k;
  std::vector<std::size_t> marked;
  for (std::size_t x = 0; x < k; ++x)
    if (oracle(x)) marked.push_back(x);
  run.classical_evaluations = k;
  run.marked_count = marked.size();
  run.padded_domain_size = padded_domain(k, marked.size());

  const double sqrt_k = std::sqrt(static_cast<double>(run.padded_domain_size));
  const auto budget = static_cast<std::size_t>(std::ceil(2.25 * sqrt_k)) + 1;
  const std::size_t max_rounds = 4 * budget + 8;
  double limit = 1.0;
  for (std::size_t round = 0; round < max_rounds && run.iterations <= budget; ++round) {
    const auto span = static_cast<std::size_t>(std::ceil(limit));
    const auto r = std::uniform_int_distribution<std::size_t>(0, span - 1)(rng);
    run.iterations += r;
    run.oracle_calls += r + 1;
    run.success_probability = success_probability(run.padded_domain_size, marked.size(), r);
    run.measured = detail::measure(marked, k, run.padded_domain_size, run.success_probability, rng);
    if (run.measured && oracle(*run.measured)) {
      run.outcome = run.measured;
      break;
    }
    if (run.padded_domain_size <= 1) break;  // one probe decides a singleton
    limit = std::min(limit * 6.0 / 5.0, std::max(sqrt_k, 1.0));
  }
  return run;
}

}  // namespace gdmatch
