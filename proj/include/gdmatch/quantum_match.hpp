#pragma once

// Query-level simulation of the nested quantum search:
//   G1 over thread shifts h, oracle f1 = the thread fold,
//   G2 over the strings of one segment, oracle f2 = "string s equals probe",
//   G3 over character offsets, oracle f3 = "characters differ".
// Inner levels run inside superposition, so one oracle application costs
// the pointwise maximum over all branches. In ideal mode every inner search
// answers exactly; in sampled mode each inner search succeeds with its
// amplified probability and is boosted by majority vote.

#include <cassert>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "gd_string.hpp"
#include "grover.hpp"
#include "ledger.hpp"
#include "matcher.hpp"

namespace gdmatch {

using SimRng = std::mt19937_64;

/// Mode plus the one random generator every sampled decision draws from.
class SimContext {
public:
  explicit SimContext(SimMode mode) : mode_(mode), rng_(mode.seed) {}

  const SimMode& mode() const noexcept { return mode_; }
  bool sampled() const noexcept { return mode_.kind == SimKind::sampled; }
  SimRng& rng() noexcept { return rng_; }

  /// Majority repetitions; an explicit mode value wins over the default.
  std::size_t boost(std::uint64_t inner_calls) const {
    return mode_.boost_repetitions > 0 ? mode_.boost_repetitions : default_boost(inner_calls);
  }

  std::size_t active_boost() const noexcept { return boost_; }
  void set_active_boost(std::size_t b) noexcept { boost_ = b; }

private:
  SimMode mode_;
  SimRng rng_;
  std::size_t boost_ = default_boost(2);
};

struct Decision {
  bool value = false;
  QueryLedger cost;
};

/// f3 over two equal-length windows: A[c] != B[c].
class MismatchOracle {
public:
  MismatchOracle(std::string_view a, std::string_view b) : a_(a), b_(b) {
    if (a.size() != b.size()) throw ArgumentError("mismatch oracle needs equal-length strings");
  }

  std::size_t size() const noexcept { return a_.size(); }

  bool operator()(std::size_t c) const {
    assert(c < a_.size());
    return a_[c] != b_[c];
  }

private:
  std::string_view a_;
  std::string_view b_;
};

/// f3 for extending thread pointer j through segment i with string s:
/// T[i][s][c] != P[j + c].
inline MismatchOracle oracle_f3(const GdString& t, std::size_t i, std::size_t s, const Pattern& p, std::size_t j) {
  const std::string& str = t[i][s];
  assert(j + str.size() <= p.size());
  return MismatchOracle(str, p.view().substr(j, str.size()));
}

enum class Orientation {
  exact,   // probe is compared with the whole string
  prefix,  // probe is compared with the string's first |probe| characters
  suffix,  // probe is compared with the string's last |probe| characters
};

namespace detail {

inline bool majority(std::size_t reps, double p, SimRng& rng) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  const auto wins = std::binomial_distribution<std::size_t>(reps, p)(rng);
  return 2 * wins > reps;
}

inline QueryLedger g3_cost(std::uint64_t calls) {
  QueryLedger c;
  c.g3_calls = calls;
  c.char_queries = 2 * calls;
  return c;
}

}  // namespace detail

/// G3: equal iff the mismatch search finds nothing. Sampled mode can miss
/// an existing mismatch, never invent one.
inline Decision string_equal_grover(std::string_view a, std::string_view b, SimContext& ctx) {
  if (a.size() != b.size()) throw ArgumentError("strings must have equal length");
  if (a.empty()) throw ArgumentError("strings must be non-empty");
  const MismatchOracle f3(a, b);
  const GroverRun run = grover_exact(f3, f3.size());

  Decision d;
  if (!ctx.sampled()) {
    d.value = !run.outcome.has_value();
    d.cost = detail::g3_cost(run.oracle_calls);
  } else {
    const std::size_t reps = ctx.active_boost();
    const bool found = run.marked_count > 0 && detail::majority(reps, run.success_probability, ctx.rng());
    d.value = !found;
    d.cost = detail::g3_cost(run.oracle_calls * reps);
  }
  d.cost.simulator_evaluations = run.classical_evaluations;
  return d;
}

namespace detail {

inline std::string_view window(const std::string& s, std::size_t len, Orientation o) {
  switch (o) {
    case Orientation::exact:
    case Orientation::prefix:
      return std::string_view(s).substr(0, len);
    case Orientation::suffix:
      return std::string_view(s).substr(s.size() - len);
  }
  return {};
}

// One G2 run over the segment with (possibly noisy) f2 values.
inline Decision g2_single(const Segment& seg, std::string_view probe, Orientation o, SimContext& ctx) {
  const std::size_t count = seg.size();
  std::vector<std::size_t> marked;
  QueryLedger inner;  // one f2 application, max over branches
  for (std::size_t s = 0; s < count; ++s) {
    Decision f2 = string_equal_grover(window(seg[s], probe.size(), o), probe, ctx);
    if (f2.value) marked.push_back(s);
    inner = QueryLedger::pointwise_max(inner, f2.cost);
  }
  const std::size_t r = grover_iterations(count, marked.size());
  const std::size_t padded = padded_domain(count, marked.size());

  Decision d;
  if (!ctx.sampled()) {
    d.value = !marked.empty();
  } else {
    const double p = success_probability(padded, marked.size(), r);
    auto measured = measure(marked, count, padded, p, ctx.rng());
    if (measured) {
      // verification: one more (noisy) f2 evaluation
      Decision check = string_equal_grover(window(seg[*measured], probe.size(), o), probe, ctx);
      d.value = check.value;
    }
  }
  d.cost = inner.repeated(r + 1);
  d.cost.g2_calls += r + 1;
  return d;
}

}  // namespace detail

/// G2: does some string of segment i match `probe` in the given orientation?
inline Decision segment_member_grover(const GdString& t, std::size_t i, std::string_view probe, Orientation o,
                                      SimContext& ctx) {
  const Segment& seg = t[i];
  if (probe.size() > seg.width()) throw ArgumentError("probe longer than segment width");
  if (o == Orientation::exact && probe.size() != seg.width())
    throw ArgumentError("exact probe must have the segment width");
  if (probe.empty()) return Decision{true, {}};

  if (!ctx.sampled()) return detail::g2_single(seg, probe, o, ctx);

  const std::size_t reps = ctx.active_boost();
  std::size_t wins = 0;
  Decision d;
  for (std::size_t rep = 0; rep < reps; ++rep) {
    Decision one = detail::g2_single(seg, probe, o, ctx);
    wins += one.value ? 1 : 0;
    d.cost += one.cost;
  }
  d.value = 2 * wins > reps;
  return d;
}

/// f1 for one thread with predicates answered by G2. `per_segment[i]`
/// receives the cost this thread spends on segment i.
inline bool quantum_thread(const GdString& t, const Pattern& p, std::size_t shift, SimContext& ctx,
                           std::vector<QueryLedger>& per_segment) {
  const std::size_t m = p.size();
  per_segment.assign(t.num_segments(), QueryLedger{});
  auto preds = [&](const ThreadState& s, std::size_t i) {
    const std::size_t k = t[i].width();
    StepPredicates out;
    if (extends_through(s.j, k, m)) {
      Decision ext = segment_member_grover(t, i, p.view().substr(s.j, k), Orientation::exact, ctx);
      out.ext = ext.value;
      per_segment[i] += ext.cost;
    } else {
      Decision sm = segment_member_grover(t, i, p.view().substr(s.j), Orientation::prefix, ctx);
      Decision pm = segment_member_grover(t, i, p.view().substr(0, pm_length(s.j, k, m)), Orientation::suffix, ctx);
      out.sm = sm.value;
      out.pm = pm.value;
      per_segment[i] += sm.cost;
      per_segment[i] += pm.cost;
    }
    return out;
  };
  return fold_thread(t, m, id_of_shift(shift, m), preds, [](std::size_t, const ThreadState&) {}).matched;
}

struct SubstringSearch {
  bool found = false;
  std::optional<SubstringHit> hit;
  QueryLedger cost;
};

namespace detail {

struct CharSite {
  std::size_t segment;
  std::size_t string;
  std::size_t offset;
};

inline std::vector<CharSite> flatten(const GdString& t) {
  std::vector<CharSite> sites;
  for (std::size_t i = 0; i < t.num_segments(); ++i)
    for (std::size_t s = 0; s < t[i].size(); ++s)
      for (std::size_t o = 0; o < t[i].width(); ++o) sites.push_back({i, s, o});
  return sites;
}

}  // namespace detail

/// Two nested searches: outer over all N characters of T, inner over the m
/// pattern positions. The inner oracle flags a character mismatch or
/// running off the end of the segment string.
inline SubstringSearch substring_quantum_search(const GdString& t, const Pattern& p, SimContext& ctx) {
  const std::size_t m = p.size();
  const auto sites = detail::flatten(t);
  const std::size_t reps = ctx.active_boost();

  SubstringSearch out;
  const std::size_t attempts = ctx.sampled() ? std::max<std::size_t>(1, ctx.mode().outer_attempts) : 1;
  for (std::size_t attempt = 0; attempt < attempts && !out.found; ++attempt) {
    std::vector<std::size_t> marked;
    QueryLedger inner;
    for (std::size_t g = 0; g < sites.size(); ++g) {
      const auto& site = sites[g];
      const std::string& str = t[site.segment][site.string];
      auto bad = [&](std::size_t q) { return site.offset + q >= str.size() || str[site.offset + q] != p[q]; };
      const GroverRun run = grover_exact(bad, m);
      bool mismatch;
      QueryLedger c;
      if (!ctx.sampled()) {
        mismatch = run.outcome.has_value();
        c.substring_inner_calls = run.oracle_calls;
      } else {
        mismatch = run.marked_count > 0 && detail::majority(reps, run.success_probability, ctx.rng());
        c.substring_inner_calls = run.oracle_calls * reps;
      }
      c.char_queries = 2 * c.substring_inner_calls;
      c.simulator_evaluations = run.classical_evaluations;
      inner = QueryLedger::pointwise_max(inner, c);
      if (!mismatch) marked.push_back(g);
    }

    const std::size_t r = grover_iterations(sites.size(), marked.size());
    out.cost += inner.repeated(r + 1);
    out.cost.substring_outer_calls += r + 1;

    std::optional<std::size_t> measured;
    if (!ctx.sampled()) {
      if (!marked.empty()) measured = marked.front();
    } else {
      const std::size_t padded = padded_domain(sites.size(), marked.size());
      measured = detail::measure(marked, sites.size(), padded, success_probability(padded, marked.size(), r),
                                 ctx.rng());
    }
    if (measured && std::find(marked.begin(), marked.end(), *measured) != marked.end()) {
      const auto& site = sites[*measured];
      const std::string& str = t[site.segment][site.string];
      bool ok = true;
      if (ctx.sampled()) {
        // classical confirmation of the hit
        out.cost.char_queries += 2 * m;
        ok = site.offset + m <= str.size() && str.compare(site.offset, m, p.str()) == 0;
      }
      if (ok) {
        out.found = true;
        out.hit = SubstringHit{site.segment, site.string, site.offset};
      }
    }
  }
  return out;
}

inline bool substring_quantum(const GdString& t, const Pattern& p, SimContext& ctx) {
  return substring_quantum_search(t, p, ctx).found;
}

/// The full quantum engine: substring preprocessing, then G1 over shifts
/// with a deterministic classical check of the measured shift.
inline MatchReport smgd_quantum(const GdString& t, const Pattern& p, SimContext& ctx) {
  const std::size_t m = p.size();
  const std::size_t n = t.num_segments();
  ctx.set_active_boost(ctx.boost(static_cast<std::uint64_t>(m) * n * 3));

  MatchReport report;
  QueryLedger ledger;

  SubstringSearch pre = substring_quantum_search(t, p, ctx);
  ledger += pre.cost;
  if (pre.found) {
    report.matched = true;
    report.substring_hit = true;
    report.witnesses.insert((t.offset(pre.hit->segment) + pre.hit->offset) % m);
    report.ledger = ledger;
    return report;
  }

  const TrieIndex index(t);
  const std::size_t attempts = ctx.sampled() ? std::max<std::size_t>(1, ctx.mode().outer_attempts) : 1;
  std::vector<QueryLedger> thread_cost;
  for (std::size_t attempt = 0; attempt < attempts && !report.matched; ++attempt) {
    std::vector<std::size_t> marked;
    std::vector<QueryLedger> iteration_cost(n);
    for (std::size_t h = 0; h < m; ++h) {
      if (quantum_thread(t, p, h, ctx, thread_cost)) marked.push_back(h);
      for (std::size_t i = 0; i < n; ++i) iteration_cost[i] = QueryLedger::pointwise_max(iteration_cost[i], thread_cost[i]);
    }
    QueryLedger f1;
    for (const auto& c : iteration_cost) f1 += c;

    const std::size_t r = grover_iterations(m, marked.size());
    ledger += f1.repeated(r + 1);
    ledger.g1_calls += r + 1;

    std::optional<std::size_t> measured;
    if (!ctx.sampled()) {
      if (!marked.empty()) measured = marked.front();
    } else {
      const std::size_t padded = padded_domain(m, marked.size());
      measured = detail::measure(marked, m, padded, success_probability(padded, marked.size(), r), ctx.rng());
    }
    if (measured && run_thread(t, index, p, *measured)) {
      report.matched = true;
      report.witnesses.insert(*measured);
    }
  }
  report.ledger = ledger;
  return report;
}

inline MatchReport smgd_quantum(const GdString& t, const Pattern& p, const SimMode& mode) {
  SimContext ctx(mode);
  return smgd_quantum(t, p, ctx);
}

}  // namespace gdmatch
