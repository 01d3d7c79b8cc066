#pragma once

// Classical engines: exhaustive oracle, the shift-parallel thread algorithm
// and the in-string substring scan that runs before it.

#include <cassert>
#include <cstddef>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "gd_string.hpp"
#include "ledger.hpp"
#include "trie.hpp"

namespace gdmatch {

/// Per-thread registers. `id` is the thread register (j starts at id), `j`
/// counts pattern characters already consumed at the current segment
/// boundary, `active` says P[0..j) is a suffix of the text read so far and
/// `matched` records any occurrence detected by this thread.
struct ThreadState {
  std::size_t id = 0;
  std::size_t j = 0;
  bool active = false;
  bool matched = false;

  friend bool operator==(const ThreadState&, const ThreadState&) = default;
};

struct StepPredicates {
  bool ext = false;
  bool sm = false;
  bool pm = false;
};

/// Engine verdict. `witnesses` holds start-column shifts (start column - 1
/// mod m) of detected matches.
struct MatchReport {
  bool matched = false;
  std::set<std::size_t> witnesses;
  std::optional<Occurrence> occurrence;
  std::optional<QueryLedger> ledger;
  bool substring_hit = false;
};

struct SubstringHit {
  std::size_t segment = 0;
  std::size_t string = 0;
  std::size_t offset = 0;

  friend bool operator==(const SubstringHit&, const SubstringHit&) = default;
};

// Register id r starts pattern copies at 0-based columns congruent to
// (m - r) mod m; the map is an involution.
inline std::size_t shift_of_id(std::size_t id, std::size_t m) { return (m - id % m) % m; }
inline std::size_t id_of_shift(std::size_t shift, std::size_t m) { return shift_of_id(shift, m); }

inline ThreadState initial_state(std::size_t id) {
  // the empty prefix is trivially active
  return ThreadState{id, id, id == 0, false};
}

/// j + k < m: the pattern spans the whole segment.
inline bool extends_through(std::size_t j, std::size_t k, std::size_t m) { return j + k < m; }

/// Length of the pattern prefix that must end segment i for a new copy to
/// start inside it.
inline std::size_t pm_length(std::size_t j, std::size_t k, std::size_t m) { return (j + k) % m; }

// --- predicates, 0-based segment index i ---------------------------------

inline bool predicate_ext(const TrieIndex& idx, std::size_t i, const Pattern& p, std::size_t j) {
  const std::size_t k = idx.forward(i).width();
  assert(j + k <= p.size());
  return idx.forward(i).contains_exact(p.view().substr(j, k));
}

inline bool predicate_sm(const TrieIndex& idx, std::size_t i, const Pattern& p, std::size_t j) {
  assert(j < p.size());
  assert(p.size() - j <= idx.forward(i).width());
  return idx.forward(i).has_prefix(p.view().substr(j));
}

/// First `len` pattern characters end some string of segment i.
inline bool predicate_pm(const TrieIndex& idx, std::size_t i, const Pattern& p, std::size_t len) {
  assert(len <= idx.backward(i).width() && len <= p.size());
  if (len == 0) return true;
  return has_suffix(idx.backward(i), p.view().substr(0, len));
}

/// One register update for segment i (width k).
inline ThreadState thread_step(const ThreadState& s, std::size_t k, std::size_t m, const StepPredicates& preds) {
  ThreadState next = s;
  if (extends_through(s.j, k, m)) {
    next.active = s.active && preds.ext;
  } else {
    next.matched = s.matched || (preds.sm && s.active);
    next.active = preds.pm;
  }
  next.j = (s.j + k) % m;
  return next;
}

inline ThreadState thread_step(const ThreadState& s, const GdString& t, std::size_t i, std::size_t m,
                               const StepPredicates& preds) {
  return thread_step(s, t[i].width(), m, preds);
}

/// Folds the update over all segments. `preds(state, i)` supplies the
/// predicates the branch needs; `before(i, state)` observes each iteration.
template <class Predicates, class Observer>
ThreadState fold_thread(const GdString& t, std::size_t m, std::size_t id, Predicates&& preds, Observer&& before) {
  ThreadState s = initial_state(id);
  for (std::size_t i = 0; i < t.num_segments(); ++i) {
    before(i, static_cast<const ThreadState&>(s));
    s = thread_step(s, t[i].width(), m, preds(s, i));
  }
  return s;
}

inline StepPredicates classical_predicates(const TrieIndex& idx, const Pattern& p, const ThreadState& s,
                                           std::size_t i) {
  const std::size_t m = p.size();
  const std::size_t k = idx.forward(i).width();
  StepPredicates out;
  if (extends_through(s.j, k, m)) {
    out.ext = predicate_ext(idx, i, p, s.j);
  } else {
    out.sm = predicate_sm(idx, i, p, s.j);
    out.pm = predicate_pm(idx, i, p, pm_length(s.j, k, m));
  }
  return out;
}

template <class Observer>
bool run_thread(const GdString& t, const TrieIndex& idx, const Pattern& p, std::size_t shift, Observer&& before) {
  const std::size_t m = p.size();
  if (shift >= m) throw ArgumentError("shift must be in [0, m)");
  auto preds = [&](const ThreadState& s, std::size_t i) { return classical_predicates(idx, p, s, i); };
  return fold_thread(t, m, id_of_shift(shift, m), preds, before).matched;
}

/// True iff a copy of P starting at a 0-based column congruent to `shift`
/// (mod m) matches and either crosses a segment boundary or starts at the
/// first column of a segment. The remaining occurrences, strictly inside a
/// single string, are left to substring_scan.
inline bool run_thread(const GdString& t, const TrieIndex& idx, const Pattern& p, std::size_t shift) {
  return run_thread(t, idx, p, shift, [](std::size_t, const ThreadState&) {});
}

inline bool run_thread(const GdString& t, const Pattern& p, std::size_t shift) {
  return run_thread(t, TrieIndex(t), p, shift);
}

/// First (segment, string, offset) with P inside one segment string.
inline std::optional<SubstringHit> substring_scan(const GdString& t, const Pattern& p) {
  for (std::size_t i = 0; i < t.num_segments(); ++i) {
    if (t[i].width() < p.size()) continue;
    for (std::size_t s = 0; s < t[i].size(); ++s) {
      auto at = t[i][s].find(p.str());
      if (at != std::string::npos) return SubstringHit{i, s, at};
    }
  }
  return std::nullopt;
}

inline MatchReport match_threads(const GdString& t, const Pattern& p) {
  MatchReport r;
  const std::size_t m = p.size();
  if (auto hit = substring_scan(t, p)) {
    r.substring_hit = true;
    r.witnesses.insert((t.offset(hit->segment) + hit->offset) % m);
  }
  TrieIndex idx(t);
  for (std::size_t h = 0; h < m; ++h)
    if (run_thread(t, idx, p, h)) r.witnesses.insert(h);
  r.matched = !r.witnesses.empty();
  return r;
}

namespace detail {

inline bool extend_occurrence(const GdString& t, std::string_view p, std::size_t i, std::size_t at,
                              std::vector<std::size_t>& choices) {
  const Segment& seg = t[i];
  const std::size_t len = std::min(seg.width() - at, p.size());
  for (std::size_t s = 0; s < seg.size(); ++s) {
    if (std::string_view(seg[s]).substr(at, len) != p.substr(0, len)) continue;
    choices.push_back(s);
    if (len == p.size()) return true;
    if (i + 1 < t.num_segments() && extend_occurrence(t, p.substr(len), i + 1, 0, choices)) return true;
    choices.pop_back();
  }
  return false;
}

}  // namespace detail

/// Exhaustive search; returns the occurrence that is first by start column
/// and then by the sequence of chosen string indices.
inline std::optional<Occurrence> match_bruteforce(const GdString& t, const Pattern& p) {
  const std::size_t m = p.size();
  const std::size_t w = t.width();
  for (std::size_t c0 = 0; c0 + m <= w; ++c0) {
    const std::size_t i = t.segment_of_column(c0);
    std::vector<std::size_t> choices;
    if (detail::extend_occurrence(t, p.view(), i, c0 - t.offset(i), choices))
      return Occurrence{c0 + 1, c0 + m, i, std::move(choices)};
  }
  return std::nullopt;
}

inline MatchReport match_bruteforce_report(const GdString& t, const Pattern& p) {
  MatchReport r;
  r.occurrence = match_bruteforce(t, p);
  r.matched = r.occurrence.has_value();
  if (r.matched) r.witnesses.insert((r.occurrence->start_column - 1) % p.size());
  return r;
}

/// 1-based start columns at which some thread begins a pattern copy. The
/// register of thread `id` reads (id + c) mod m at 0-based column c, and a
/// copy starts wherever it reads 0. covered[c] holds the starting id, or
/// nullopt.
inline std::vector<std::optional<std::size_t>> thread_starts(std::size_t m, std::size_t w) {
  std::vector<std::optional<std::size_t>> starts(w + 1);
  for (std::size_t id = 0; id < m; ++id) {
    std::size_t j = id % m;
    for (std::size_t c = 0; c < w; ++c) {
      if (j == 0 && !starts[c + 1]) starts[c + 1] = id;
      j = (j + 1) % m;
    }
  }
  return starts;
}

inline std::vector<bool> covered_columns(std::size_t m, std::size_t w) {
  std::vector<bool> covered(w + 1, false);
  const auto starts = thread_starts(m, w);
  for (std::size_t c = 1; c <= w; ++c) covered[c] = starts[c].has_value();
  return covered;
}

}  // namespace gdmatch
