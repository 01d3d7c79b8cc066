#pragma once

// Generalized degenerate strings: a sequence of segments, each a set of
// equal-length strings. Internal indices are 0-based; columns are 1-based.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace gdmatch {

class FormatError : public std::runtime_error {
public:
  FormatError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

class IndexError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

class ArgumentError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// One set T[i] of distinct strings, all of length width().
/// Insertion order is kept so string indices are stable witnesses.
class Segment {
public:
  explicit Segment(std::vector<std::string> strings) : strings_(std::move(strings)) {
    if (strings_.empty()) throw ArgumentError("segment must contain at least one string");
    width_ = strings_.front().size();
    if (width_ == 0) throw ArgumentError("segment strings must be non-empty");
    std::unordered_set<std::string_view> seen;
    for (const auto& s : strings_) {
      if (s.size() != width_) throw ArgumentError("segment strings must have equal length");
      if (!seen.insert(s).second) throw ArgumentError("duplicate string in segment: " + s);
    }
  }

  std::size_t width() const noexcept { return width_; }
  std::size_t size() const noexcept { return strings_.size(); }
  const std::string& operator[](std::size_t s) const { return strings_[s]; }
  const std::vector<std::string>& strings() const noexcept { return strings_; }

  bool contains(std::string_view s) const {
    for (const auto& t : strings_)
      if (t == s) return true;
    return false;
  }

  friend bool operator==(const Segment&, const Segment&) = default;

private:
  std::vector<std::string> strings_;
  std::size_t width_ = 0;
};

struct Metrics {
  std::size_t n = 0;            // segments
  std::size_t N = 0;            // total characters, sum |T[i]| * k_i
  std::size_t W = 0;            // width, sum k_i
  std::size_t cardinality = 0;  // sum |T[i]|

  friend bool operator==(const Metrics&, const Metrics&) = default;
};

class GdString {
public:
  explicit GdString(std::vector<Segment> segments) : segments_(std::move(segments)) {
    if (segments_.empty()) throw ArgumentError("GD string must have at least one segment");
    offsets_.reserve(segments_.size() + 1);
    offsets_.push_back(0);
    for (const auto& seg : segments_) {
      offsets_.push_back(offsets_.back() + seg.width());
      for (const auto& s : seg.strings()) alphabet_.insert(s.begin(), s.end());
    }
  }

  std::size_t num_segments() const noexcept { return segments_.size(); }
  const Segment& operator[](std::size_t i) const { return segments_[i]; }
  const std::vector<Segment>& segments() const noexcept { return segments_; }
  const std::set<char>& alphabet() const noexcept { return alphabet_; }

  /// Number of columns before segment i (0-based), i.e. sum of k_t for t < i.
  std::size_t offset(std::size_t i) const { return offsets_.at(i); }
  std::size_t width() const noexcept { return offsets_.back(); }

  /// Segment containing a 0-based column.
  std::size_t segment_of_column(std::size_t col0) const {
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), col0);
    return static_cast<std::size_t>(it - offsets_.begin()) - 1;
  }

  friend bool operator==(const GdString& a, const GdString& b) { return a.segments_ == b.segments_; }

private:
  std::vector<Segment> segments_;
  std::vector<std::size_t> offsets_;
  std::set<char> alphabet_;
};

class Pattern {
public:
  explicit Pattern(std::string chars) : chars_(std::move(chars)) {
    if (chars_.empty()) throw ArgumentError("pattern must be non-empty");
  }

  std::size_t size() const noexcept { return chars_.size(); }
  const std::string& str() const noexcept { return chars_; }
  std::string_view view() const noexcept { return chars_; }
  char operator[](std::size_t q) const { return chars_[q]; }

private:
  std::string chars_;
};

/// A concrete occurrence: start/end columns (1-based, inclusive) and the
/// string chosen in each spanned segment (0-based indices).
struct Occurrence {
  std::size_t start_column = 0;
  std::size_t end_column = 0;
  std::size_t first_segment = 0;
  std::vector<std::size_t> choices;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

inline Metrics metrics(const GdString& t) {
  Metrics m;
  m.n = t.num_segments();
  for (const auto& seg : t.segments()) {
    m.W += seg.width();
    m.N += seg.size() * seg.width();
    m.cardinality += seg.size();
  }
  return m;
}

/// Column of 1-based offset `o` inside 1-based segment `i`.
inline std::size_t column_of(const GdString& t, std::size_t i, std::size_t o) {
  if (i < 1 || i > t.num_segments()) throw IndexError("segment index out of range: " + std::to_string(i));
  if (o < 1 || o > t[i - 1].width()) throw IndexError("offset out of range: " + std::to_string(o));
  return t.offset(i - 1) + o;
}

/// Parses the line-per-segment text format. '#' lines are comments, strings
/// are comma separated, a single trailing newline is allowed.
inline GdString parse_gd_text(std::string_view text) {
  std::vector<Segment> segments;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    ++line_no;

    if (!line.empty() && line.front() == '#') continue;
    if (line.empty()) throw FormatError(line_no, "empty line");

    std::vector<std::string> strings;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = line.find(',', start);
      std::string_view item = line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      if (item.empty()) throw FormatError(line_no, "empty string");
      for (char c : item) {
        if (c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f')
          throw FormatError(line_no, "whitespace inside string");
      }
      if (!strings.empty() && item.size() != strings.front().size())
        throw FormatError(line_no, "strings of unequal length");
      for (const auto& s : strings)
        if (s == item) throw FormatError(line_no, "duplicate string " + std::string(item));
      strings.emplace_back(item);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    segments.emplace_back(std::move(strings));
  }
  if (segments.empty()) throw FormatError(line_no, "no segments");
  return GdString(std::move(segments));
}

/// Canonical text form; parse_gd_text(serialize(t)) == t.
inline std::string serialize(const GdString& t) {
  std::string out;
  for (const auto& seg : t.segments()) {
    for (std::size_t s = 0; s < seg.size(); ++s) {
      if (s) out += ',';
      out += seg[s];
    }
    out += '\n';
  }
  return out;
}

}  // namespace gdmatch
