#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gd_string.hpp"

namespace gdmatch {

struct SizeRange {
  std::size_t lo = 1;
  std::size_t hi = 1;
};

enum class Plant {
  none,       // pattern drawn uniformly over the alphabet
  language,   // pattern cut from a random member of the language
  in_string,  // pattern cut from inside a single segment string
};

struct GenParams {
  SizeRange segments{1, 6};
  SizeRange width{1, 5};
  SizeRange set_size{1, 4};
  std::size_t alphabet_size = 4;
  SizeRange pattern_length{1, 12};
  Plant plant = Plant::none;
};

inline constexpr std::string_view kGenAlphabet = "ACGTBDEFHIJKLMNOPQRSUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";

namespace detail {

inline std::size_t draw(std::mt19937_64& rng, SizeRange r) {
  return std::uniform_int_distribution<std::size_t>(r.lo, r.hi)(rng);
}

// alphabet^k, saturating at `cap`.
inline std::size_t capped_power(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t v = 1;
  for (std::size_t e = 0; e < exp && v < cap; ++e) v *= base;
  return std::min(v, cap);
}

inline std::string random_string(std::mt19937_64& rng, std::string_view alphabet, std::size_t len) {
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::string s(len, '\0');
  for (auto& c : s) c = alphabet[pick(rng)];
  return s;
}

inline std::string decode_index(std::size_t index, std::string_view alphabet, std::size_t len) {
  std::string s(len, alphabet[0]);
  for (std::size_t p = len; p-- > 0;) {
    s[p] = alphabet[index % alphabet.size()];
    index /= alphabet.size();
  }
  return s;
}

inline Segment random_segment(std::mt19937_64& rng, std::string_view alphabet, std::size_t width, std::size_t size) {
  constexpr std::size_t kEnumerateBelow = 4096;
  const std::size_t total = capped_power(alphabet.size(), width, kEnumerateBelow + 1);
  size = std::min(size, total);
  std::vector<std::string> strings;
  if (total <= kEnumerateBelow) {
    // sample without replacement from the full universe
    std::vector<std::size_t> ids(total);
    for (std::size_t i = 0; i < total; ++i) ids[i] = i;
    for (std::size_t i = 0; i < size; ++i) {
      std::size_t j = std::uniform_int_distribution<std::size_t>(i, total - 1)(rng);
      std::swap(ids[i], ids[j]);
      strings.push_back(decode_index(ids[i], alphabet, width));
    }
  } else {
    // universe is much larger than size, so rejection terminates quickly
    while (strings.size() < size) {
      auto s = random_string(rng, alphabet, width);
      if (std::find(strings.begin(), strings.end(), s) == strings.end()) strings.push_back(std::move(s));
    }
  }
  return Segment(std::move(strings));
}

}  // namespace detail

/// Deterministic random instance for a given seed. Set sizes larger than
/// alphabet^k are clamped; planting falls back to a random pattern when the
/// requested length cannot be planted.
inline std::pair<GdString, Pattern> generate_random(const GenParams& params, std::uint64_t seed) {
  if (params.alphabet_size < 1 || params.alphabet_size > kGenAlphabet.size())
    throw ArgumentError("alphabet size must be in [1, " + std::to_string(kGenAlphabet.size()) + "]");
  for (auto r : {params.segments, params.width, params.set_size, params.pattern_length})
    if (r.lo < 1 || r.lo > r.hi) throw ArgumentError("ranges must satisfy 1 <= lo <= hi");

  std::mt19937_64 rng(seed);
  const auto alphabet = kGenAlphabet.substr(0, params.alphabet_size);

  const std::size_t n = detail::draw(rng, params.segments);
  std::vector<Segment> segments;
  segments.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t k = detail::draw(rng, params.width);
    const std::size_t size = detail::draw(rng, params.set_size);
    segments.push_back(detail::random_segment(rng, alphabet, k, size));
  }
  GdString text(std::move(segments));

  const std::size_t m = detail::draw(rng, params.pattern_length);
  std::string pattern;

  if (params.plant == Plant::in_string) {
    std::vector<std::size_t> wide;
    for (std::size_t i = 0; i < n; ++i)
      if (text[i].width() >= m) wide.push_back(i);
    if (!wide.empty()) {
      const auto& seg = text[wide[std::uniform_int_distribution<std::size_t>(0, wide.size() - 1)(rng)]];
      const auto& s = seg[std::uniform_int_distribution<std::size_t>(0, seg.size() - 1)(rng)];
      const std::size_t at = std::uniform_int_distribution<std::size_t>(0, s.size() - m)(rng);
      pattern = s.substr(at, m);
    }
  }
  if (pattern.empty() && params.plant != Plant::none && m <= text.width()) {
    std::string word;
    for (const auto& seg : text.segments())
      word += seg[std::uniform_int_distribution<std::size_t>(0, seg.size() - 1)(rng)];
    const std::size_t at = std::uniform_int_distribution<std::size_t>(0, word.size() - m)(rng);
    pattern = word.substr(at, m);
  }
  if (pattern.empty()) pattern = detail::random_string(rng, alphabet, m);

  return {std::move(text), Pattern(std::move(pattern))};
}

}  // namespace gdmatch
