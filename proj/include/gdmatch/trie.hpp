#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gd_string.hpp"

namespace gdmatch {

enum class TrieDirection { forward, backward };

/// Trie over the strings of one segment (forward) or their reversals
/// (backward). Every root-to-leaf path has length width().
class SegmentTrie {
public:
  struct Node {
    std::map<char, std::uint32_t> children;
    bool leaf = false;
  };

  SegmentTrie(const Segment& seg, TrieDirection dir) : direction_(dir), width_(seg.width()) {
    nodes_.emplace_back();
    for (const auto& s : seg.strings()) {
      if (dir == TrieDirection::forward)
        insert(s.begin(), s.end());
      else
        insert(s.rbegin(), s.rend());
    }
  }

  TrieDirection direction() const noexcept { return direction_; }
  std::size_t width() const noexcept { return width_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t leaf_count() const noexcept { return leaves_; }
  const Node& root() const noexcept { return nodes_.front(); }
  const Node& node(std::uint32_t id) const { return nodes_[id]; }

  /// Whole-string membership. For a backward trie `s` is a key of the trie,
  /// i.e. an already reversed segment string.
  bool contains_exact(std::string_view s) const {
    if (s.size() != width_) throw ArgumentError("probe length must equal segment width");
    const Node* n = walk(s);
    return n != nullptr && n->leaf;
  }

  /// True iff some key has `s` as a prefix. Empty probe is always true.
  bool has_prefix(std::string_view s) const {
    if (s.size() > width_) throw ArgumentError("probe longer than segment width");
    return walk(s) != nullptr;
  }

  /// Strings spelled root-to-leaf, in lexicographic order.
  std::vector<std::string> spelled() const {
    std::vector<std::string> out;
    std::string path;
    collect(0, path, out);
    return out;
  }

private:
  template <class It>
  void insert(It first, It last) {
    std::uint32_t cur = 0;
    for (; first != last; ++first) {
      auto found = nodes_[cur].children.find(*first);
      if (found == nodes_[cur].children.end()) {
        auto id = static_cast<std::uint32_t>(nodes_.size());
        nodes_[cur].children.emplace(*first, id);
        nodes_.emplace_back();
        cur = id;
      } else {
        cur = found->second;
      }
    }
    if (!nodes_[cur].leaf) ++leaves_;
    nodes_[cur].leaf = true;
  }

  const Node* walk(std::string_view s) const {
    std::uint32_t cur = 0;
    for (char c : s) {
      auto found = nodes_[cur].children.find(c);
      if (found == nodes_[cur].children.end()) return nullptr;
      cur = found->second;
    }
    return &nodes_[cur];
  }

  void collect(std::uint32_t id, std::string& path, std::vector<std::string>& out) const {
    if (nodes_[id].leaf) out.push_back(path);
    for (const auto& [c, child] : nodes_[id].children) {
      path.push_back(c);
      collect(child, path, out);
      path.pop_back();
    }
  }

  TrieDirection direction_;
  std::size_t width_;
  std::vector<Node> nodes_;
  std::size_t leaves_ = 0;
};

inline SegmentTrie build_forward(const Segment& seg) { return SegmentTrie(seg, TrieDirection::forward); }
inline SegmentTrie build_backward(const Segment& seg) { return SegmentTrie(seg, TrieDirection::backward); }

/// Does some string of the segment end with `s`? Queries a backward trie.
inline bool has_suffix(const SegmentTrie& backward, std::string_view s) {
  std::string rev(s.rbegin(), s.rend());
  return backward.has_prefix(rev);
}

/// Forward and backward tries for every segment of a GD string.
class TrieIndex {
public:
  explicit TrieIndex(const GdString& t) {
    forward_.reserve(t.num_segments());
    backward_.reserve(t.num_segments());
    for (const auto& seg : t.segments()) {
      forward_.push_back(build_forward(seg));
      backward_.push_back(build_backward(seg));
    }
  }

  const SegmentTrie& forward(std::size_t i) const { return forward_[i]; }
  const SegmentTrie& backward(std::size_t i) const { return backward_[i]; }
  std::size_t size() const noexcept { return forward_.size(); }

private:
  std::vector<SegmentTrie> forward_;
  std::vector<SegmentTrie> backward_;
};

}  // namespace gdmatch
