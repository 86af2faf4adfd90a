// Parenthesized words and stable rooted trees.
//
// A parenthesized word of length m is the linear order x1 < ... < xm together
// with a laminar family of index intervals, each of size at least 2 and less
// than m. Stable trees are the dual picture: planar rooted trees whose nodes
// all have at least two inputs. Leaves are labelled 1..m left to right and the
// leaf span of every non-root node is one interval of the word.
#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace assoc {

/// Raised for malformed words, trees and serialized forms.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Closed interval [first, last] of 1-based positions.
struct Interval {
  int first = 0;
  int last = 0;

  int size() const { return last - first + 1; }
  bool contains(const Interval& o) const { return first <= o.first && o.last <= last; }
  bool disjoint(const Interval& o) const { return last < o.first || o.last < first; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Canonical interval order: start ascending, end descending, so an enclosing
/// interval always precedes the intervals nested inside it.
inline bool canonical_less(const Interval& a, const Interval& b) {
  if (a.first != b.first) return a.first < b.first;
  return a.last > b.last;
}

class ParenWord {
 public:
  /// The word 0 of length zero.
  ParenWord() = default;

  /// Validates and canonicalizes. Throws ParseError on a violated invariant.
  ParenWord(int length, std::vector<Interval> intervals) : length_(length), intervals_(std::move(intervals)) {
    if (length_ < 0) throw ParseError("negative word length");
    std::sort(intervals_.begin(), intervals_.end(), canonical_less);
    for (std::size_t i = 0; i < intervals_.size(); ++i) {
      const Interval& p = intervals_[i];
      if (p.first < 1 || p.last > length_ || p.first > p.last)
        throw ParseError("interval [" + std::to_string(p.first) + "," + std::to_string(p.last) +
                         "] out of range for length " + std::to_string(length_));
      if (p.size() < 2) throw ParseError("interval of size < 2");
      if (p.size() >= length_) throw ParseError("interval covering the whole word");
      if (i > 0 && intervals_[i - 1] == p) throw ParseError("duplicate interval");
    }
    for (std::size_t i = 0; i < intervals_.size(); ++i)
      for (std::size_t j = i + 1; j < intervals_.size(); ++j) {
        const Interval& a = intervals_[i];
        const Interval& b = intervals_[j];
        if (!a.contains(b) && !b.contains(a) && !a.disjoint(b)) throw ParseError("crossing intervals");
      }
  }

  static ParenWord zero() { return ParenWord(); }
  static ParenWord id() { return ParenWord(1, {}); }
  /// x1x2...xm, the terminal object.
  static ParenWord terminal(int m) { return ParenWord(m, {}); }

  int length() const { return length_; }
  const std::vector<Interval>& intervals() const { return intervals_; }
  bool has(const Interval& p) const {
    return std::binary_search(intervals_.begin(), intervals_.end(), p, canonical_less);
  }

  friend bool operator==(const ParenWord& a, const ParenWord& b) {
    return a.length_ == b.length_ && a.intervals_ == b.intervals_;
  }
  friend bool operator<(const ParenWord& a, const ParenWord& b) {
    if (a.length_ != b.length_) return a.length_ < b.length_;
    return std::lexicographical_compare(a.intervals_.begin(), a.intervals_.end(), b.intervals_.begin(),
                                        b.intervals_.end(), [](const Interval& x, const Interval& y) {
                                          return x.first != y.first ? x.first < y.first : x.last < y.last;
                                        });
  }

 private:
  int length_ = 0;
  std::vector<Interval> intervals_;
};

/// Stable rooted tree. A top-level Leaf is the tree `id` (one edge, no
/// nodes); Empty is the tree `0`. Empty never appears nested.
class StableTree {
 public:
  enum class Kind { Empty, Leaf, Node };

  StableTree() = default;
  static StableTree empty() { return StableTree(); }
  static StableTree leaf() {
    StableTree t;
    t.kind_ = Kind::Leaf;
    return t;
  }
  static StableTree node(std::vector<StableTree> children) {
    if (children.size() < 2) throw ParseError("tree node with fewer than two children");
    for (const StableTree& c : children)
      if (c.is_empty()) throw ParseError("empty subtree inside a tree");
    StableTree t;
    t.kind_ = Kind::Node;
    t.children_ = std::move(children);
    return t;
  }
  /// Node with k leaf children.
  static StableTree corolla(int k) { return node(std::vector<StableTree>(static_cast<std::size_t>(k), leaf())); }

  Kind kind() const { return kind_; }
  bool is_empty() const { return kind_ == Kind::Empty; }
  bool is_leaf() const { return kind_ == Kind::Leaf; }
  bool is_node() const { return kind_ == Kind::Node; }
  const std::vector<StableTree>& children() const { return children_; }

  int leaves() const {
    switch (kind_) {
      case Kind::Empty: return 0;
      case Kind::Leaf: return 1;
      case Kind::Node: break;
    }
    int n = 0;
    for (const StableTree& c : children_) n += c.leaves();
    return n;
  }

  friend bool operator==(const StableTree& a, const StableTree& b) {
    return a.kind_ == b.kind_ && a.children_ == b.children_;
  }

 private:
  Kind kind_ = Kind::Empty;
  std::vector<StableTree> children_;
};

namespace detail {

inline void collect_intervals(const StableTree& t, int& next, bool is_root, std::vector<Interval>& out) {
  if (t.is_leaf()) {
    ++next;
    return;
  }
  int start = next + 1;
  for (const StableTree& c : t.children()) collect_intervals(c, next, false, out);
  if (!is_root) out.push_back({start, next});
}

// Builds the subtree spanning [lo, hi] from the canonical-ordered intervals
// in [begin, end) that lie strictly inside it.
inline StableTree build_tree(int lo, int hi, std::span<const Interval> inner) {
  std::vector<StableTree> kids;
  std::size_t i = 0;
  for (int pos = lo; pos <= hi;) {
    if (i < inner.size() && inner[i].first == pos) {
      const Interval top = inner[i];
      std::size_t j = i + 1;
      while (j < inner.size() && top.contains(inner[j])) ++j;
      kids.push_back(build_tree(top.first, top.last, inner.subspan(i + 1, j - i - 1)));
      i = j;
      pos = top.last + 1;
    } else {
      kids.push_back(StableTree::leaf());
      ++pos;
    }
  }
  return StableTree::node(std::move(kids));
}

}  // namespace detail

inline StableTree to_tree(const ParenWord& w) {
  if (w.length() == 0) return StableTree::empty();
  if (w.length() == 1) return StableTree::leaf();
  return detail::build_tree(1, w.length(), w.intervals());
}

inline ParenWord from_tree(const StableTree& t) {
  if (t.is_empty()) return ParenWord::zero();
  if (t.is_leaf()) return ParenWord::id();
  std::vector<Interval> out;
  int next = 0;
  detail::collect_intervals(t, next, true, out);
  return ParenWord(next, std::move(out));
}

inline std::string render(const ParenWord& w) {
  const int m = w.length();
  std::vector<int> opens(static_cast<std::size_t>(m) + 2, 0), closes(static_cast<std::size_t>(m) + 2, 0);
  for (const Interval& p : w.intervals()) {
    ++opens[static_cast<std::size_t>(p.first)];
    ++closes[static_cast<std::size_t>(p.last)];
  }
  std::string out;
  for (int i = 1; i <= m; ++i) {
    out.append(static_cast<std::size_t>(opens[static_cast<std::size_t>(i)]), '(');
    out += 'x';
    out += std::to_string(i);
    out.append(static_cast<std::size_t>(closes[static_cast<std::size_t>(i)]), ')');
  }
  return out;
}

inline std::string render(const StableTree& t) { return render(from_tree(t)); }

/// Parses strings such as "x1((x2x3x4)(x5x6))". The empty string is the
/// word 0; whitespace is ignored.
inline ParenWord parse(std::string_view text) {
  std::vector<int> open_at;  // number of variables seen when '(' was read
  std::vector<Interval> groups;
  int seen = 0;
  for (std::size_t i = 0; i < text.size();) {
    char ch = text[i];
    if (ch == ' ' || ch == '\t' || ch == '\n') {
      ++i;
    } else if (ch == '(') {
      open_at.push_back(seen);
      ++i;
    } else if (ch == ')') {
      if (open_at.empty()) throw ParseError("unbalanced ')' at offset " + std::to_string(i));
      int start = open_at.back() + 1;
      open_at.pop_back();
      if (seen - start + 1 < 2) throw ParseError("parenthesis group of size < 2 ending at offset " + std::to_string(i));
      groups.push_back({start, seen});
      ++i;
    } else if (ch == 'x') {
      std::size_t j = i + 1;
      while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
      if (j == i + 1) throw ParseError("variable without index at offset " + std::to_string(i));
      int idx = std::stoi(std::string(text.substr(i + 1, j - i - 1)));
      if (idx != seen + 1)
        throw ParseError("expected x" + std::to_string(seen + 1) + " but found x" + std::to_string(idx));
      ++seen;
      i = j;
    } else {
      throw ParseError(std::string("unexpected character '") + ch + "'");
    }
  }
  if (!open_at.empty()) throw ParseError("unbalanced '('");
  for (const Interval& g : groups)
    if (g.size() >= seen) throw ParseError("parenthesis group around the whole word");
  return ParenWord(seen, std::move(groups));
}

// JSON tree form: leaf = its 1-based index, node = array of child forms,
// id = {"id":true}, 0 = {"empty":true}.

namespace detail {

inline nlohmann::json tree_json(const StableTree& t, int& next) {
  if (t.is_leaf()) return ++next;
  nlohmann::json arr = nlohmann::json::array();
  for (const StableTree& c : t.children()) arr.push_back(tree_json(c, next));
  return arr;
}

inline StableTree tree_from_json(const nlohmann::json& j, int& next) {
  if (j.is_number_integer()) {
    int idx = j.get<int>();
    if (idx != next + 1)
      throw ParseError("leaf index " + std::to_string(idx) + " where " + std::to_string(next + 1) + " was expected");
    ++next;
    return StableTree::leaf();
  }
  if (!j.is_array()) throw ParseError("tree form must be an integer or an array");
  if (j.size() < 2) throw ParseError("tree node with fewer than two children");
  std::vector<StableTree> kids;
  for (const auto& c : j) kids.push_back(tree_from_json(c, next));
  return StableTree::node(std::move(kids));
}

}  // namespace detail

inline nlohmann::json to_json(const StableTree& t) {
  if (t.is_empty()) return {{"empty", true}};
  if (t.is_leaf()) return {{"id", true}};
  int next = 0;
  return detail::tree_json(t, next);
}

inline nlohmann::json to_json(const ParenWord& w) { return to_json(to_tree(w)); }

inline StableTree tree_from_json(const nlohmann::json& j) {
  if (j.is_object()) {
    if (j.contains("empty") && j.at("empty") == true) return StableTree::empty();
    if (j.contains("id") && j.at("id") == true) return StableTree::leaf();
    throw ParseError("unknown tree object form");
  }
  if (j.is_number_integer()) throw ParseError("a bare leaf is encoded as {\"id\":true}");
  int next = 0;
  return detail::tree_from_json(j, next);
}

inline ParenWord word_from_json(const nlohmann::json& j) { return from_tree(tree_from_json(j)); }

/// Key used for canonical output ordering.
inline std::string canonical_key(const ParenWord& w) { return to_json(w).dump(); }

}  // namespace assoc
