// The associahedral operad: the posets K_m of parenthesized words, operad
// composition by grafting, the valence filtration and face counts.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "report.hpp"
#include "wordtree.hpp"

namespace assoc {

/// a <= b in K_m: b's intervals are a subset of a's. Fewer brackets is higher.
inline bool leq(const ParenWord& a, const ParenWord& b) {
  if (a.length() != b.length()) throw std::invalid_argument("leq: words of different length");
  for (const Interval& p : b.intervals())
    if (!a.has(p)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace detail {

inline void compositions(int total, int min_parts, std::vector<int>& cur, const std::function<void()>& emit) {
  if (total == 0) {
    if (static_cast<int>(cur.size()) >= min_parts) emit();
    return;
  }
  for (int part = 1; part <= total; ++part) {
    cur.push_back(part);
    compositions(total - part, min_parts, cur, emit);
    cur.pop_back();
  }
}

// All stable trees with m >= 1 leaves; m == 1 yields the single leaf.
inline const std::vector<StableTree>& trees_with_leaves(int m, std::vector<std::vector<StableTree>>& memo) {
  if (static_cast<int>(memo.size()) <= m) memo.resize(static_cast<std::size_t>(m) + 1);
  auto& slot = memo[static_cast<std::size_t>(m)];
  if (!slot.empty()) return slot;
  if (m == 1) {
    slot.push_back(StableTree::leaf());
    return slot;
  }
  std::vector<int> parts;
  std::vector<StableTree> out;
  compositions(m, 2, parts, [&] {
    std::vector<const std::vector<StableTree>*> options;
    for (int p : parts) options.push_back(&trees_with_leaves(p, memo));
    std::vector<std::size_t> pick(parts.size(), 0);
    while (true) {
      std::vector<StableTree> kids;
      kids.reserve(parts.size());
      for (std::size_t i = 0; i < parts.size(); ++i) kids.push_back((*options[i])[pick[i]]);
      out.push_back(StableTree::node(std::move(kids)));
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == options[i]->size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  });
  slot = std::move(out);
  return slot;
}

}  // namespace detail

/// All objects of K_m in canonical order (lexicographic on the JSON form).
inline std::vector<ParenWord> enumerate(int m, int cap = Caps::from_env().enumerate) {
  if (m < 0) throw std::invalid_argument("enumerate: negative m");
  require_cap(m, cap, "enumerate");
  std::vector<ParenWord> out;
  if (m == 0) {
    out.push_back(ParenWord::zero());
    return out;
  }
  std::vector<std::vector<StableTree>> memo;
  const auto& trees = detail::trees_with_leaves(m, memo);
  std::vector<std::pair<std::string, ParenWord>> keyed;
  keyed.reserve(trees.size());
  for (const StableTree& t : trees) {
    ParenWord w = from_tree(t);
    keyed.emplace_back(canonical_key(w), std::move(w));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& kw : keyed) out.push_back(std::move(kw.second));
  return out;
}

// ---------------------------------------------------------------------------
// Operad composition

namespace detail {

// Preorder code of a tree: a node is its arity, a leaf is 0, the empty tree
// is the empty code.
using TreeCode = std::vector<std::int8_t>;

inline void encode_into(const StableTree& t, TreeCode& out) {
  if (t.is_empty()) return;
  if (t.is_leaf()) {
    out.push_back(0);
    return;
  }
  out.push_back(static_cast<std::int8_t>(t.children().size()));
  for (const StableTree& c : t.children()) encode_into(c, out);
}

inline TreeCode encode(const StableTree& t) {
  TreeCode out;
  encode_into(t, out);
  return out;
}

inline StableTree decode_at(const TreeCode& code, std::size_t& pos) {
  int arity = code[pos++];
  if (arity == 0) return StableTree::leaf();
  std::vector<StableTree> kids;
  kids.reserve(static_cast<std::size_t>(arity));
  for (int i = 0; i < arity; ++i) kids.push_back(decode_at(code, pos));
  return StableTree::node(std::move(kids));
}

inline StableTree decode(const TreeCode& code) {
  if (code.empty()) return StableTree::empty();
  std::size_t pos = 0;
  return decode_at(code, pos);
}

// Grafts args[leaf index] onto each leaf of s and applies the deletion rule:
// a node left with one input disappears, a node left with none disappears
// together with the edge below it. Returns whether anything was emitted.
inline bool graft_code(const TreeCode& s, std::size_t& pos, const TreeCode* const* args, std::size_t& next_leaf,
                       TreeCode& out) {
  const int arity = s[pos++];
  if (arity == 0) {
    const TreeCode& a = *args[next_leaf++];
    out.insert(out.end(), a.begin(), a.end());
    return !a.empty();
  }
  const std::size_t at = out.size();
  out.push_back(0);
  std::int8_t kept = 0;
  for (int c = 0; c < arity; ++c)
    if (graft_code(s, pos, args, next_leaf, out)) ++kept;
  if (kept == 0) {
    out.resize(at);
    return false;
  }
  if (kept == 1) {
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(at));
    return true;
  }
  out[at] = kept;
  return true;
}

/// out = gamma(s; args). `args` must hold one code per leaf of s.
inline void gamma_code(const TreeCode& s, const TreeCode* const* args, TreeCode& out) {
  out.clear();
  if (s.empty()) return;
  std::size_t pos = 0, next = 0;
  graft_code(s, pos, args, next, out);
}

}  // namespace detail

/// gamma(s; t_1..t_m) on trees.
inline StableTree gamma(const StableTree& s, std::span<const StableTree> args) {
  if (s.leaves() != static_cast<int>(args.size()))
    throw std::invalid_argument("gamma: " + std::to_string(args.size()) + " arguments for an operation of arity " +
                                std::to_string(s.leaves()));
  std::vector<detail::TreeCode> codes;
  std::vector<const detail::TreeCode*> ptrs;
  codes.reserve(args.size());
  for (const StableTree& a : args) codes.push_back(detail::encode(a));
  for (const auto& c : codes) ptrs.push_back(&c);
  detail::TreeCode out;
  detail::gamma_code(detail::encode(s), ptrs.data(), out);
  return detail::decode(out);
}

inline ParenWord gamma(const ParenWord& s, std::span<const ParenWord> args) {
  if (static_cast<std::size_t>(s.length()) != args.size())
    throw std::invalid_argument("gamma: " + std::to_string(args.size()) + " arguments for an operation of arity " +
                                std::to_string(s.length()));
  std::vector<StableTree> trees;
  trees.reserve(args.size());
  for (const ParenWord& a : args) trees.push_back(to_tree(a));
  return from_tree(gamma(to_tree(s), trees));
}

inline ParenWord gamma(const ParenWord& s, std::initializer_list<ParenWord> args) {
  return gamma(s, std::span<const ParenWord>(args.begin(), args.size()));
}

// ---------------------------------------------------------------------------
// Morphisms and cubical intervals

/// A morphism source -> target of K_m (source <= target).
struct KMorphism {
  ParenWord source;
  ParenWord target;

  KMorphism(ParenWord s, ParenWord t) : source(std::move(s)), target(std::move(t)) {
    if (!leq(source, target)) throw std::invalid_argument("KMorphism: source is not below target");
  }
  static KMorphism identity(const ParenWord& w) { return KMorphism(w, w); }
  bool is_identity() const { return source == target; }
};

/// The interval [source, target] as the cube I^dimension: a subset of the
/// dropped intervals names the word that still retains exactly that subset.
struct CubeIso {
  ParenWord source;
  ParenWord target;
  std::vector<Interval> dropped;

  int dimension() const { return static_cast<int>(dropped.size()); }

  /// Bit i of `retained` keeps dropped[i]. All bits set gives the source.
  ParenWord word_at(std::uint32_t retained) const {
    std::vector<Interval> ps = target.intervals();
    for (std::size_t i = 0; i < dropped.size(); ++i)
      if (retained & (1u << i)) ps.push_back(dropped[i]);
    return ParenWord(target.length(), std::move(ps));
  }
};

inline CubeIso interval_cube(const KMorphism& f) {
  CubeIso c{f.source, f.target, {}};
  for (const Interval& p : f.source.intervals())
    if (!f.target.has(p)) c.dropped.push_back(p);
  return c;
}

/// Targets of the covering morphisms out of w (drop one interval each).
inline std::vector<ParenWord> upper_covers(const ParenWord& w) {
  std::vector<ParenWord> out;
  const auto& ps = w.intervals();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    std::vector<Interval> rest;
    for (std::size_t j = 0; j < ps.size(); ++j)
      if (j != i) rest.push_back(ps[j]);
    out.emplace_back(w.length(), std::move(rest));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Filtration and cells

namespace detail {
inline int max_valence(const StableTree& t) {
  if (!t.is_node()) return 0;
  int v = static_cast<int>(t.children().size());
  for (const StableTree& c : t.children()) v = std::max(v, max_valence(c));
  return v;
}
inline int excess_valence(const StableTree& t) {
  if (!t.is_node()) return 0;
  int d = static_cast<int>(t.children().size()) - 2;
  for (const StableTree& c : t.children()) d += excess_valence(c);
  return d;
}
}  // namespace detail

/// Largest node valence of the tree of w; id has level 1 and 0 has level 0.
/// w lies in the n-th filtration stage iff filtration_level(w) <= n.
inline int filtration_level(const ParenWord& w) {
  if (w.length() == 0) return 0;
  if (w.length() == 1) return 1;
  return detail::max_valence(to_tree(w));
}

inline bool in_filtration(const ParenWord& w, std::optional<int> n) { return !n || filtration_level(w) <= *n; }

/// Dimension of the associahedron cell named by w: sum over nodes of
/// (valence - 2).
inline int cell_dim(const ParenWord& w) {
  if (w.length() < 2) throw std::invalid_argument("cell_dim: degenerate word has no cell");
  return detail::excess_valence(to_tree(w));
}

struct FVector {
  std::vector<std::uint64_t> counts;  // counts[d] = cells of dimension d
  long long euler = 0;
};

/// Cell counts of the n-th filtration stage of K_m (n = nullopt for all).
inline FVector f_vector(int m, std::optional<int> n, int cap = Caps::from_env().enumerate) {
  if (m < 2) throw std::invalid_argument("f_vector: m must be at least 2");
  FVector fv;
  fv.counts.assign(static_cast<std::size_t>(m - 1), 0);
  for (const ParenWord& w : enumerate(m, cap))
    if (in_filtration(w, n)) ++fv.counts[static_cast<std::size_t>(cell_dim(w))];
  while (fv.counts.size() > 1 && fv.counts.back() == 0) fv.counts.pop_back();
  for (std::size_t d = 0; d < fv.counts.size(); ++d)
    fv.euler += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(fv.counts[d]);
  return fv;
}

// ---------------------------------------------------------------------------
// Operad law verification

namespace detail {

// Calls visit() with `cur` holding every tuple of `count` codes whose leaf
// counts sum to at most `budget`. by_len[k] lists the codes with k leaves.
inline void for_each_tuple(const std::vector<std::vector<TreeCode>>& by_len, int count, int budget,
                           std::vector<const TreeCode*>& cur, const std::function<void(int)>& visit, int used = 0) {
  if (count == 0) {
    visit(used);
    return;
  }
  for (int len = 0; len <= budget && len < static_cast<int>(by_len.size()); ++len)
    for (const TreeCode& t : by_len[static_cast<std::size_t>(len)]) {
      cur.push_back(&t);
      for_each_tuple(by_len, count - 1, budget - len, cur, visit, used + len);
      cur.pop_back();
    }
}

inline int code_leaves(const TreeCode& c) {
  return static_cast<int>(std::count(c.begin(), c.end(), std::int8_t{0}));
}

inline nlohmann::json codes_json(std::span<const TreeCode* const> ts) {
  nlohmann::json a = nlohmann::json::array();
  for (const TreeCode* t : ts) a.push_back(render(decode(*t)));
  return a;
}

// Codes of every word above w (subsets of its intervals).
inline std::vector<TreeCode> codes_above(const ParenWord& w) {
  std::vector<TreeCode> out;
  const auto& ps = w.intervals();
  for (std::uint32_t mask = 0; mask < (1u << ps.size()); ++mask) {
    std::vector<Interval> keep;
    for (std::size_t i = 0; i < ps.size(); ++i)
      if (mask & (1u << i)) keep.push_back(ps[i]);
    out.push_back(encode(to_tree(ParenWord(w.length(), std::move(keep)))));
  }
  return out;
}

inline bool code_leq(const TreeCode& a, const TreeCode& b) { return leq(from_tree(decode(a)), from_tree(decode(b))); }

}  // namespace detail

/// Exhaustively verifies the unit laws, associativity and monotonicity of
/// gamma for operations of arity <= max_total whose argument lengths sum to
/// at most max_total (in every layer).
inline CheckReport check_operad_laws(int max_total) {
  using detail::TreeCode;
  CheckReport rep;
  std::vector<std::vector<TreeCode>> by_len;
  std::vector<std::vector<ParenWord>> words;
  for (int k = 0; k <= max_total; ++k) {
    words.push_back(enumerate(k, std::max(max_total, 0)));
    by_len.emplace_back();
    for (const ParenWord& w : words.back()) by_len.back().push_back(detail::encode(to_tree(w)));
  }

  const TreeCode id{0};
  TreeCode out, lhs, rhs;
  for (int m = 0; m <= max_total; ++m)
    for (const TreeCode& s : by_len[static_cast<std::size_t>(m)]) {
      ++rep.instances;
      std::vector<const TreeCode*> ids(static_cast<std::size_t>(m), &id);
      detail::gamma_code(s, ids.data(), out);
      if (out != s) rep.fail("right unit", {{"s", render(detail::decode(s))}});
      const TreeCode* sp = &s;
      detail::gamma_code(id, &sp, out);
      if (out != s) rep.fail("left unit", {{"t", render(detail::decode(s))}});
    }

  std::vector<const TreeCode*> ts, rs;
  for (int m = 0; m <= max_total && rep.ok; ++m)
    for (std::size_t si = 0; si < by_len[static_cast<std::size_t>(m)].size(); ++si) {
      const TreeCode& s = by_len[static_cast<std::size_t>(m)][si];
      const std::vector<TreeCode> s_above = detail::codes_above(words[static_cast<std::size_t>(m)][si]);
      detail::for_each_tuple(by_len, m, max_total, ts, [&](int) {
        if (!rep.ok) return;
        TreeCode st;
        detail::gamma_code(s, ts.data(), st);
        for (const TreeCode& s2 : s_above) {
          ++rep.instances;
          detail::gamma_code(s2, ts.data(), out);
          if (!detail::code_leq(st, out))
            rep.fail("monotonicity (outer)", {{"s", render(detail::decode(s))},
                                              {"s_above", render(detail::decode(s2))},
                                              {"args", detail::codes_json(ts)}});
        }
        for (std::size_t i = 0; i < ts.size(); ++i) {
          const TreeCode* orig = ts[i];
          for (const TreeCode& t2 : detail::codes_above(from_tree(detail::decode(*orig)))) {
            if (t2 == *orig) continue;
            ++rep.instances;
            ts[i] = &t2;
            detail::gamma_code(s, ts.data(), out);
            ts[i] = orig;
            if (!detail::code_leq(st, out))
              rep.fail("monotonicity (inner)", {{"s", render(detail::decode(s))},
                                                {"args", detail::codes_json(ts)},
                                                {"position", i + 1},
                                                {"above", render(detail::decode(t2))}});
          }
        }
        // associativity: the third layer is enumerated block by block so each
        // inner composite gamma(t_i; r_i) is formed once per block choice
        std::vector<TreeCode> mids(ts.size());
        std::vector<const TreeCode*> mid_ptrs(ts.size());
        rs.clear();
        std::function<void(std::size_t, int)> layer = [&](std::size_t i, int budget) {
          if (!rep.ok) return;
          if (i == ts.size()) {
            ++rep.instances;
            detail::gamma_code(st, rs.data(), lhs);
            detail::gamma_code(s, mid_ptrs.data(), rhs);
            if (lhs != rhs)
              rep.fail("associativity", {{"s", render(detail::decode(s))},
                                         {"t", detail::codes_json(ts)},
                                         {"r", detail::codes_json(rs)},
                                         {"lhs", render(detail::decode(lhs))},
                                         {"rhs", render(detail::decode(rhs))}});
            return;
          }
          const std::size_t base = rs.size();
          detail::for_each_tuple(
              by_len, detail::code_leaves(*ts[i]), budget, rs,
              [&](int used) {
                detail::gamma_code(*ts[i], rs.data() + base, mids[i]);
                mid_ptrs[i] = &mids[i];
                layer(i + 1, budget - used);
              });
        };
        layer(0, max_total);
      });
    }
  return rep;
}

}  // namespace assoc
