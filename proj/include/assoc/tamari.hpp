// The Tamari operad: planar binary trees ordered by right rotation
// (A.B).C -> A.(B.C), the comb-expansion map from K onto it, and the
// projections onto triples of leaves.
#pragma once

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "kposet.hpp"
#include "report.hpp"
#include "wordtree.hpp"

namespace assoc {

/// Objects of L_m are binary StableTrees; Empty and Leaf are the units 0 and x1.
using LObject = StableTree;

inline bool is_binary(const StableTree& t) {
  if (!t.is_node()) return true;
  if (t.children().size() != 2) return false;
  return is_binary(t.children()[0]) && is_binary(t.children()[1]);
}

inline void require_binary(const StableTree& t, const char* what) {
  if (!is_binary(t)) throw std::invalid_argument(std::string(what) + ": tree is not binary");
}

/// A.B
inline LObject box(LObject a, LObject b) { return StableTree::node({std::move(a), std::move(b)}); }

inline LObject left_comb(int m) {
  if (m == 0) return StableTree::empty();
  LObject t = StableTree::leaf();
  for (int i = 1; i < m; ++i) t = box(std::move(t), StableTree::leaf());
  return t;
}

inline LObject right_comb(int m) {
  if (m == 0) return StableTree::empty();
  LObject t = StableTree::leaf();
  for (int i = 1; i < m; ++i) t = box(StableTree::leaf(), std::move(t));
  return t;
}

inline std::string lkey(const LObject& t) { return canonical_key(from_tree(t)); }

namespace detail {
inline void binary_trees(int m, std::vector<std::vector<LObject>>& memo) {
  for (int k = static_cast<int>(memo.size()); k <= m; ++k) {
    std::vector<LObject> out;
    if (k == 1) out.push_back(StableTree::leaf());
    for (int left = 1; left < k; ++left)
      for (const LObject& a : memo[static_cast<std::size_t>(left)])
        for (const LObject& b : memo[static_cast<std::size_t>(k - left)]) out.push_back(box(a, b));
    memo.push_back(std::move(out));
  }
}
}  // namespace detail

/// All binary trees with m leaves, in canonical word order.
inline std::vector<LObject> binary_trees(int m, int cap = Caps::from_env().enumerate) {
  if (m < 0) throw std::invalid_argument("binary_trees: negative m");
  require_cap(m, cap, "binary_trees");
  if (m == 0) return {StableTree::empty()};
  std::vector<std::vector<LObject>> memo{{}};
  detail::binary_trees(m, memo);
  std::vector<LObject> out = memo[static_cast<std::size_t>(m)];
  std::sort(out.begin(), out.end(), [](const LObject& a, const LObject& b) { return lkey(a) < lkey(b); });
  return out;
}

/// Every tree obtained from t by a single right rotation at some node.
inline std::vector<LObject> rotation_covers(const LObject& t) {
  require_binary(t, "rotation_covers");
  std::vector<LObject> out;
  if (!t.is_node()) return out;
  const LObject& l = t.children()[0];
  const LObject& r = t.children()[1];
  if (l.is_node()) out.push_back(box(l.children()[0], box(l.children()[1], r)));
  for (LObject& l2 : rotation_covers(l)) out.push_back(box(std::move(l2), r));
  for (LObject& r2 : rotation_covers(r)) out.push_back(box(l, std::move(r2)));
  return out;
}

/// Whether t is reachable from s by right rotations.
inline bool tamari_leq(const LObject& s, const LObject& t) {
  require_binary(s, "tamari_leq");
  require_binary(t, "tamari_leq");
  if (s.leaves() != t.leaves()) throw std::invalid_argument("tamari_leq: leaf counts differ");
  const std::string goal = lkey(t);
  std::set<std::string> seen{lkey(s)};
  std::deque<LObject> todo{s};
  while (!todo.empty()) {
    LObject cur = std::move(todo.front());
    todo.pop_front();
    if (lkey(cur) == goal) return true;
    for (LObject& n : rotation_covers(cur))
      if (seen.insert(lkey(n)).second) todo.push_back(std::move(n));
  }
  return false;
}

/// L_m with cover lists and the full reachability relation precomputed.
class TamariPoset {
 public:
  explicit TamariPoset(int m, int cap = Caps::from_env().enumerate) : m_(m), objects_(binary_trees(m, cap)) {
    for (std::size_t i = 0; i < objects_.size(); ++i) index_[lkey(objects_[i])] = i;
    covers_.resize(objects_.size());
    for (std::size_t i = 0; i < objects_.size(); ++i)
      for (const LObject& c : rotation_covers(objects_[i])) covers_[i].push_back(index_.at(lkey(c)));
    reach_.assign(objects_.size(), std::vector<bool>(objects_.size(), false));
    for (std::size_t i = 0; i < objects_.size(); ++i) {
      std::deque<std::size_t> todo{i};
      reach_[i][i] = true;
      while (!todo.empty()) {
        std::size_t u = todo.front();
        todo.pop_front();
        for (std::size_t v : covers_[u])
          if (!reach_[i][v]) {
            reach_[i][v] = true;
            todo.push_back(v);
          }
      }
    }
  }

  int m() const { return m_; }
  std::size_t size() const { return objects_.size(); }
  const std::vector<LObject>& objects() const { return objects_; }
  const LObject& object(std::size_t i) const { return objects_[i]; }
  std::size_t index(const LObject& t) const {
    auto it = index_.find(lkey(t));
    if (it == index_.end()) throw std::invalid_argument("TamariPoset: tree of the wrong size");
    return it->second;
  }
  const std::vector<std::size_t>& covers(std::size_t i) const { return covers_[i]; }
  bool leq(std::size_t i, std::size_t j) const { return reach_[i][j]; }
  bool leq(const LObject& s, const LObject& t) const { return reach_[index(s)][index(t)]; }

 private:
  int m_;
  std::vector<LObject> objects_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::vector<std::size_t>> covers_;
  std::vector<std::vector<bool>> reach_;
};

// ---------------------------------------------------------------------------
// The comb-expansion map

inline LObject lambda_obj(const StableTree& t) {
  if (!t.is_node()) return t;
  const auto& kids = t.children();
  LObject acc = lambda_obj(kids.back());
  for (std::size_t i = kids.size() - 1; i-- > 0;) acc = box(lambda_obj(kids[i]), std::move(acc));
  return acc;
}

inline LObject lambda_obj(const ParenWord& w) { return lambda_obj(to_tree(w)); }

struct LMorphism {
  LObject source;
  LObject target;
};

/// Image of a morphism of K_m. Throws std::logic_error if the image is not a
/// morphism of L_m.
inline LMorphism lambda_mor(const KMorphism& f) {
  LMorphism g{lambda_obj(f.source), lambda_obj(f.target)};
  if (!tamari_leq(g.source, g.target))
    throw std::logic_error("lambda_mor: image of " + render(f.source) + " -> " + render(f.target) +
                           " is not a Tamari morphism");
  return g;
}

/// All words whose comb expansion is t, in canonical order.
inline std::vector<ParenWord> fiber(const LObject& t, int cap = Caps::from_env().enumerate) {
  require_binary(t, "fiber");
  const std::string key = lkey(t);
  std::vector<ParenWord> out;
  for (ParenWord& w : enumerate(t.leaves(), cap))
    if (lkey(lambda_obj(w)) == key) out.push_back(std::move(w));
  return out;
}

inline ParenWord min_preimage(const LObject& t) {
  require_binary(t, "min_preimage");
  return from_tree(t);
}

namespace detail {
// Contracts the rightmost incoming edge of every node while it is not a leaf.
inline StableTree absorb_right(const StableTree& t) {
  if (!t.is_node()) return t;
  std::vector<StableTree> kids;
  StableTree cur = t;
  while (cur.is_node()) {
    const auto& ck = cur.children();
    for (std::size_t i = 0; i + 1 < ck.size(); ++i) kids.push_back(absorb_right(ck[i]));
    StableTree last = ck.back();
    cur = std::move(last);
  }
  kids.push_back(cur);
  return StableTree::node(std::move(kids));
}
}  // namespace detail

inline ParenWord max_preimage(const LObject& t) {
  require_binary(t, "max_preimage");
  return from_tree(detail::absorb_right(t));
}

// ---------------------------------------------------------------------------
// Projections onto three leaves

inline ParenWord project_abc(const ParenWord& w, int a, int b, int c) {
  const int m = w.length();
  if (!(1 <= a && a < b && b < c && c <= m))
    throw std::invalid_argument("project_abc: need 1 <= a < b < c <= " + std::to_string(m));
  std::vector<ParenWord> eps(static_cast<std::size_t>(m), ParenWord::zero());
  for (int i : {a, b, c}) eps[static_cast<std::size_t>(i - 1)] = ParenWord::id();
  return gamma(w, eps);
}

inline LObject project_abc(const LObject& t, int a, int b, int c) {
  require_binary(t, "project_abc");
  const int m = t.leaves();
  if (!(1 <= a && a < b && b < c && c <= m))
    throw std::invalid_argument("project_abc: need 1 <= a < b < c <= " + std::to_string(m));
  std::vector<StableTree> eps(static_cast<std::size_t>(m), StableTree::empty());
  for (int i : {a, b, c}) eps[static_cast<std::size_t>(i - 1)] = StableTree::leaf();
  return gamma(t, eps);
}

namespace detail {
inline std::vector<std::array<int, 3>> triples(int m) {
  std::vector<std::array<int, 3>> out;
  for (int a = 1; a <= m; ++a)
    for (int b = a + 1; b <= m; ++b)
      for (int c = b + 1; c <= m; ++c) out.push_back({a, b, c});
  return out;
}

inline nlohmann::json triple_json(const std::array<int, 3>& t) { return {t[0], t[1], t[2]}; }
}  // namespace detail

/// Verifies that the product of all projections onto triples is injective and
/// order-reflecting on K_m and on L_m, and that projection commutes with the
/// comb expansion.
inline CheckReport check_embedding(int m, int cap = Caps::from_env().checks) {
  require_cap(m, cap, "check_embedding");
  if (m < 4) throw std::invalid_argument("check_embedding: m must be at least 4");
  CheckReport rep;
  const auto trip = detail::triples(m);

  const std::vector<ParenWord> ks = enumerate(m, cap);
  std::vector<std::vector<ParenWord>> kimg;
  for (const ParenWord& w : ks) {
    std::vector<ParenWord> row;
    for (const auto& t : trip) row.push_back(project_abc(w, t[0], t[1], t[2]));
    kimg.push_back(std::move(row));
  }
  std::map<std::vector<ParenWord>, std::size_t> seen;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    ++rep.instances;
    auto [it, fresh] = seen.emplace(kimg[i], i);
    if (!fresh) rep.fail("K injectivity", {{"x", render(ks[it->second])}, {"y", render(ks[i])}});
  }
  for (std::size_t i = 0; i < ks.size(); ++i)
    for (std::size_t j = 0; j < ks.size(); ++j) {
      ++rep.instances;
      bool all = true;
      for (std::size_t k = 0; k < trip.size() && all; ++k) all = leq(kimg[i][k], kimg[j][k]);
      if (all != leq(ks[i], ks[j])) rep.fail("K fullness", {{"x", render(ks[i])}, {"y", render(ks[j])}});
    }

  const TamariPoset lm(m, cap);
  const TamariPoset l3(3, cap);
  std::vector<std::vector<std::size_t>> limg;
  for (const LObject& t : lm.objects()) {
    std::vector<std::size_t> row;
    for (const auto& tr : trip) row.push_back(l3.index(project_abc(t, tr[0], tr[1], tr[2])));
    limg.push_back(std::move(row));
  }
  std::map<std::vector<std::size_t>, std::size_t> lseen;
  for (std::size_t i = 0; i < lm.size(); ++i) {
    ++rep.instances;
    auto [it, fresh] = lseen.emplace(limg[i], i);
    if (!fresh) rep.fail("L injectivity", {{"x", render(lm.object(it->second))}, {"y", render(lm.object(i))}});
  }
  for (std::size_t i = 0; i < lm.size(); ++i)
    for (std::size_t j = 0; j < lm.size(); ++j) {
      ++rep.instances;
      bool all = true;
      for (std::size_t k = 0; k < trip.size() && all; ++k) all = l3.leq(limg[i][k], limg[j][k]);
      if (all != lm.leq(i, j)) rep.fail("L fullness", {{"x", render(lm.object(i))}, {"y", render(lm.object(j))}});
    }

  for (const ParenWord& w : ks)
    for (const auto& t : trip) {
      ++rep.instances;
      if (lambda_obj(project_abc(w, t[0], t[1], t[2])) != project_abc(lambda_obj(w), t[0], t[1], t[2]))
        rep.fail("projection square", {{"word", render(w)}, {"triple", detail::triple_json(t)}});
    }
  return rep;
}

/// Antisymmetry of the rotation order on L_m.
inline CheckReport check_poset(int m, int cap = Caps::from_env().checks) {
  require_cap(m, cap, "check_poset");
  CheckReport rep;
  const TamariPoset p(m, cap);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      ++rep.instances;
      if (p.leq(i, j) && p.leq(j, i)) rep.fail("antisymmetry", {{"x", render(p.object(i))}, {"y", render(p.object(j))}});
    }
  return rep;
}

// ---------------------------------------------------------------------------
// Covers as composites of the generator

/// A rotation cover written as gamma(context; id, ..., G(A, B, C), ..., id)
/// with G the generator (x1x2)x3 -> x1(x2x3) placed at leaf `position`.
struct RotationWitness {
  LObject context;
  int position = 0;
  LObject a, b, c;
};

namespace detail {
inline void collect_rotations(const LObject& t, int offset, const std::function<LObject(LObject)>& wrap,
                              std::vector<RotationWitness>& out) {
  if (!t.is_node()) return;
  const LObject& l = t.children()[0];
  const LObject& r = t.children()[1];
  if (l.is_node()) out.push_back({wrap(StableTree::leaf()), offset + 1, l.children()[0], l.children()[1], r});
  const int ll = l.leaves();
  collect_rotations(l, offset, [&](LObject x) { return wrap(box(std::move(x), r)); }, out);
  collect_rotations(r, offset + ll, [&](LObject x) { return wrap(box(l, std::move(x))); }, out);
}
}  // namespace detail

/// One witness per rotation cover out of t, in rotation_covers order.
inline std::vector<RotationWitness> rotation_witnesses(const LObject& t) {
  require_binary(t, "rotation_witnesses");
  std::vector<RotationWitness> out;
  detail::collect_rotations(t, 0, [](LObject x) { return x; }, out);
  return out;
}

/// Source and target of a witness, rebuilt by operadic composition.
inline LMorphism compose_witness(const RotationWitness& w) {
  const int k = w.context.leaves();
  std::vector<StableTree> src(static_cast<std::size_t>(k), StableTree::leaf());
  std::vector<StableTree> dst = src;
  const std::vector<StableTree> abc{w.a, w.b, w.c};
  src[static_cast<std::size_t>(w.position - 1)] = gamma(box(box(StableTree::leaf(), StableTree::leaf()), StableTree::leaf()), abc);
  dst[static_cast<std::size_t>(w.position - 1)] = gamma(box(StableTree::leaf(), box(StableTree::leaf(), StableTree::leaf())), abc);
  return {gamma(w.context, src), gamma(w.context, dst)};
}

/// Surjectivity of the comb expansion on objects and covers, fiber partition
/// and fiber extremes, and monotonicity, all on K_m.
inline CheckReport check_lambda(int m, int cap = Caps::from_env().checks) {
  require_cap(m, cap, "check_lambda");
  CheckReport rep;
  const TamariPoset lm(m, cap);
  const std::vector<ParenWord> ks = enumerate(m, cap);
  std::vector<std::size_t> img;
  for (const ParenWord& w : ks) img.push_back(lm.index(lambda_obj(w)));

  std::vector<std::vector<std::size_t>> fibers(lm.size());
  for (std::size_t i = 0; i < ks.size(); ++i) fibers[img[i]].push_back(i);
  for (std::size_t t = 0; t < lm.size(); ++t) {
    ++rep.instances;
    if (fibers[t].empty()) {
      rep.fail("object surjectivity", {{"tree", render(lm.object(t))}});
      continue;
    }
    const ParenWord lo = min_preimage(lm.object(t));
    const ParenWord hi = max_preimage(lm.object(t));
    if (lm.index(lambda_obj(lo)) != t || lm.index(lambda_obj(hi)) != t)
      rep.fail("extremes outside fiber", {{"tree", render(lm.object(t))}});
    for (std::size_t i : fibers[t]) {
      ++rep.instances;
      if (!leq(lo, ks[i]) || !leq(ks[i], hi))
        rep.fail("fiber extremes", {{"tree", render(lm.object(t))}, {"word", render(ks[i])}});
    }
  }

  // each Tamari cover must be the image of some cover of K_m
  std::set<std::pair<std::size_t, std::size_t>> hit;
  std::map<std::string, std::size_t> kindex;
  for (std::size_t i = 0; i < ks.size(); ++i) kindex[canonical_key(ks[i])] = i;
  for (std::size_t i = 0; i < ks.size(); ++i)
    for (const ParenWord& up : upper_covers(ks[i])) hit.insert({img[i], img[kindex.at(canonical_key(up))]});
  for (std::size_t s = 0; s < lm.size(); ++s)
    for (std::size_t t : lm.covers(s)) {
      ++rep.instances;
      if (!hit.count({s, t}))
        rep.fail("cover surjectivity", {{"source", render(lm.object(s))}, {"target", render(lm.object(t))}});
    }

  for (std::size_t i = 0; i < ks.size(); ++i)
    for (std::size_t j = 0; j < ks.size(); ++j)
      if (leq(ks[i], ks[j])) {
        ++rep.instances;
        if (!lm.leq(img[i], img[j]))
          rep.fail("monotonicity", {{"source", render(ks[i])}, {"target", render(ks[j])}});
      }
  return rep;
}

/// Every cover of L_m is gamma of the generator placed in a context.
inline CheckReport check_generation(int m, int cap = Caps::from_env().checks) {
  require_cap(m, cap, "check_generation");
  CheckReport rep;
  for (const LObject& t : binary_trees(m, cap)) {
    const auto covers = rotation_covers(t);
    const auto wits = rotation_witnesses(t);
    if (covers.size() != wits.size()) rep.fail("witness count", {{"tree", render(t)}});
    for (std::size_t i = 0; i < std::min(covers.size(), wits.size()); ++i) {
      ++rep.instances;
      const LMorphism g = compose_witness(wits[i]);
      if (g.source != t || g.target != covers[i])
        rep.fail("generator composite", {{"source", render(t)}, {"target", render(covers[i])}});
    }
  }
  return rep;
}

}  // namespace assoc
