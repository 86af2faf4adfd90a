// The Ass-K bimodule of rooted trees, the functors I and E, and the strictly
// monoidal rectification MC of a K-algebra in normal form.
#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "coherence.hpp"
#include "kposet.hpp"

namespace assoc {

/// A planar tree whose root may have any number of children; every other
/// node has at least two. Stored as the list of subtrees hanging off the
/// root (each a leaf or a stable node).
class RootedKTree {
 public:
  /// The bare root.
  RootedKTree() = default;
  explicit RootedKTree(std::vector<StableTree> children) : children_(std::move(children)) {
    for (const StableTree& c : children_)
      if (c.is_empty()) throw ParseError("empty subtree under the root");
  }
  /// Root with k leaf children.
  static RootedKTree corolla(int k) {
    return RootedKTree(std::vector<StableTree>(static_cast<std::size_t>(k), StableTree::leaf()));
  }

  const std::vector<StableTree>& children() const { return children_; }
  int leaves() const {
    int n = 0;
    for (const StableTree& c : children_) n += c.leaves();
    return n;
  }

  /// Intervals of the non-root nodes; unlike ParenWord these may cover the
  /// whole leaf range.
  std::vector<Interval> intervals() const {
    std::vector<Interval> out;
    int next = 0;
    for (const StableTree& c : children_) {
      if (c.is_leaf()) {
        ++next;
        continue;
      }
      const int start = next + 1;
      detail::collect_intervals(c, next, true, out);
      out.push_back({start, next});
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
  }

  friend bool operator==(const RootedKTree&, const RootedKTree&) = default;

 private:
  std::vector<StableTree> children_;
};

/// "r(x1(x2x3))": the root's children inside r(...).
inline std::string render(const RootedKTree& t) {
  std::string out = "r(";
  int next = 0;
  for (const StableTree& c : t.children()) {
    const std::string sub = c.is_leaf() ? "x1" : "(" + render(c) + ")";
    // shift the child's local indices by the leaves seen so far
    for (std::size_t i = 0; i < sub.size();) {
      if (sub[i] != 'x') {
        out += sub[i++];
        continue;
      }
      std::size_t j = i + 1;
      while (j < sub.size() && sub[j] >= '0' && sub[j] <= '9') ++j;
      out += 'x' + std::to_string(next + std::stoi(sub.substr(i + 1, j - i - 1)));
      i = j;
    }
    next += c.leaves();
  }
  return out + ")";
}

inline nlohmann::json to_json(const RootedKTree& t) {
  nlohmann::json arr = nlohmann::json::array();
  int next = 0;
  for (const StableTree& c : t.children()) arr.push_back(detail::tree_json(c, next));
  return {{"root", arr}};
}

inline RootedKTree rooted_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("root") || !j.at("root").is_array())
    throw ParseError("rooted tree must be {\"root\": [...]}");
  std::vector<StableTree> kids;
  int next = 0;
  for (const auto& c : j.at("root")) kids.push_back(detail::tree_from_json(c, next));
  return RootedKTree(std::move(kids));
}

/// All rooted trees with k leaves, in a deterministic order.
inline std::vector<RootedKTree> enumerate_rooted(int k, int cap = Caps::from_env().enumerate) {
  require_cap(k, cap, "enumerate_rooted");
  std::vector<std::vector<StableTree>> memo;
  std::vector<RootedKTree> out;
  std::vector<StableTree> cur;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int s = 1; s <= left; ++s)
      for (const StableTree& t : detail::trees_with_leaves(s, memo)) {
        cur.push_back(t);
        rec(left - s);
        cur.pop_back();
      }
  };
  rec(k);
  return out;
}

/// Order on rooted trees: a <= b iff b arises from a by shrinking edges,
/// including edges just above the root.
inline bool rooted_leq(const RootedKTree& a, const RootedKTree& b) {
  if (a.leaves() != b.leaves()) return false;
  const auto ia = a.intervals();
  for (const Interval& p : b.intervals())
    if (!std::binary_search(ia.begin(), ia.end(), p, canonical_less)) return false;
  return true;
}

/// t o (s_1, ..., s_m): grafting as in gamma, except that the root is never
/// deleted.
inline RootedKTree right_action(const RootedKTree& t, std::span<const ParenWord> args) {
  if (t.leaves() != static_cast<int>(args.size()))
    throw std::invalid_argument("right_action: " + std::to_string(args.size()) + " arguments for a tree with " +
                                std::to_string(t.leaves()) + " leaves");
  std::vector<StableTree> kids;
  std::size_t next = 0;
  for (const StableTree& c : t.children()) {
    std::vector<StableTree> slice;
    for (int i = 0; i < c.leaves(); ++i) slice.push_back(to_tree(args[next++]));
    StableTree g = gamma(c, slice);
    if (!g.is_empty()) kids.push_back(std::move(g));
  }
  return RootedKTree(std::move(kids));
}

/// Merges the roots of the parts into one root.
inline RootedKTree left_action(std::span<const RootedKTree> parts) {
  std::vector<StableTree> kids;
  for (const RootedKTree& p : parts) kids.insert(kids.end(), p.children().begin(), p.children().end());
  return RootedKTree(std::move(kids));
}

/// Adds a unary root below the tree of s.
inline RootedKTree functor_I(const ParenWord& s) {
  StableTree t = to_tree(s);
  if (t.is_empty()) return RootedKTree();
  return RootedKTree({std::move(t)});
}

/// Deletes a root with fewer than two children; otherwise the root becomes
/// an ordinary node.
inline ParenWord functor_E(const RootedKTree& t) {
  const auto& c = t.children();
  if (c.empty()) return ParenWord::zero();
  if (c.size() == 1) return from_tree(c[0]);
  return from_tree(StableTree::node(c));
}

/// Contracts the edge above the root when the root has a single non-leaf
/// child; otherwise returns t.
inline RootedKTree contract_root_edge(const RootedKTree& t) {
  if (t.children().size() != 1 || !t.children()[0].is_node()) return t;
  return RootedKTree(t.children()[0].children());
}

namespace detail {

// Rooted code: the root's arity (possibly 0 or 1) followed by the codes of
// its children.
inline TreeCode encode_rooted(const RootedKTree& t) {
  TreeCode out{static_cast<std::int8_t>(t.children().size())};
  for (const StableTree& c : t.children()) encode_into(c, out);
  return out;
}

inline RootedKTree decode_rooted(const TreeCode& code) {
  std::size_t pos = 1;
  std::vector<StableTree> kids;
  for (int i = 0; i < code[0]; ++i) kids.push_back(decode_at(code, pos));
  return RootedKTree(std::move(kids));
}

// Like gamma_code, but the root survives.
inline void rooted_graft_code(const TreeCode& t, const TreeCode* const* args, TreeCode& out) {
  out.assign(1, 0);
  std::size_t pos = 1, next = 0;
  std::int8_t kept = 0;
  for (int c = 0; c < t[0]; ++c)
    if (graft_code(t, pos, args, next, out)) ++kept;
  out[0] = kept;
}

inline TreeCode merge_rooted(const TreeCode& a, const TreeCode& b) {
  TreeCode out{static_cast<std::int8_t>(a[0] + b[0])};
  out.insert(out.end(), a.begin() + 1, a.end());
  out.insert(out.end(), b.begin() + 1, b.end());
  return out;
}

}  // namespace detail

/// Bimodule laws (right associativity and unit, left associativity, and the
/// exchange law). The bound applies separately to the leaves of the rooted
/// tree and to the summed leaves of each layer of arguments.
inline CheckReport check_bimodule_laws(int max_total) {
  require_cap(max_total, Caps::from_env().checks, "check_bimodule_laws");
  using detail::TreeCode;
  CheckReport rep;
  std::vector<std::vector<TreeCode>> rooted, words;
  for (int k = 0; k <= max_total; ++k) {
    rooted.emplace_back();
    for (const RootedKTree& t : enumerate_rooted(k)) rooted.back().push_back(detail::encode_rooted(t));
    words.emplace_back();
    for (const ParenWord& w : k == 1 ? std::vector<ParenWord>{ParenWord::id()} : enumerate(k))
      words.back().push_back(detail::encode(to_tree(w)));
  }
  auto rj = [](const TreeCode& t) { return render(detail::decode_rooted(t)); };
  std::vector<const TreeCode*> s, r;
  TreeCode ts, lhs, rhs, piece;
  std::vector<TreeCode> sr;
  std::vector<const TreeCode*> srp;

  for (int m = 0; m <= max_total && rep.ok; ++m)
    for (const TreeCode& t : rooted[static_cast<std::size_t>(m)]) {
      if (!rep.ok) break;
      const TreeCode id{0};
      std::vector<const TreeCode*> ids(static_cast<std::size_t>(m), &id);
      ++rep.instances;
      detail::rooted_graft_code(t, ids.data(), lhs);
      if (lhs != t) rep.fail("right unit", {{"tree", rj(t)}});
      detail::for_each_tuple(words, m, max_total, s, [&](int inner) {
        if (!rep.ok) return;
        detail::rooted_graft_code(t, s.data(), ts);
        detail::for_each_tuple(words, inner, max_total, r, [&](int) {
          if (!rep.ok) return;
          ++rep.instances;
          detail::rooted_graft_code(ts, r.data(), lhs);
          sr.resize(s.size());
          srp.clear();
          std::size_t next = 0;
          for (std::size_t i = 0; i < s.size(); ++i) {
            detail::gamma_code(*s[i], r.data() + next, sr[i]);
            next += static_cast<std::size_t>(detail::code_leaves(*s[i]));
            srp.push_back(&sr[i]);
          }
          detail::rooted_graft_code(t, srp.data(), rhs);
          if (lhs != rhs)
            rep.fail("right associativity",
                     {{"tree", rj(t)}, {"first", detail::codes_json(s)}, {"second", detail::codes_json(r)}});
        });
      });
    }

  for (int a = 0; a <= max_total && rep.ok; ++a)
    for (int b = 0; a + b <= max_total && rep.ok; ++b)
      for (const TreeCode& x : rooted[static_cast<std::size_t>(a)])
        for (const TreeCode& y : rooted[static_cast<std::size_t>(b)]) {
          if (!rep.ok) break;
          const TreeCode xy = detail::merge_rooted(x, y);
          for (int c = 0; a + b + c <= max_total && rep.ok; ++c)
            for (const TreeCode& z : rooted[static_cast<std::size_t>(c)]) {
              ++rep.instances;
              if (detail::merge_rooted(xy, z) != detail::merge_rooted(x, detail::merge_rooted(y, z))) {
                rep.fail("left associativity", {{"trees", {rj(x), rj(y), rj(z)}}});
                break;
              }
            }
          detail::for_each_tuple(words, a + b, max_total, s, [&](int) {
            if (!rep.ok) return;
            ++rep.instances;
            detail::rooted_graft_code(xy, s.data(), lhs);
            detail::rooted_graft_code(x, s.data(), piece);
            detail::rooted_graft_code(y, s.data() + a, rhs);
            if (lhs != detail::merge_rooted(piece, rhs))
              rep.fail("exchange", {{"trees", {rj(x), rj(y)}}, {"words", detail::codes_json(s)}});
          });
        }
  return rep;
}

// ---------------------------------------------------------------------------
// The rectification MC

/// An object of MC: a list of objects of C with no unit entries.
using SeqObject = std::vector<ObjId>;

/// source -> target with the target cut into source.size() contiguous,
/// possibly empty blocks; comps[i] : source[i] -> mu(block i).
struct MMorphism {
  SeqObject source;
  SeqObject target;
  std::vector<int> blocks;
  std::vector<MorId> comps;

  friend bool operator==(const MMorphism&, const MMorphism&) = default;
};

class MCat {
 public:
  /// Throws CapExceeded if max_len exceeds the algebra's arity bound and
  /// HypothesisError if C has a non-identity morphism out of the unit,
  /// which the block model cannot represent.
  MCat(KAlgebra alg, int max_len) : alg_(std::move(alg)), max_len_(max_len) {
    if (max_len_ < 0 || max_len_ > alg_.max_arity())
      throw CapExceeded("MCat: max length " + std::to_string(max_len_) + " exceeds the arity bound " +
                        std::to_string(alg_.max_arity()));
    unit_ = mu({});
    const FinCat& c = base();
    for (MorId f = 0; f < c.num_morphisms(); ++f)
      if (c.src(f) == unit_ && c.dst(f) != unit_) {
        CheckReport r;
        r.fail("morphism out of the unit", {{"morphism", c.morphism(f).name}});
        throw HypothesisError(r);
      }
  }

  const FinCat& base() const { return *alg_.cat; }
  const KAlgebra& algebra() const { return alg_; }
  ObjId unit() const { return unit_; }
  int max_len() const { return max_len_; }

  SeqObject normalize(std::span<const ObjId> t) const {
    SeqObject out;
    for (ObjId o : t)
      if (o != unit_) out.push_back(o);
    return out;
  }

  /// Every object of length <= max_len, shortest first, then lexicographic.
  std::vector<SeqObject> objects() const {
    std::vector<ObjId> letters;
    for (ObjId o = 0; o < base().num_objects(); ++o)
      if (o != unit_) letters.push_back(o);
    std::vector<SeqObject> out{{}};
    for (std::size_t from = 0, len = 1; len <= static_cast<std::size_t>(max_len_); ++len) {
      const std::size_t to = out.size();
      for (std::size_t i = from; i < to; ++i)
        for (ObjId o : letters) {
          SeqObject s = out[i];
          s.push_back(o);
          out.push_back(std::move(s));
        }
      from = to;
    }
    return out;
  }

  ObjId mu(std::span<const ObjId> t) const { return obj_eval(static_cast<int>(t.size()))(t); }
  MorId mu_mor(std::span<const MorId> f) const { return mor_eval(static_cast<int>(f.size()))(f); }

  /// The morphism mu(mu(block 1), ..., mu(block s)) -> mu(d) of the unique
  /// arrow from the blocked word to the terminal word of K.
  MorId rebracket(std::span<const ObjId> d, std::span<const int> sizes) const {
    const int q = static_cast<int>(d.size());
    std::vector<Interval> iv;
    int at = 1;
    for (int s : sizes) {
      if (s >= 2 && s < q) iv.push_back({at, at + s - 1});
      at += s;
    }
    if (at != q + 1) throw std::invalid_argument("rebracket: block sizes do not cover the sequence");
    if (iv.empty()) return base().id(mu(d));
    const ParenWord w(q, std::move(iv));
    const std::string key = canonical_key(w);
    auto it = rebracket_.find(key);
    if (it == rebracket_.end()) it = rebracket_.emplace(key, alg_.on_poset_morphisms(KMorphism(w, ParenWord::terminal(q)))).first;
    return it->second(d);
  }

  /// Checks the typing of a candidate morphism.
  bool well_formed(const MMorphism& f) const {
    if (f.blocks.size() != f.source.size() || f.comps.size() != f.source.size()) return false;
    if (normalize(f.source) != f.source || normalize(f.target) != f.target) return false;
    std::size_t at = 0;
    for (std::size_t i = 0; i < f.blocks.size(); ++i) {
      if (f.blocks[i] < 0 || at + static_cast<std::size_t>(f.blocks[i]) > f.target.size()) return false;
      const ObjId tgt = mu(std::span<const ObjId>(f.target).subspan(at, static_cast<std::size_t>(f.blocks[i])));
      const MorId g = f.comps[i];
      if (g < 0 || g >= base().num_morphisms() || base().src(g) != f.source[i] || base().dst(g) != tgt) return false;
      at += static_cast<std::size_t>(f.blocks[i]);
    }
    return at == f.target.size();
  }

  /// Every morphism a -> b: all block cuts times all component choices.
  std::vector<MMorphism> hom(const SeqObject& a, const SeqObject& b) const {
    std::vector<MMorphism> out;
    const std::size_t m = a.size();
    MMorphism cur{a, b, std::vector<int>(m, 0), std::vector<MorId>(m, 0)};
    std::function<void(std::size_t, std::size_t)> cut = [&](std::size_t i, std::size_t at) {
      if (i == m) {
        if (at == b.size()) choose(cur, 0, 0, out);
        return;
      }
      for (std::size_t s = 0; at + s <= b.size(); ++s) {
        if (i + 1 == m && at + s != b.size()) continue;
        cur.blocks[i] = static_cast<int>(s);
        cut(i + 1, at + s);
      }
    };
    if (m == 0) {
      if (b.empty()) out.push_back(cur);
      return out;
    }
    cut(0, 0);
    return out;
  }

  MMorphism identity(const SeqObject& a) const {
    MMorphism f{a, a, std::vector<int>(a.size(), 1), {}};
    for (ObjId o : a) f.comps.push_back(base().id(o));
    return f;
  }

  /// h . g
  MMorphism compose(const MMorphism& h, const MMorphism& g) const {
    if (g.target != h.source) throw std::invalid_argument("MCat: morphisms are not composable");
    MMorphism out{g.source, h.target, {}, {}};
    std::size_t j = 0, at = 0;
    for (std::size_t i = 0; i < g.source.size(); ++i) {
      std::vector<MorId> hs;
      std::vector<int> sizes;
      int total = 0;
      for (int c = 0; c < g.blocks[i]; ++c, ++j) {
        hs.push_back(h.comps[j]);
        sizes.push_back(h.blocks[j]);
        total += h.blocks[j];
      }
      const auto d = std::span<const ObjId>(h.target).subspan(at, static_cast<std::size_t>(total));
      const MorId step = base().compose(mu_mor(hs), g.comps[i]);
      out.blocks.push_back(total);
      out.comps.push_back(base().compose(rebracket(d, sizes), step));
      at += static_cast<std::size_t>(total);
    }
    return out;
  }

  SeqObject tensor(const SeqObject& a, const SeqObject& b) const {
    SeqObject out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
  }

  MMorphism tensor(const MMorphism& f, const MMorphism& g) const {
    MMorphism out{tensor(f.source, g.source), tensor(f.target, g.target), f.blocks, f.comps};
    out.blocks.insert(out.blocks.end(), g.blocks.begin(), g.blocks.end());
    out.comps.insert(out.comps.end(), g.comps.begin(), g.comps.end());
    return out;
  }

  ObjId E_obj(const SeqObject& a) const { return mu(a); }

  /// mu(f_1, ..., f_m) followed by the rebracketing of the target.
  MorId E_mor(const MMorphism& f) const { return base().compose(rebracket(f.target, f.blocks), mu_mor(f.comps)); }

  SeqObject I_obj(ObjId b) const { return b == unit_ ? SeqObject{} : SeqObject{b}; }

  MMorphism I_mor(MorId f) const {
    const ObjId s = base().src(f), t = base().dst(f);
    if (s == unit_) {
      if (t != unit_) throw std::invalid_argument("MCat: I is undefined on a morphism out of the unit");
      return identity({});
    }
    return MMorphism{{s}, I_obj(t), {t == unit_ ? 0 : 1}, {f}};
  }

  /// The splitting morphism I(E(a)) -> a; absent when E(a) is the unit but
  /// a is not empty.
  std::optional<MMorphism> split(const SeqObject& a) const {
    const SeqObject ie = I_obj(E_obj(a));
    if (ie.empty()) {
      if (!a.empty()) return std::nullopt;
      return identity({});
    }
    return MMorphism{ie, a, {static_cast<int>(a.size())}, {base().id(ie[0])}};
  }

 private:
  void choose(MMorphism& cur, std::size_t i, std::size_t at, std::vector<MMorphism>& out) const {
    if (i == cur.source.size()) {
      out.push_back(cur);
      return;
    }
    const std::size_t len = static_cast<std::size_t>(cur.blocks[i]);
    const ObjId tgt = mu(std::span<const ObjId>(cur.target).subspan(at, len));
    for (MorId g : base().hom(cur.source[i], tgt)) {
      cur.comps[i] = g;
      choose(cur, i + 1, at + len, out);
    }
  }

  const ObjFn& obj_eval(int k) const {
    if (k > alg_.max_arity()) throw CapExceeded("MCat: arity " + std::to_string(k) + " exceeds the bound");
    auto it = mu_.find(k);
    if (it == mu_.end()) it = mu_.emplace(k, alg_.on_objects(to_tree(ParenWord::terminal(k)))).first;
    return it->second;
  }

  const MorOnMorFn& mor_eval(int k) const {
    if (k > alg_.max_arity()) throw CapExceeded("MCat: arity " + std::to_string(k) + " exceeds the bound");
    auto it = mu_mor_.find(k);
    if (it == mu_mor_.end()) it = mu_mor_.emplace(k, alg_.on_morphisms(to_tree(ParenWord::terminal(k)))).first;
    return it->second;
  }

  KAlgebra alg_;
  int max_len_;
  ObjId unit_ = 0;
  mutable std::map<int, ObjFn> mu_;
  mutable std::map<int, MorOnMorFn> mu_mor_;
  mutable std::map<std::string, MorFn> rebracket_;
};

inline nlohmann::json to_json(const MCat& c, const SeqObject& a) {
  nlohmann::json arr = nlohmann::json::array();
  for (ObjId o : a) arr.push_back(c.base().object_name(o));
  return arr;
}

inline nlohmann::json to_json(const MCat& c, const MMorphism& f) {
  nlohmann::json comps = nlohmann::json::array();
  for (MorId g : f.comps) comps.push_back(c.base().morphism(g).name);
  return {{"source", to_json(c, f.source)}, {"target", to_json(c, f.target)}, {"blocks", f.blocks}, {"comps", comps}};
}

/// Category laws, functoriality of E, E.I = Id, naturality of the
/// splitting morphisms and strictness of the tensor, over every morphism
/// between objects of length <= max_len.
inline CheckReport check_rectify(const MCat& c) {
  CheckReport rep;
  const FinCat& C = c.base();
  const auto objs = c.objects();
  std::map<std::pair<std::size_t, std::size_t>, std::vector<MMorphism>> homs;
  for (std::size_t a = 0; a < objs.size(); ++a)
    for (std::size_t b = 0; b < objs.size(); ++b) homs[{a, b}] = c.hom(objs[a], objs[b]);
  auto J = [&](const MMorphism& f) { return to_json(c, f); };

  for (const auto& [ab, fs] : homs)
    for (const MMorphism& f : fs) {
      ++rep.instances;
      if (!c.well_formed(f)) return rep.fail("generated morphism ill-typed", {{"morphism", J(f)}}), rep;
      if (!(c.compose(f, c.identity(f.source)) == f) || !(c.compose(c.identity(f.target), f) == f))
        return rep.fail("unit law", {{"morphism", J(f)}}), rep;
      if (C.src(c.E_mor(f)) != c.E_obj(f.source) || C.dst(c.E_mor(f)) != c.E_obj(f.target))
        return rep.fail("E typing", {{"morphism", J(f)}}), rep;
    }
  for (const SeqObject& a : objs)
    if (!C.is_identity(c.E_mor(c.identity(a))) || C.src(c.E_mor(c.identity(a))) != c.E_obj(a))
      return rep.fail("E preserves identities", {{"object", to_json(c, a)}}), rep;

  const std::size_t n = objs.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (const MMorphism& g : homs[{a, b}])
        for (std::size_t x = 0; x < n; ++x)
          for (const MMorphism& h : homs[{b, x}]) {
            ++rep.instances;
            const MMorphism hg = c.compose(h, g);
            if (!c.well_formed(hg)) return rep.fail("composite ill-typed", {{"g", J(g)}, {"h", J(h)}}), rep;
            if (C.compose(c.E_mor(h), c.E_mor(g)) != c.E_mor(hg)) return rep.fail("E preserves composition", {{"g", J(g)}, {"h", J(h)}}), rep;
            for (std::size_t y = 0; y < n; ++y)
              for (const MMorphism& k : homs[{x, y}]) {
                ++rep.instances;
                if (!(c.compose(k, hg) == c.compose(c.compose(k, h), g)))
                  return rep.fail("associativity", {{"f", J(g)}, {"g", J(h)}, {"h", J(k)}}), rep;
              }
          }

  for (ObjId o = 0; o < C.num_objects(); ++o)
    if (c.E_obj(c.I_obj(o)) != o) return rep.fail("E.I on objects", {{"object", C.object_name(o)}}), rep;
  for (MorId f = 0; f < C.num_morphisms(); ++f) {
    ++rep.instances;
    if (c.E_mor(c.I_mor(f)) != f) return rep.fail("E.I on morphisms", {{"morphism", C.morphism(f).name}}), rep;
  }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (const MMorphism& g : homs[{a, b}]) {
        auto sa = c.split(objs[a]);
        auto sb = c.split(objs[b]);
        if (!sa || !sb) continue;
        ++rep.instances;
        if (!(c.compose(*sb, c.I_mor(c.E_mor(g))) == c.compose(g, *sa)))
          return rep.fail("splitting naturality", {{"morphism", J(g)}}), rep;
      }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const SeqObject ab = c.tensor(objs[a], objs[b]);
      if (ab.size() > static_cast<std::size_t>(c.max_len())) continue;
      if (!(c.tensor(objs[a], SeqObject{}) == objs[a]) || !(c.tensor(SeqObject{}, objs[a]) == objs[a]))
        return rep.fail("tensor unit", {{"object", to_json(c, objs[a])}}), rep;
      for (std::size_t x = 0; x < n; ++x) {
        if (ab.size() + objs[x].size() > static_cast<std::size_t>(c.max_len())) continue;
        ++rep.instances;
        if (!(c.tensor(ab, objs[x]) == c.tensor(objs[a], c.tensor(objs[b], objs[x]))))
          return rep.fail("tensor associativity", {{"objects", {to_json(c, objs[a]), to_json(c, objs[b]), to_json(c, objs[x])}}}), rep;
      }
      // interchange: (h (x) h') . (g (x) g') = (h . g) (x) (h' . g')
      for (std::size_t a2 = 0; a2 < n; ++a2)
        for (std::size_t b2 = 0; b2 < n; ++b2) {
          if (objs[b].size() + objs[b2].size() > static_cast<std::size_t>(c.max_len()) ||
              objs[a].size() + objs[a2].size() > static_cast<std::size_t>(c.max_len()))
            continue;
          for (const MMorphism& g : homs[{a, b}])
            for (const MMorphism& g2 : homs[{a2, b2}])
              for (std::size_t x = 0; x < n; ++x)
                for (const MMorphism& h : homs[{b, x}])
                  for (std::size_t x2 = 0; x2 < n; ++x2) {
                    if (objs[x].size() + objs[x2].size() > static_cast<std::size_t>(c.max_len())) continue;
                    for (const MMorphism& h2 : homs[{b2, x2}]) {
                      ++rep.instances;
                      if (!(c.compose(c.tensor(h, h2), c.tensor(g, g2)) == c.tensor(c.compose(h, g), c.compose(h2, g2))))
                        return rep.fail("interchange", {{"g", J(g)}, {"g2", J(g2)}, {"h", J(h)}, {"h2", J(h2)}}), rep;
                    }
                  }
        }
    }
  return rep;
}

/// E(a (x) b) = mu_2(E a, E b) on objects and on morphisms up to max_len.
inline CheckReport check_e_strict(const MCat& c) {
  CheckReport rep;
  const auto objs = c.objects();
  for (const SeqObject& a : objs)
    for (const SeqObject& b : objs) {
      if (a.size() + b.size() > static_cast<std::size_t>(c.max_len())) continue;
      ++rep.instances;
      const ObjId ab[2] = {c.E_obj(a), c.E_obj(b)};
      if (c.E_obj(c.tensor(a, b)) != c.mu(ab))
        return rep.fail("E strict on objects", {{"objects", {to_json(c, a), to_json(c, b)}}}), rep;
    }
  for (const SeqObject& a : objs)
    for (const SeqObject& b : objs)
      for (const MMorphism& f : c.hom(a, b))
        for (const SeqObject& a2 : objs)
          for (const SeqObject& b2 : objs) {
            if (a.size() + a2.size() > static_cast<std::size_t>(c.max_len()) ||
                b.size() + b2.size() > static_cast<std::size_t>(c.max_len()))
              continue;
            for (const MMorphism& g : c.hom(a2, b2)) {
              ++rep.instances;
              const MorId fg[2] = {c.E_mor(f), c.E_mor(g)};
              if (c.E_mor(c.tensor(f, g)) != c.mu_mor(fg))
                return rep.fail("E strict on morphisms", {{"morphisms", {to_json(c, f), to_json(c, g)}}}), rep;
            }
          }
  return rep;
}

}  // namespace assoc
