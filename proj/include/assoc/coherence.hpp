// A_n-monoidal structures on finite categories: the axiom checker, the
// passage to and from actions of the filtered associahedral operad, and the
// A_infinity structure generated by a directed associator.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fincat.hpp"
#include "kposet.hpp"
#include "report.hpp"
#include "wordtree.hpp"

namespace assoc {

inline constexpr int kMaxBound = 12;

/// Superscript (i, j, k) of an associator: it rebrackets the block of j
/// arguments after the first i, followed by k more.
struct Split {
  int i = 0;
  int j = 0;
  int k = 0;
  int total() const { return i + j + k; }
};

using ObjFn = std::function<ObjId(std::span<const ObjId>)>;
using MorTupleFn = std::function<std::optional<MorId>(std::span<const MorId>)>;
using AlphaFn = std::function<std::optional<MorId>(Split, std::span<const ObjId>)>;

/// Multiplications mu_k and associators alpha^{i,j,k} on a finite category.
/// mu_obj / mu_mor receive tuples of length k (0 <= k <= max_arity()).
struct AnData {
  std::shared_ptr<const FinCat> cat;
  std::optional<int> n;  // nullopt: n = infinity
  int bound = 6;
  ObjId unit = 0;
  ObjFn mu_obj;
  MorTupleFn mu_mor;
  AlphaFn alpha;

  int max_arity() const { return n ? std::min(*n, bound) : bound; }
  /// alpha^{i,j,k} is part of the data iff both functors it relates exist.
  bool has_alpha(Split s) const { return std::max(s.total(), s.i + 1 + s.k) <= max_arity(); }
};

/// The unique morphism mu(sources) -> mu(targets) of a thin category.
inline MorTupleFn thin_mu_mor(std::shared_ptr<const FinCat> cat, ObjFn mu_obj) {
  return [cat, mu_obj](std::span<const MorId> fs) -> std::optional<MorId> {
    if (fs.size() > kMaxBound) throw std::invalid_argument("mu: arity above the supported bound");
    ObjId a[kMaxBound], b[kMaxBound];
    for (std::size_t i = 0; i < fs.size(); ++i) {
      a[i] = cat->src(fs[i]);
      b[i] = cat->dst(fs[i]);
    }
    return cat->unique(mu_obj(std::span<const ObjId>(a, fs.size())), mu_obj(std::span<const ObjId>(b, fs.size())));
  };
}

namespace detail {

// Source tuple of alpha^{i,j,k}: (A, mu_j(B), C).
inline void alpha_source_args(const ObjFn& mu, Split s, std::span<const ObjId> t, std::vector<ObjId>& out) {
  out.clear();
  out.insert(out.end(), t.begin(), t.begin() + s.i);
  out.push_back(mu(t.subspan(static_cast<std::size_t>(s.i), static_cast<std::size_t>(s.j))));
  out.insert(out.end(), t.begin() + s.i + s.j, t.end());
}

}  // namespace detail

/// The unique morphism from the source to the target of each associator
/// component, for thin categories.
inline AlphaFn thin_alpha(std::shared_ptr<const FinCat> cat, ObjFn mu_obj) {
  return [cat, mu_obj](Split s, std::span<const ObjId> t) -> std::optional<MorId> {
    if (t.size() > kMaxBound) throw std::invalid_argument("alpha: arity above the supported bound");
    ObjId src[kMaxBound + 1];
    std::size_t q = 0;
    for (int x = 0; x < s.i; ++x) src[q++] = t[static_cast<std::size_t>(x)];
    src[q++] = mu_obj(t.subspan(static_cast<std::size_t>(s.i), static_cast<std::size_t>(s.j)));
    for (std::size_t x = static_cast<std::size_t>(s.i + s.j); x < t.size(); ++x) src[q++] = t[x];
    return cat->unique(mu_obj(std::span<const ObjId>(src, q)), mu_obj(t));
  };
}

inline AlphaFn identity_alpha(std::shared_ptr<const FinCat> cat, ObjFn mu_obj) {
  return [cat, mu_obj](Split, std::span<const ObjId> t) -> std::optional<MorId> { return cat->id(mu_obj(t)); };
}

namespace detail {

// Calls f(span) for every tuple of `len` values in [0, base), lexicographically.
template <class F>
bool for_each_index_tuple(int len, int base, F&& f) {
  std::vector<int> t(static_cast<std::size_t>(len), 0);
  if (base == 0 && len > 0) return true;
  while (true) {
    if (!f(std::span<const int>(t))) return false;
    int p = len - 1;
    while (p >= 0 && ++t[static_cast<std::size_t>(p)] == base) t[static_cast<std::size_t>(p--)] = 0;
    if (p < 0) return true;
  }
}

// Every (len)-tuple of nonnegative integers summing to at most `total`,
// lexicographically. f returns false to stop.
template <class F>
bool for_each_params(int len, int total, F&& f) {
  std::vector<int> p(static_cast<std::size_t>(len), 0);
  std::function<bool(int, int)> rec = [&](int i, int left) -> bool {
    if (i == len) return f(std::span<const int>(p));
    for (int v = 0; v <= left; ++v) {
      p[static_cast<std::size_t>(i)] = v;
      if (!rec(i + 1, left - v)) return false;
    }
    return true;
  };
  return rec(0, total);
}

inline nlohmann::json names(const FinCat& c, std::span<const ObjId> t) {
  nlohmann::json a = nlohmann::json::array();
  for (ObjId o : t) a.push_back(c.object_name(o));
  return a;
}

inline nlohmann::json mor_names(const FinCat& c, std::span<const MorId> t) {
  nlohmann::json a = nlohmann::json::array();
  for (MorId f : t) a.push_back(c.morphism(f).name);
  return a;
}

// Morphism tuples of length len used for functoriality and naturality:
// every tuple when there are few, otherwise the tuples with at most one
// non-identity entry.
template <class F>
bool for_each_generator_tuple(const FinCat& c, int len, F&& f) {
  const int nm = c.num_morphisms();
  double count = 1;
  for (int i = 0; i < len; ++i) count *= nm;
  std::vector<MorId> t(static_cast<std::size_t>(len));
  if (count <= 20000) {
    return for_each_index_tuple(len, nm, [&](std::span<const int> ix) {
      for (int i = 0; i < len; ++i) t[static_cast<std::size_t>(i)] = ix[static_cast<std::size_t>(i)];
      return f(std::span<const MorId>(t));
    });
  }
  const int no = c.num_objects();
  for (int slot = -1; slot < len; ++slot) {
    const int fill = slot < 0 ? len : len - 1;
    for (MorId g = 0; g < (slot < 0 ? 1 : nm); ++g) {
      if (slot >= 0 && c.is_identity(g)) continue;
      bool go = for_each_index_tuple(fill, no, [&](std::span<const int> ix) {
        int q = 0;
        for (int i = 0; i < len; ++i)
          t[static_cast<std::size_t>(i)] = i == slot ? g : c.id(ix[static_cast<std::size_t>(q++)]);
        return f(std::span<const MorId>(t));
      });
      if (!go) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Exhaustively checks conditions 1 and 2, functoriality of each mu_k,
/// condition (i), typing and naturality of alpha, and the diagrams (ii)-(vi)
/// over all object tuples of total arity at most max_arity(). Equalities of
/// parallel morphisms are skipped in thin categories, where they always hold.
inline CheckReport check_an_axioms(const AnData& d) {
  CheckReport rep;
  if (!d.cat || !d.mu_obj || !d.mu_mor || !d.alpha) throw std::invalid_argument("check_an_axioms: incomplete data");
  const FinCat& C = *d.cat;
  const int M = d.max_arity();
  if (M < 0 || M > kMaxBound) throw std::invalid_argument("check_an_axioms: bound out of range");
  const int O = C.num_objects();
  const bool thin = C.thin();

  std::vector<ObjId> buf, buf2;
  auto mu = [&](std::span<const ObjId> t) { return d.mu_obj(t); };
  // Every call site passes a tuple whose entries are objects; a missing
  // entry is reported and the check stops.
  auto mmu = [&](std::span<const MorId> fs, const char* what) -> std::optional<MorId> {
    if (fs.empty()) return C.id(d.unit);
    auto r = d.mu_mor(fs);
    if (!r) rep.fail(std::string("missing mu morphism (") + what + ")", {{"morphisms", detail::mor_names(C, fs)}});
    return r;
  };
  auto alpha = [&](Split s, std::span<const ObjId> t) -> std::optional<MorId> {
    auto r = d.alpha(s, t);
    if (!r)
      rep.fail("missing alpha component", {{"split", {s.i, s.j, s.k}}, {"objects", detail::names(C, t)}});
    return r;
  };
  auto as_objs = [&](std::span<const int> ix) {
    buf.assign(ix.begin(), ix.end());
    return std::span<const ObjId>(buf);
  };

  // condition 1
  for (ObjId a = 0; a < O && rep.ok && M >= 1; ++a) {
    ++rep.instances;
    const ObjId t[1] = {a};
    if (mu(t) != a) rep.fail("condition 1", {{"object", C.object_name(a)}});
  }
  for (MorId f = 0; f < C.num_morphisms() && rep.ok && M >= 1; ++f) {
    ++rep.instances;
    const MorId t[1] = {f};
    auto r = mmu(t, "condition 1");
    if (r && *r != f) rep.fail("condition 1", {{"morphism", C.morphism(f).name}});
  }
  if (!rep.ok) return rep;

  // condition 2
  ++rep.instances;
  if (mu({}) != d.unit) return rep.fail("condition 2", {{"arity", 0}}), rep;
  for (int k = 1; k <= M && rep.ok; ++k)
    for (int p = 0; p < k && rep.ok; ++p)
      detail::for_each_index_tuple(k - 1, O, [&](std::span<const int> ix) {
        ++rep.instances;
        buf2.assign(ix.begin(), ix.end());
        buf2.insert(buf2.begin() + p, d.unit);
        if (mu(buf2) != mu(as_objs(ix)))
          rep.fail("condition 2", {{"arity", k}, {"position", p + 1}, {"objects", detail::names(C, buf2)}});
        return rep.ok;
      });
  if (!thin)
    for (int k = 1; k <= M && rep.ok; ++k)
      for (int p = 0; p < k && rep.ok; ++p)
        detail::for_each_generator_tuple(C, k - 1, [&](std::span<const MorId> fs) {
          ++rep.instances;
          std::vector<MorId> with(fs.begin(), fs.end());
          with.insert(with.begin() + p, C.id(d.unit));
          auto a = mmu(with, "condition 2");
          auto b = mmu(fs, "condition 2");
          if (a && b && *a != *b)
            rep.fail("condition 2", {{"arity", k}, {"position", p + 1}, {"morphisms", detail::mor_names(C, with)}});
          return rep.ok;
        });
  if (!rep.ok) return rep;

  // functoriality of mu_k
  for (int k = 2; k <= M && rep.ok; ++k) {
    detail::for_each_generator_tuple(C, k, [&](std::span<const MorId> fs) {
      ++rep.instances;
      ObjId sa[kMaxBound], sb[kMaxBound];
      for (std::size_t i = 0; i < fs.size(); ++i) {
        sa[i] = C.src(fs[i]);
        sb[i] = C.dst(fs[i]);
      }
      const std::span<const ObjId> a(sa, fs.size()), b(sb, fs.size());
      auto r = mmu(fs, "functoriality");
      if (!r) return false;
      if (C.src(*r) != mu(a) || C.dst(*r) != mu(b)) {
        rep.fail("mu functoriality (typing)", {{"arity", k}, {"morphisms", detail::mor_names(C, fs)}});
        return false;
      }
      if (thin) return true;
      bool all_ids = std::all_of(fs.begin(), fs.end(), [&](MorId f) { return C.is_identity(f); });
      if (all_ids && *r != C.id(mu(a))) {
        rep.fail("mu functoriality (identity)", {{"arity", k}, {"morphisms", detail::mor_names(C, fs)}});
        return false;
      }
      // mu(f_1..f_k) = mu(id.., f_k) ... mu(f_1, id..)
      std::vector<MorId> slot(fs.size());
      MorId acc = C.id(mu(a));
      for (std::size_t s = 0; s < fs.size(); ++s) {
        for (std::size_t i = 0; i < fs.size(); ++i) slot[i] = i < s ? C.id(b[i]) : i == s ? fs[i] : C.id(a[i]);
        auto g = mmu(slot, "functoriality");
        if (!g) return false;
        acc = C.compose(*g, acc);
      }
      if (acc != *r) {
        rep.fail("mu functoriality (composition)", {{"arity", k}, {"morphisms", detail::mor_names(C, fs)}});
        return false;
      }
      return true;
    });
    if (thin || !rep.ok) continue;
    // composition inside one slot
    for (int p = 0; p < k && rep.ok; ++p)
      for (MorId g = 0; g < C.num_morphisms() && rep.ok; ++g)
        for (MorId f = 0; f < C.num_morphisms() && rep.ok; ++f) {
          if (C.dst(f) != C.src(g)) continue;
          detail::for_each_index_tuple(k - 1, O, [&](std::span<const int> ix) {
            ++rep.instances;
            std::vector<MorId> tf, tg, tgf;
            int q = 0;
            for (int i = 0; i < k; ++i) {
              if (i == p) {
                tf.push_back(f);
                tg.push_back(g);
                tgf.push_back(C.compose(g, f));
              } else {
                MorId e = C.id(ix[static_cast<std::size_t>(q++)]);
                tf.push_back(e);
                tg.push_back(e);
                tgf.push_back(e);
              }
            }
            auto a = mmu(tf, "functoriality"), b = mmu(tg, "functoriality"), c = mmu(tgf, "functoriality");
            if (!a || !b || !c) return false;
            if (C.compose(*b, *a) != *c) {
              rep.fail("mu functoriality (composition)", {{"arity", k}, {"morphisms", detail::mor_names(C, tgf)}});
              return false;
            }
            return true;
          });
        }
  }
  if (!rep.ok) return rep;

  // enumerate the splits in canonical order
  std::vector<Split> splits;
  for (int t = 0; t <= M; ++t)
    for (int i = 0; i <= t; ++i)
      for (int j = 0; i + j <= t; ++j) {
        Split s{i, j, t - i - j};
        if (d.has_alpha(s)) splits.push_back(s);
      }
  auto forced = [](Split s) { return s.j <= 1 || (s.i == 0 && s.k == 0); };

  // condition (i), then typing of the remaining components
  for (int pass = 0; pass < 2 && rep.ok; ++pass)
    for (Split s : splits) {
      if (forced(s) != (pass == 0)) continue;
      detail::for_each_index_tuple(s.total(), O, [&](std::span<const int> ix) {
        ++rep.instances;
        auto t = as_objs(ix);
        auto a = alpha(s, t);
        if (!a) return false;
        detail::alpha_source_args(d.mu_obj, s, t, buf2);
        const ObjId src = mu(buf2), dst = mu(t);
        auto witness = [&] {
          return nlohmann::json{
              {"split", {s.i, s.j, s.k}}, {"objects", detail::names(C, t)}, {"value", C.morphism(*a).name}};
        };
        if (pass == 0 && *a != C.id(dst)) {
          rep.fail("(i)", witness());
          return false;
        }
        if (C.src(*a) != src || C.dst(*a) != dst) {
          nlohmann::json w = witness();
          w["expected_source"] = C.object_name(src);
          w["expected_target"] = C.object_name(dst);
          rep.fail("alpha typing", w);
          return false;
        }
        return true;
      });
      if (!rep.ok) return rep;
    }

  // naturality of alpha
  if (!thin)
    for (Split s : splits) {
      detail::for_each_generator_tuple(C, s.total(), [&](std::span<const MorId> fs) {
        ++rep.instances;
        std::vector<ObjId> a(fs.size()), b(fs.size());
        for (std::size_t i = 0; i < fs.size(); ++i) {
          a[i] = C.src(fs[i]);
          b[i] = C.dst(fs[i]);
        }
        auto inner = mmu(fs.subspan(static_cast<std::size_t>(s.i), static_cast<std::size_t>(s.j)), "naturality");
        if (!inner) return false;
        std::vector<MorId> outer(fs.begin(), fs.begin() + s.i);
        outer.push_back(*inner);
        outer.insert(outer.end(), fs.begin() + s.i + s.j, fs.end());
        auto lhs_mu = mmu(outer, "naturality");
        auto rhs_mu = mmu(fs, "naturality");
        auto at_b = alpha(s, b), at_a = alpha(s, a);
        if (!lhs_mu || !rhs_mu || !at_b || !at_a) return false;
        if (C.compose(*at_b, *lhs_mu) != C.compose(*rhs_mu, *at_a)) {
          rep.fail("alpha naturality", {{"split", {s.i, s.j, s.k}}, {"morphisms", detail::mor_names(C, fs)}});
          return false;
        }
        return true;
      });
      if (!rep.ok) return rep;
    }

  if (thin) return rep;

  // Instantiates a diagram for every parameter vector and object tuple.
  auto diagram = [&](const char* name, int nparams,
                     const std::function<bool(std::span<const int>)>& admissible,
                     const std::function<std::optional<std::pair<MorId, MorId>>(std::span<const int>,
                                                                                std::span<const ObjId>)>& sides) {
    detail::for_each_params(nparams, M, [&](std::span<const int> p) {
      if (!admissible(p)) return true;
      int len = 0;
      for (int v : p) len += v;
      return detail::for_each_index_tuple(len, O, [&](std::span<const int> ix) {
        ++rep.instances;
        std::vector<ObjId> t(ix.begin(), ix.end());
        auto r = sides(p, t);
        if (!r) return false;
        if (r->first != r->second) {
          rep.fail(name, {{"params", std::vector<int>(p.begin(), p.end())}, {"objects", detail::names(C, t)}});
          return false;
        }
        return true;
      });
    });
  };
  auto cat_objs = [](std::initializer_list<std::span<const ObjId>> parts) {
    std::vector<ObjId> out;
    for (auto part : parts) out.insert(out.end(), part.begin(), part.end());
    return out;
  };
  auto sub = [](std::span<const ObjId> t, int from, int len) {
    return t.subspan(static_cast<std::size_t>(from), static_cast<std::size_t>(len));
  };
  const ObjId zero[1] = {d.unit};

  // (ii) alpha^{a+b+1,c,d}(A,0,B,C,D) = alpha^{a+b,c,d}(A,B,C,D)
  diagram(
      "(ii)", 4,
      [&](std::span<const int> p) {
        return d.has_alpha({p[0] + p[1] + 1, p[2], p[3]}) && d.has_alpha({p[0] + p[1], p[2], p[3]});
      },
      [&](std::span<const int> p, std::span<const ObjId> t) -> std::optional<std::pair<MorId, MorId>> {
        const int a = p[0], b = p[1], c = p[2], dd = p[3];
        auto x = cat_objs({sub(t, 0, a), zero, sub(t, a, b + c + dd)});
        auto l = alpha({a + b + 1, c, dd}, x), r = alpha({a + b, c, dd}, t);
        if (!l || !r) return std::nullopt;
        return std::pair{*l, *r};
      });
  if (!rep.ok) return rep;

  // (iii) alpha^{a,b,c+d+1}(A,B,C,0,D) = alpha^{a,b,c+d}(A,B,C,D)
  diagram(
      "(iii)", 4,
      [&](std::span<const int> p) {
        return d.has_alpha({p[0], p[1], p[2] + p[3] + 1}) && d.has_alpha({p[0], p[1], p[2] + p[3]});
      },
      [&](std::span<const int> p, std::span<const ObjId> t) -> std::optional<std::pair<MorId, MorId>> {
        const int a = p[0], b = p[1], c = p[2], dd = p[3];
        auto x = cat_objs({sub(t, 0, a + b + c), zero, sub(t, a + b + c, dd)});
        auto l = alpha({a, b, c + dd + 1}, x), r = alpha({a, b, c + dd}, t);
        if (!l || !r) return std::nullopt;
        return std::pair{*l, *r};
      });
  if (!rep.ok) return rep;

  // (iv) alpha^{a,b+c+1,d}(A,B,0,C,D) = alpha^{a,b+c,d}(A,B,C,D)
  diagram(
      "(iv)", 4,
      [&](std::span<const int> p) {
        return d.has_alpha({p[0], p[1] + p[2] + 1, p[3]}) && d.has_alpha({p[0], p[1] + p[2], p[3]});
      },
      [&](std::span<const int> p, std::span<const ObjId> t) -> std::optional<std::pair<MorId, MorId>> {
        const int a = p[0], b = p[1], c = p[2], dd = p[3];
        auto x = cat_objs({sub(t, 0, a + b), zero, sub(t, a + b, c + dd)});
        auto l = alpha({a, b + c + 1, dd}, x), r = alpha({a, b + c, dd}, t);
        if (!l || !r) return std::nullopt;
        return std::pair{*l, *r};
      });
  if (!rep.ok) return rep;

  // (v) two disjoint blocks B and D
  diagram(
      "(v)", 5,
      [&](std::span<const int> p) {
        const int a = p[0], b = p[1], c = p[2], dd = p[3], e = p[4];
        return d.has_alpha({a, b, c + e + 1}) && d.has_alpha({a + b + c, dd, e}) &&
               d.has_alpha({a + c + 1, dd, e}) && d.has_alpha({a, b, c + dd + e});
      },
      [&](std::span<const int> p, std::span<const ObjId> t) -> std::optional<std::pair<MorId, MorId>> {
        const int a = p[0], b = p[1], c = p[2], dd = p[3], e = p[4];
        auto A = sub(t, 0, a), B = sub(t, a, b), Cc = sub(t, a + b, c), D = sub(t, a + b + c, dd),
             E = sub(t, a + b + c + dd, e);
        const ObjId muD[1] = {mu(D)}, muB[1] = {mu(B)};
        auto top = alpha({a, b, c + e + 1}, cat_objs({A, B, Cc, muD, E}));
        auto right = alpha({a + b + c, dd, e}, t);
        auto left = alpha({a + c + 1, dd, e}, cat_objs({A, muB, Cc, D, E}));
        auto bottom = alpha({a, b, c + dd + e}, t);
        if (!top || !right || !left || !bottom) return std::nullopt;
        return std::pair{C.compose(*right, *top), C.compose(*bottom, *left)};
      });
  if (!rep.ok) return rep;

  // (vi) the block C nested inside the block (B, C, D)
  diagram(
      "(vi)", 5,
      [&](std::span<const int> p) {
        const int a = p[0], b = p[1], c = p[2], dd = p[3], e = p[4];
        return a + e + 1 <= M && d.has_alpha({b, c, dd}) && d.has_alpha({a, b + c + dd, e}) &&
               d.has_alpha({a, b + dd + 1, e}) && d.has_alpha({a + b, c, dd + e});
      },
      [&](std::span<const int> p, std::span<const ObjId> t) -> std::optional<std::pair<MorId, MorId>> {
        const int a = p[0], b = p[1], c = p[2], dd = p[3], e = p[4];
        auto A = sub(t, 0, a), B = sub(t, a, b), Cc = sub(t, a + b, c), D = sub(t, a + b + c, dd),
             E = sub(t, a + b + c + dd, e);
        auto inner = alpha({b, c, dd}, cat_objs({B, Cc, D}));
        if (!inner) return std::nullopt;
        std::vector<MorId> row;
        for (ObjId o : A) row.push_back(C.id(o));
        row.push_back(*inner);
        for (ObjId o : E) row.push_back(C.id(o));
        auto top = mmu(row, "(vi)");
        auto right = alpha({a, b + c + dd, e}, t);
        const ObjId muC[1] = {mu(Cc)};
        auto left = alpha({a, b + dd + 1, e}, cat_objs({A, B, muC, D, E}));
        auto bottom = alpha({a + b, c, dd + e}, t);
        if (!top || !right || !left || !bottom) return std::nullopt;
        return std::pair{C.compose(*right, *top), C.compose(*bottom, *left)};
      });
  return rep;
}

// ---------------------------------------------------------------------------
// Actions of the filtered operad

using MorFn = std::function<MorId(std::span<const ObjId>)>;
using MorOnMorFn = std::function<MorId(std::span<const MorId>)>;

/// An action theta_i of K^(n)_i x C^i -> C, given by evaluators compiled per
/// tree or per morphism of K.
struct KAlgebra {
  std::shared_ptr<const FinCat> cat;
  std::optional<int> n;
  int bound = 6;
  std::function<ObjFn(const StableTree&)> on_objects;            // T |-> theta(T, -)
  std::function<MorFn(const KMorphism&)> on_poset_morphisms;     // l |-> theta(l, -) on objects
  std::function<MorOnMorFn(const StableTree&)> on_morphisms;     // T |-> theta(T, -) on morphisms

  int max_arity() const { return n ? std::min(*n, bound) : bound; }
};

/// Raised when the input to a construction violates its hypotheses.
class HypothesisError : public std::runtime_error {
 public:
  explicit HypothesisError(CheckReport r)
      : std::runtime_error("hypothesis violated: " + r.failure + " " + r.witness.dump()), report(std::move(r)) {}
  CheckReport report;
};

namespace detail {

inline void require_valence(const StableTree& t, int max_arity) {
  if (max_valence(t) > max_arity)
    throw std::invalid_argument("tree " + render(t) + " has a node of valence above " + std::to_string(max_arity));
}

inline ObjFn compile_obj(const AnData& d, const StableTree& t) {
  if (t.is_empty()) return [u = d.unit](std::span<const ObjId>) { return u; };
  if (t.is_leaf()) return [](std::span<const ObjId> a) { return a[0]; };
  std::vector<ObjFn> kids;
  std::vector<std::size_t> off, len;
  std::size_t at = 0;
  for (const StableTree& c : t.children()) {
    kids.push_back(compile_obj(d, c));
    off.push_back(at);
    len.push_back(static_cast<std::size_t>(c.leaves()));
    at += len.back();
  }
  return [mu = d.mu_obj, kids = std::move(kids), off = std::move(off), len = std::move(len)](std::span<const ObjId> a) {
    ObjId vals[kMaxBound];
    for (std::size_t i = 0; i < kids.size(); ++i) vals[i] = kids[i](a.subspan(off[i], len[i]));
    return mu(std::span<const ObjId>(vals, kids.size()));
  };
}

inline MorId must(std::optional<MorId> f, const char* what) {
  if (!f) throw std::invalid_argument(std::string("missing table entry: ") + what);
  return *f;
}

inline MorOnMorFn compile_on_mor(const AnData& d, const StableTree& t) {
  if (t.is_empty()) return [cat = d.cat, u = d.unit](std::span<const MorId>) { return cat->id(u); };
  if (t.is_leaf()) return [](std::span<const MorId> f) { return f[0]; };
  std::vector<MorOnMorFn> kids;
  std::vector<std::size_t> off, len;
  std::size_t at = 0;
  for (const StableTree& c : t.children()) {
    kids.push_back(compile_on_mor(d, c));
    off.push_back(at);
    len.push_back(static_cast<std::size_t>(c.leaves()));
    at += len.back();
  }
  return [mu = d.mu_mor, kids = std::move(kids), off = std::move(off), len = std::move(len)](std::span<const MorId> f) {
    MorId vals[kMaxBound];
    for (std::size_t i = 0; i < kids.size(); ++i) vals[i] = kids[i](f.subspan(off[i], len[i]));
    return must(mu(std::span<const MorId>(vals, kids.size())), "mu on morphisms");
  };
}

// theta of the indecomposable morphism of t that contracts the edge whose
// leaf span is [p.first, p.last] (positions local to t).
inline MorFn compile_drop(const AnData& d, const StableTree& t, Interval p) {
  const auto& ch = t.children();
  const int k = static_cast<int>(ch.size());
  std::vector<ObjFn> vals;
  std::vector<std::size_t> off, len;
  std::size_t at = 0;
  int hit = -1;
  for (int j = 0; j < k; ++j) {
    const int lo = static_cast<int>(at) + 1, hi = static_cast<int>(at) + ch[static_cast<std::size_t>(j)].leaves();
    if (lo <= p.first && p.last <= hi) hit = j;
    vals.push_back(compile_obj(d, ch[static_cast<std::size_t>(j)]));
    off.push_back(at);
    len.push_back(static_cast<std::size_t>(hi - lo + 1));
    at += len.back();
  }
  if (hit < 0) throw std::logic_error("compile_drop: interval not in tree");
  const StableTree& c = ch[static_cast<std::size_t>(hit)];
  const int lo = static_cast<int>(off[static_cast<std::size_t>(hit)]) + 1;
  const int hi = lo + c.leaves() - 1;
  if (p.first == lo && p.last == hi) {
    // the edge below child `hit`: an associator at the evaluated objects
    std::vector<ObjFn> grand;
    std::vector<std::size_t> goff, glen;
    std::size_t g = off[static_cast<std::size_t>(hit)];
    for (const StableTree& gc : c.children()) {
      grand.push_back(compile_obj(d, gc));
      goff.push_back(g);
      glen.push_back(static_cast<std::size_t>(gc.leaves()));
      g += glen.back();
    }
    const Split s{hit, static_cast<int>(grand.size()), k - hit - 1};
    return [alpha = d.alpha, s, vals, off, len, grand, goff, glen, hit](std::span<const ObjId> a) {
      ObjId args[kMaxBound];
      std::size_t q = 0;
      for (std::size_t i = 0; i < vals.size(); ++i) {
        if (static_cast<int>(i) == hit) {
          for (std::size_t r = 0; r < grand.size(); ++r) args[q++] = grand[r](a.subspan(goff[r], glen[r]));
        } else {
          args[q++] = vals[i](a.subspan(off[i], len[i]));
        }
      }
      return must(alpha(s, std::span<const ObjId>(args, q)), "alpha");
    };
  }
  // an edge inside child `hit`
  MorFn inner = compile_drop(d, c, {p.first - lo + 1, p.last - lo + 1});
  return [cat = d.cat, mu = d.mu_mor, vals, off, len, inner, hit](std::span<const ObjId> a) {
    MorId args[kMaxBound];
    for (std::size_t i = 0; i < vals.size(); ++i)
      args[i] = static_cast<int>(i) == hit ? inner(a.subspan(off[i], len[i])) : cat->id(vals[i](a.subspan(off[i], len[i])));
    return must(mu(std::span<const MorId>(args, vals.size())), "mu on morphisms");
  };
}

}  // namespace detail

/// The action of K^(n) built from A_n data by recursion on trees; a general
/// morphism is the composite along the canonical order of its dropped
/// intervals. With verify_cubes set (and a category that is not thin), every
/// evaluation also checks that all 2-faces of the interval cube commute and
/// throws std::logic_error otherwise.
inline KAlgebra theta_from_an(const AnData& d, bool verify_cubes = true) {
  KAlgebra k;
  k.cat = d.cat;
  k.n = d.n;
  k.bound = d.bound;
  const int M = d.max_arity();
  k.on_objects = [d, M](const StableTree& t) {
    detail::require_valence(t, M);
    return detail::compile_obj(d, t);
  };
  k.on_morphisms = [d, M](const StableTree& t) {
    detail::require_valence(t, M);
    return detail::compile_on_mor(d, t);
  };
  k.on_poset_morphisms = [d, M, verify_cubes](const KMorphism& f) -> MorFn {
    const StableTree src = to_tree(f.source);
    detail::require_valence(src, M);
    detail::require_valence(to_tree(f.target), M);
    const CubeIso cube = interval_cube(f);
    const int dim = cube.dimension();
    ObjFn at_source = detail::compile_obj(d, src);
    if (dim == 0)
      return [cat = d.cat, at_source](std::span<const ObjId> a) { return cat->id(at_source(a)); };

    // the word reached after dropping the intervals in `dropped_mask`
    auto word_after = [&](std::uint32_t dropped_mask) {
      return cube.word_at(((1u << dim) - 1) & ~dropped_mask);
    };
    std::vector<MorFn> path;
    for (int i = 0; i < dim; ++i)
      path.push_back(detail::compile_drop(d, to_tree(word_after((1u << i) - 1)), cube.dropped[static_cast<std::size_t>(i)]));
    const bool check = verify_cubes && !d.cat->thin() && dim >= 2;
    std::vector<ObjFn> vertex;
    std::vector<MorFn> edge;
    if (check) {
      for (std::uint32_t v = 0; v < (1u << dim); ++v) {
        const StableTree tv = to_tree(word_after(v));
        vertex.push_back(detail::compile_obj(d, tv));
        for (int i = 0; i < dim; ++i)
          edge.push_back(v & (1u << i) ? MorFn{}
                                       : detail::compile_drop(d, tv, cube.dropped[static_cast<std::size_t>(i)]));
      }
    }
    return [cat = d.cat, path, check, vertex, edge, dim](std::span<const ObjId> a) {
      MorId acc = path[0](a);
      for (std::size_t i = 1; i < path.size(); ++i) acc = cat->compose(path[i](a), acc);
      if (check) {
        CubeDiagram D(dim);
        for (std::uint32_t v = 0; v < (1u << dim); ++v) {
          D.vertices[v] = vertex[v](a);
          for (int i = 0; i < dim; ++i)
            if (!(v & (1u << i))) D.edge(v, i) = edge[v * static_cast<std::size_t>(dim) + static_cast<std::size_t>(i)](a);
        }
        if (!check_cube_commutes(*cat, D).faces_ok)
          throw std::logic_error("theta: a 2-face of an interval cube does not commute");
      }
      return acc;
    };
  };
  return k;
}

/// A_n data read off an action: mu_i is theta at the terminal word and
/// alpha^{i,j,k} is theta at the morphism dropping the interval [i+1, i+j].
inline AnData an_from_theta(const KAlgebra& alg) {
  AnData d;
  d.cat = alg.cat;
  d.n = alg.n;
  d.bound = alg.bound;
  const int M = alg.max_arity();
  if (M > kMaxBound) throw std::invalid_argument("an_from_theta: bound out of range");
  auto mus = std::make_shared<std::vector<ObjFn>>();
  auto mus_mor = std::make_shared<std::vector<MorOnMorFn>>();
  for (int i = 0; i <= M; ++i) {
    mus->push_back(alg.on_objects(to_tree(ParenWord::terminal(i))));
    mus_mor->push_back(alg.on_morphisms(to_tree(ParenWord::terminal(i))));
  }
  d.unit = (*mus)[0]({});
  for (ObjId a = 0; a < alg.cat->num_objects(); ++a) {
    const ObjId t[1] = {a};
    if ((*mus)[1](t) != a) throw std::invalid_argument("an_from_theta: the operad unit does not act as the identity");
  }
  d.mu_obj = [mus](std::span<const ObjId> t) { return (*mus)[t.size()](t); };
  d.mu_mor = [mus_mor](std::span<const MorId> f) -> std::optional<MorId> { return (*mus_mor)[f.size()](f); };

  const int S = M + 2;
  auto alphas = std::make_shared<std::vector<MorFn>>(static_cast<std::size_t>(S * S * S));
  for (int i = 0; i <= M; ++i)
    for (int j = 0; i + j <= M + 1; ++j)
      for (int k = 0; i + j + k <= M + 1; ++k) {
        if (!d.has_alpha({i, j, k})) continue;
        const int m = i + j + k;
        MorFn f;
        if (j >= 2 && j < m) {
          f = alg.on_poset_morphisms(KMorphism(ParenWord(m, {{i + 1, i + j}}), ParenWord::terminal(m)));
        } else {
          f = [cat = alg.cat, mu = (*mus)[static_cast<std::size_t>(m)]](std::span<const ObjId> a) {
            return cat->id(mu(a));
          };
        }
        (*alphas)[static_cast<std::size_t>((i * S + j) * S + k)] = std::move(f);
      }
  d.alpha = [alphas, S](Split s, std::span<const ObjId> a) -> std::optional<MorId> {
    const MorFn& f = (*alphas)[static_cast<std::size_t>((s.i * S + s.j) * S + s.k)];
    if (!f) return std::nullopt;
    return f(a);
  };
  return d;
}

/// Table equality of two A_n structures on the same category, over every
/// object tuple (and generating morphism tuple) up to the bound.
inline CheckReport compare_an(const AnData& x, const AnData& y) {
  CheckReport rep;
  const FinCat& C = *x.cat;
  const int M = x.max_arity();
  if (M != y.max_arity()) return rep.fail("bound", {{"left", M}, {"right", y.max_arity()}}), rep;
  ++rep.instances;
  if (x.unit != y.unit) rep.fail("unit", {{"left", C.object_name(x.unit)}, {"right", C.object_name(y.unit)}});
  std::vector<ObjId> t;
  for (int k = 0; k <= M && rep.ok; ++k)
    detail::for_each_index_tuple(k, C.num_objects(), [&](std::span<const int> ix) {
      ++rep.instances;
      t.assign(ix.begin(), ix.end());
      if (x.mu_obj(t) != y.mu_obj(t)) rep.fail("mu", {{"objects", detail::names(C, t)}});
      return rep.ok;
    });
  for (int k = 1; k <= M && rep.ok; ++k)
    detail::for_each_generator_tuple(C, k, [&](std::span<const MorId> fs) {
      ++rep.instances;
      if (x.mu_mor(fs) != y.mu_mor(fs)) rep.fail("mu on morphisms", {{"morphisms", detail::mor_names(C, fs)}});
      return rep.ok;
    });
  for (int m = 0; m <= M && rep.ok; ++m)
    for (int i = 0; i <= m + 1 && rep.ok; ++i)
      for (int j = 0; i + j <= m + 1 && rep.ok; ++j) {
        const Split s{i, j, m - i - j};
        if (s.k < 0 || !x.has_alpha(s)) continue;
        detail::for_each_index_tuple(m, C.num_objects(), [&](std::span<const int> ix) {
          ++rep.instances;
          t.assign(ix.begin(), ix.end());
          if (x.alpha(s, t) != y.alpha(s, t))
            rep.fail("alpha", {{"split", {s.i, s.j, s.k}}, {"objects", detail::names(C, t)}});
          return rep.ok;
        });
      }
  return rep;
}

namespace detail {

inline std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace detail

/// Compatibility of an action with operadic composition, for every
/// composite gamma(s; T_1..T_m) whose outer arity and total inner arity are
/// at most max_total: theta(gamma(s; T), A) = theta(s, theta(T_1, A_1), ...)
/// on all object tuples. In categories that are not thin the same is checked
/// on morphisms: generating morphism tuples, and covers of s or of one T_i.
inline CheckReport check_theta_compat(const KAlgebra& alg, int max_total) {
  CheckReport rep;
  const FinCat& C = *alg.cat;
  const int M = alg.max_arity();
  const std::size_t O = static_cast<std::size_t>(C.num_objects());

  // dense tables theta(w, -) for all words of length <= max_total
  std::vector<std::vector<ParenWord>> words(static_cast<std::size_t>(max_total) + 1);
  std::map<ParenWord, std::vector<ObjId>> table;
  std::vector<ObjId> t;
  for (int L = 0; L <= max_total; ++L)
    for (const ParenWord& w : enumerate(L, max_total)) {
      if (L >= 2 && filtration_level(w) > M) continue;
      words[static_cast<std::size_t>(L)].push_back(w);
      ObjFn f = alg.on_objects(to_tree(w));
      std::vector<ObjId>& tab = table[w];
      tab.resize(detail::ipow(O, L));
      std::size_t idx = 0;
      detail::for_each_index_tuple(L, static_cast<int>(O), [&](std::span<const int> ix) {
        t.assign(ix.begin(), ix.end());
        tab[idx++] = f(t);
        return true;
      });
    }

  std::vector<const ParenWord*> args;
  std::function<void(const ParenWord&, int)> pick;
  auto run = [&](const ParenWord& s) {
    const int m = s.length();
    std::vector<ParenWord> targs;
    for (const ParenWord* a : args) targs.push_back(*a);
    const ParenWord g = gamma(s, targs);
    if (g.length() >= 2 && filtration_level(g) > M) return;
    const std::vector<ObjId>& tg = table.at(g);
    const std::vector<ObjId>& ts = table.at(s);
    std::vector<const std::vector<ObjId>*> tt;
    std::vector<int> lens;
    for (const ParenWord* a : args) {
      tt.push_back(&table.at(*a));
      lens.push_back(a->length());
    }
    // nested loops over the argument blocks; lhs index is the concatenation
    // of block indices, rhs index is the tuple of block values
    std::function<void(int, std::size_t, std::size_t)> loop = [&](int i, std::size_t li, std::size_t ri) {
      if (!rep.ok) return;
      if (i == m) {
        ++rep.instances;
        if (tg[li] != ts[ri]) {
          std::vector<ObjId> objs;
          std::size_t x = li;
          for (int q = 0; q < g.length(); ++q) {
            objs.insert(objs.begin(), static_cast<ObjId>(x % O));
            x /= O;
          }
          nlohmann::json a = nlohmann::json::array();
          for (const ParenWord* w : args) a.push_back(render(*w));
          rep.fail("gamma compatibility", {{"s", render(s)}, {"args", a}, {"objects", detail::names(C, objs)}});
        }
        return;
      }
      const std::size_t span = detail::ipow(O, lens[static_cast<std::size_t>(i)]);
      const std::vector<ObjId>& ti = *tt[static_cast<std::size_t>(i)];
      for (std::size_t x = 0; x < span && rep.ok; ++x)
        loop(i + 1, li * span + x, ri * O + static_cast<std::size_t>(ti[x]));
    };
    loop(0, 0, 0);

    if (C.thin() || !rep.ok) return;
    // morphisms, on generating tuples
    MorOnMorFn on_g = alg.on_morphisms(to_tree(g));
    MorOnMorFn on_s = alg.on_morphisms(to_tree(s));
    std::vector<MorOnMorFn> on_t;
    for (const ParenWord* a : args) on_t.push_back(alg.on_morphisms(to_tree(*a)));
    detail::for_each_generator_tuple(C, g.length(), [&](std::span<const MorId> fs) {
      ++rep.instances;
      std::vector<MorId> inner;
      std::size_t at = 0;
      for (int i = 0; i < m; ++i) {
        const std::size_t L = static_cast<std::size_t>(lens[static_cast<std::size_t>(i)]);
        inner.push_back(on_t[static_cast<std::size_t>(i)](fs.subspan(at, L)));
        at += L;
      }
      if (on_g(fs) != on_s(inner)) {
        nlohmann::json a = nlohmann::json::array();
        for (const ParenWord* w : args) a.push_back(render(*w));
        rep.fail("gamma compatibility (morphisms)",
                 {{"s", render(s)}, {"args", a}, {"morphisms", detail::mor_names(C, fs)}});
      }
      return rep.ok;
    });
    // covers of s, and covers of one argument
    auto objects_of = [&](std::span<const int> ix) {
      std::vector<ObjId> objs(ix.begin(), ix.end());
      return objs;
    };
    for (const ParenWord& s2 : upper_covers(s)) {
      if (!rep.ok) return;
      const ParenWord g2 = gamma(s2, targs);
      MorFn lhs = alg.on_poset_morphisms(KMorphism(g, g2));
      MorFn rhs = alg.on_poset_morphisms(KMorphism(s, s2));
      std::vector<ObjFn> vals;
      for (const ParenWord* a : args) vals.push_back(alg.on_objects(to_tree(*a)));
      detail::for_each_index_tuple(g.length(), static_cast<int>(O), [&](std::span<const int> ix) {
        ++rep.instances;
        auto objs = objects_of(ix);
        std::vector<ObjId> iv;
        std::size_t at = 0;
        for (int i = 0; i < m; ++i) {
          const std::size_t L = static_cast<std::size_t>(lens[static_cast<std::size_t>(i)]);
          iv.push_back(vals[static_cast<std::size_t>(i)](std::span<const ObjId>(objs).subspan(at, L)));
          at += L;
        }
        if (lhs(objs) != rhs(iv))
          rep.fail("gamma compatibility (outer cover)",
                   {{"s", render(s)}, {"cover", render(s2)}, {"objects", detail::names(C, objs)}});
        return rep.ok;
      });
    }
    for (int i = 0; i < m && rep.ok; ++i)
      for (const ParenWord& a2 : upper_covers(*args[static_cast<std::size_t>(i)])) {
        if (!rep.ok) return;
        std::vector<ParenWord> targs2 = targs;
        targs2[static_cast<std::size_t>(i)] = a2;
        const ParenWord g2 = gamma(s, targs2);
        MorFn lhs = alg.on_poset_morphisms(KMorphism(g, g2));
        MorFn inner = alg.on_poset_morphisms(KMorphism(*args[static_cast<std::size_t>(i)], a2));
        std::vector<ObjFn> vals;
        for (const ParenWord* a : args) vals.push_back(alg.on_objects(to_tree(*a)));
        detail::for_each_index_tuple(g.length(), static_cast<int>(O), [&](std::span<const int> ix) {
          ++rep.instances;
          auto objs = objects_of(ix);
          std::vector<MorId> row;
          std::size_t at = 0;
          for (int q = 0; q < m; ++q) {
            const std::size_t L = static_cast<std::size_t>(lens[static_cast<std::size_t>(q)]);
            auto blk = std::span<const ObjId>(objs).subspan(at, L);
            row.push_back(q == i ? inner(blk) : C.id(vals[static_cast<std::size_t>(q)](blk)));
            at += L;
          }
          if (lhs(objs) != on_s(row))
            rep.fail("gamma compatibility (inner cover)", {{"s", render(s)},
                                                           {"position", i + 1},
                                                           {"cover", render(a2)},
                                                           {"objects", detail::names(C, objs)}});
          return rep.ok;
        });
      }
  };

  for (int m = 0; m <= max_total && rep.ok; ++m)
    for (const ParenWord& s : words[static_cast<std::size_t>(m)]) {
      std::function<void(int, int)> choose = [&](int i, int budget) {
        if (!rep.ok) return;
        if (i == m) {
          run(s);
          return;
        }
        for (int L = 0; L <= budget; ++L)
          for (const ParenWord& w : words[static_cast<std::size_t>(L)]) {
            args.push_back(&w);
            choose(i + 1, budget - L);
            args.pop_back();
          }
      };
      choose(0, max_total);
    }
  return rep;
}

// ---------------------------------------------------------------------------
// Directed monoidal categories

/// A bifunctor box with strict unit and a directed associator
/// eta_{A,B,C}: (A box B) box C -> A box (B box C).
struct DirectedData {
  std::shared_ptr<const FinCat> cat;
  ObjId unit = 0;
  std::function<ObjId(ObjId, ObjId)> box_obj;
  std::function<std::optional<MorId>(MorId, MorId)> box_mor;
  std::function<std::optional<MorId>(ObjId, ObjId, ObjId)> eta;
};

/// Bifunctoriality, strict unit, typing and naturality of eta, eta trivial
/// when an argument is the unit, and the pentagon. Exhaustive.
inline CheckReport check_directed(const DirectedData& dd) {
  CheckReport rep;
  const FinCat& C = *dd.cat;
  const int O = C.num_objects(), N = C.num_morphisms();
  const ObjId u = dd.unit;
  auto bx = [&](MorId f, MorId g) -> std::optional<MorId> {
    auto r = dd.box_mor(f, g);
    if (!r) rep.fail("missing box morphism", {{"f", C.morphism(f).name}, {"g", C.morphism(g).name}});
    return r;
  };
  auto eta = [&](ObjId a, ObjId b, ObjId c) -> std::optional<MorId> {
    auto r = dd.eta(a, b, c);
    if (!r) rep.fail("missing eta component", {{"objects", detail::names(C, std::vector<ObjId>{a, b, c})}});
    return r;
  };
  auto B = dd.box_obj;

  for (ObjId a = 0; a < O && rep.ok; ++a) {
    ++rep.instances;
    if (B(u, a) != a || B(a, u) != a) rep.fail("strict unit", {{"object", C.object_name(a)}});
  }
  for (MorId f = 0; f < N && rep.ok; ++f)
    for (MorId g = 0; g < N && rep.ok; ++g) {
      ++rep.instances;
      auto h = bx(f, g);
      if (!h) break;
      if (C.src(*h) != B(C.src(f), C.src(g)) || C.dst(*h) != B(C.dst(f), C.dst(g)))
        rep.fail("box typing", {{"f", C.morphism(f).name}, {"g", C.morphism(g).name}});
    }
  if (!rep.ok) return rep;
  for (MorId f = 0; f < N && rep.ok; ++f) {
    ++rep.instances;
    if (*bx(C.id(u), f) != f || *bx(f, C.id(u)) != f) rep.fail("strict unit on morphisms", {{"morphism", C.morphism(f).name}});
  }
  if (!C.thin()) {
    for (ObjId a = 0; a < O && rep.ok; ++a)
      for (ObjId b = 0; b < O && rep.ok; ++b) {
        ++rep.instances;
        if (*bx(C.id(a), C.id(b)) != C.id(B(a, b)))
          rep.fail("box identities", {{"objects", detail::names(C, std::vector<ObjId>{a, b})}});
      }
    for (MorId f = 0; f < N && rep.ok; ++f)
      for (MorId f2 = 0; f2 < N && rep.ok; ++f2) {
        if (C.dst(f) != C.src(f2)) continue;
        for (MorId g = 0; g < N && rep.ok; ++g)
          for (MorId g2 = 0; g2 < N && rep.ok; ++g2) {
            if (C.dst(g) != C.src(g2)) continue;
            ++rep.instances;
            if (*bx(C.compose(f2, f), C.compose(g2, g)) != C.compose(*bx(f2, g2), *bx(f, g)))
              rep.fail("box composition", {{"f", C.morphism(f).name},
                                           {"f2", C.morphism(f2).name},
                                           {"g", C.morphism(g).name},
                                           {"g2", C.morphism(g2).name}});
          }
      }
  }
  if (!rep.ok) return rep;

  for (ObjId a = 0; a < O && rep.ok; ++a)
    for (ObjId b = 0; b < O && rep.ok; ++b)
      for (ObjId c = 0; c < O && rep.ok; ++c) {
        ++rep.instances;
        auto e = eta(a, b, c);
        if (!e) return rep;
        auto w = detail::names(C, std::vector<ObjId>{a, b, c});
        if (C.src(*e) != B(B(a, b), c) || C.dst(*e) != B(a, B(b, c))) rep.fail("eta typing", {{"objects", w}});
        else if ((a == u || b == u || c == u) && !C.is_identity(*e)) rep.fail("eta on the unit", {{"objects", w}});
      }
  if (!rep.ok) return rep;

  if (!C.thin()) {
    // naturality in each variable separately
    for (int slot = 0; slot < 3 && rep.ok; ++slot)
      for (MorId f = 0; f < N && rep.ok; ++f)
        for (ObjId x = 0; x < O && rep.ok; ++x)
          for (ObjId y = 0; y < O && rep.ok; ++y) {
            ++rep.instances;
            MorId m[3];
            ObjId o[3];
            int q = 0;
            for (int i = 0; i < 3; ++i) o[i] = i == slot ? -1 : (q++ == 0 ? x : y);
            for (int i = 0; i < 3; ++i) m[i] = i == slot ? f : C.id(o[i]);
            ObjId s[3], t[3];
            for (int i = 0; i < 3; ++i) {
              s[i] = C.src(m[i]);
              t[i] = C.dst(m[i]);
            }
            MorId lhs = C.compose(*eta(t[0], t[1], t[2]), *bx(*bx(m[0], m[1]), m[2]));
            MorId rhs = C.compose(*bx(m[0], *bx(m[1], m[2])), *eta(s[0], s[1], s[2]));
            if (lhs != rhs)
              rep.fail("eta naturality", {{"slot", slot + 1}, {"morphism", C.morphism(f).name},
                                          {"objects", detail::names(C, std::vector<ObjId>{x, y})}});
          }
    if (!rep.ok) return rep;
    // pentagon
    for (ObjId a = 0; a < O && rep.ok; ++a)
      for (ObjId b = 0; b < O && rep.ok; ++b)
        for (ObjId c = 0; c < O && rep.ok; ++c)
          for (ObjId d = 0; d < O && rep.ok; ++d) {
            ++rep.instances;
            MorId top = C.compose(*eta(a, b, B(c, d)), *eta(B(a, b), c, d));
            MorId bottom = C.compose(*bx(C.id(a), *eta(b, c, d)),
                                     C.compose(*eta(a, B(b, c), d), *bx(*eta(a, b, c), C.id(d))));
            if (top != bottom) rep.fail("pentagon", {{"objects", detail::names(C, std::vector<ObjId>{a, b, c, d})}});
          }
  }
  return rep;
}

namespace detail {

inline ObjId fold_right(const DirectedData& dd, std::span<const ObjId> t) {
  if (t.empty()) return dd.unit;
  ObjId acc = t.back();
  for (std::size_t i = t.size() - 1; i-- > 0;) acc = dd.box_obj(t[i], acc);
  return acc;
}

inline std::optional<MorId> fold_right_mor(const DirectedData& dd, std::span<const MorId> f) {
  if (f.empty()) return dd.cat->id(dd.unit);
  MorId acc = f.back();
  for (std::size_t i = f.size() - 1; i-- > 0;) {
    auto r = dd.box_mor(f[i], acc);
    if (!r) return std::nullopt;
    acc = *r;
  }
  return acc;
}

// alpha^{0,b,c}(B, C), by recursion on b.
inline MorId alpha0(const DirectedData& dd, int b, std::span<const ObjId> t) {
  const FinCat& C = *dd.cat;
  const int c = static_cast<int>(t.size()) - b;
  if (c == 0 || b <= 1) return C.id(fold_right(dd, t));
  const ObjId b1 = t[0];
  auto rest_b = t.subspan(1, static_cast<std::size_t>(b - 1));
  auto cs = t.subspan(static_cast<std::size_t>(b));
  MorId e = *dd.eta(b1, fold_right(dd, rest_b), fold_right(dd, cs));
  MorId tail = alpha0(dd, b - 1, t.subspan(1));
  return C.compose(*dd.box_mor(C.id(b1), tail), e);
}

}  // namespace detail

/// The A_infinity structure of a directed monoidal category: mu_i nested to
/// the right, alpha^{0,b,c} = (id box alpha^{0,b-1,c}) . eta and
/// alpha^{a,b,c} = mu_{a+1}(id, ..., id, alpha^{0,b,c}). Throws
/// HypothesisError if check_directed fails.
inline AnData ainfty_from_directed(const DirectedData& dd, std::optional<int> n = std::nullopt, int bound = 6) {
  CheckReport pre = check_directed(dd);
  if (!pre.ok) throw HypothesisError(pre);
  AnData d;
  d.cat = dd.cat;
  d.n = n;
  d.bound = bound;
  d.unit = dd.unit;
  d.mu_obj = [dd](std::span<const ObjId> t) { return detail::fold_right(dd, t); };
  d.mu_mor = [dd](std::span<const MorId> f) { return detail::fold_right_mor(dd, f); };
  d.alpha = [dd](Split s, std::span<const ObjId> t) -> std::optional<MorId> {
    const FinCat& C = *dd.cat;
    MorId acc = detail::alpha0(dd, s.j, t.subspan(static_cast<std::size_t>(s.i)));
    for (int q = s.i; q-- > 0;) {
      auto r = dd.box_mor(C.id(t[static_cast<std::size_t>(q)]), acc);
      if (!r) return std::nullopt;
      acc = *r;
    }
    return acc;
  };
  return d;
}

/// The identities used in the construction, as table equalities:
/// (*) mu_{a+b}(A, B) = mu_{a+1}(A, mu_b(B)) on objects and (outside thin
/// categories) generating morphism tuples, and
/// (**) alpha^{a1+a2,b,c} = mu_{a1+1}(id, alpha^{a2,b,c}).
inline CheckReport check_directed_identities(const AnData& d) {
  CheckReport rep;
  const FinCat& C = *d.cat;
  const int M = d.max_arity();
  const int O = C.num_objects();
  std::vector<ObjId> t, x;
  for (int L = 0; L <= M && rep.ok; ++L)
    for (int a = 0; a <= L && rep.ok; ++a) {
      const int b = L - a;
      if (a + 1 > M) continue;
      detail::for_each_index_tuple(L, O, [&](std::span<const int> ix) {
        ++rep.instances;
        t.assign(ix.begin(), ix.end());
        x.assign(t.begin(), t.begin() + a);
        x.push_back(d.mu_obj(std::span<const ObjId>(t).subspan(static_cast<std::size_t>(a))));
        if (d.mu_obj(t) != d.mu_obj(x)) rep.fail("(*)", {{"a", a}, {"b", b}, {"objects", detail::names(C, t)}});
        return rep.ok;
      });
      if (!rep.ok || C.thin()) continue;
      detail::for_each_generator_tuple(C, L, [&](std::span<const MorId> fs) {
        ++rep.instances;
        std::vector<MorId> y(fs.begin(), fs.begin() + a);
        y.push_back(*d.mu_mor(fs.subspan(static_cast<std::size_t>(a))));
        if (d.mu_mor(fs) != d.mu_mor(y))
          rep.fail("(*) on morphisms", {{"a", a}, {"b", b}, {"morphisms", detail::mor_names(C, fs)}});
        return rep.ok;
      });
    }
  for (int m = 0; m <= M && rep.ok; ++m)
    for (int a1 = 0; a1 <= m && rep.ok; ++a1)
      for (int a2 = 0; a1 + a2 <= m && rep.ok; ++a2)
        for (int b = 0; a1 + a2 + b <= m && rep.ok; ++b) {
          const int c = m - a1 - a2 - b;
          const Split whole{a1 + a2, b, c}, part{a2, b, c};
          if (!d.has_alpha(whole) || !d.has_alpha(part) || a1 + 1 > M || a1 == 0) continue;
          detail::for_each_index_tuple(m, O, [&](std::span<const int> ix) {
            ++rep.instances;
            t.assign(ix.begin(), ix.end());
            MorId row[kMaxBound];
            for (int q = 0; q < a1; ++q) row[q] = C.id(t[static_cast<std::size_t>(q)]);
            row[a1] = *d.alpha(part, std::span<const ObjId>(t).subspan(static_cast<std::size_t>(a1)));
            if (d.alpha(whole, t) != d.mu_mor(std::span<const MorId>(row, static_cast<std::size_t>(a1) + 1)))
              rep.fail("(**)", {{"a1", a1}, {"a2", a2}, {"b", b}, {"c", c}, {"objects", detail::names(C, t)}});
            return rep.ok;
          });
        }
  return rep;
}

}  // namespace assoc
