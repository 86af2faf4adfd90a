// Small categories with A_n structure used by the tests, the CLI demos and
// the acceptance suite.
#pragma once

#include <algorithm>
#include <memory>
#include <optional>

#include "coherence.hpp"

namespace assoc::fixtures {

/// Z/2 as a discrete strict monoidal category: objects 0 and 1, mu = sum mod 2.
inline AnData z2(int bound = 6) {
  auto cat = std::make_shared<const FinCat>(FinCat::discrete({"0", "1"}));
  AnData d;
  d.cat = cat;
  d.bound = bound;
  d.unit = 0;
  d.mu_obj = [](std::span<const ObjId> t) {
    int s = 0;
    for (ObjId o : t) s ^= o;
    return s;
  };
  d.mu_mor = thin_mu_mor(cat, d.mu_obj);
  d.alpha = identity_alpha(cat, d.mu_obj);
  return d;
}

/// The discrete category {0, A} with mu = "A if any argument is A".
inline AnData unit_and_a(int bound = 6) {
  auto cat = std::make_shared<const FinCat>(FinCat::discrete({"0", "A"}));
  AnData d;
  d.cat = cat;
  d.bound = bound;
  d.unit = 0;
  d.mu_obj = [](std::span<const ObjId> t) { return std::any_of(t.begin(), t.end(), [](ObjId o) { return o == 1; }) ? 1 : 0; };
  d.mu_mor = thin_mu_mor(cat, d.mu_obj);
  d.alpha = identity_alpha(cat, d.mu_obj);
  return d;
}

inline constexpr int kPosetTop = 8;

/// A box B = min(8, A + B + A*B^2) on the chain 0 < 1 < ... < 8.
inline int poset_box(int a, int b) { return std::min(kPosetTop, a + b + a * b * b); }

/// The chain {0..8} with the box product above, strict unit 0 and the
/// unique morphisms (A box B) box C -> A box (B box C) as associator.
inline DirectedData poset_directed() {
  auto cat = std::make_shared<const FinCat>(FinCat::chain(kPosetTop + 1));
  DirectedData dd;
  dd.cat = cat;
  dd.unit = 0;
  dd.box_obj = poset_box;
  dd.box_mor = [cat](MorId f, MorId g) {
    return cat->unique(poset_box(cat->src(f), cat->src(g)), poset_box(cat->dst(f), cat->dst(g)));
  };
  dd.eta = [cat](ObjId a, ObjId b, ObjId c) {
    return cat->unique(poset_box(poset_box(a, b), c), poset_box(a, poset_box(b, c)));
  };
  return dd;
}

/// The same chain with mu_k nested to the right and every associator the
/// unique morphism between its source and target.
inline AnData poset(int bound = 6) {
  auto cat = std::make_shared<const FinCat>(FinCat::chain(kPosetTop + 1));
  AnData d;
  d.cat = cat;
  d.bound = bound;
  d.unit = 0;
  d.mu_obj = [](std::span<const ObjId> t) {
    if (t.empty()) return 0;
    int acc = t.back();
    for (std::size_t i = t.size() - 1; i-- > 0;) acc = poset_box(t[i], acc);
    return acc;
  };
  d.mu_mor = thin_mu_mor(cat, d.mu_obj);
  d.alpha = thin_alpha(cat, d.mu_obj);
  return d;
}

/// The poset fixture with alpha^{0,2,1}(1,1,1) replaced by an identity,
/// which has the wrong target.
inline AnData poset_corrupted(int bound = 6) {
  AnData d = poset(bound);
  AlphaFn good = d.alpha;
  auto cat = d.cat;
  ObjFn mu = d.mu_obj;
  d.alpha = [good, cat, mu](Split s, std::span<const ObjId> t) -> std::optional<MorId> {
    if (s.i == 0 && s.j == 2 && s.k == 1 && t.size() == 3 && t[0] == 1 && t[1] == 1 && t[2] == 1) {
      std::vector<ObjId> src;
      detail::alpha_source_args(mu, s, t, src);
      return cat->id(mu(src));
    }
    return good(s, t);
  };
  return d;
}

/// Objects {0, A} with End(A) = {id, s}, s.s = id; mu_k is "A if any
/// argument is A" on objects and multiplies the s's on morphisms. Strict,
/// with identity associators; the smallest category here that is not thin.
inline AnData twisted(int bound = 6) {
  std::vector<Morphism> ms{{"id_0", 0, 0}, {"id_A", 1, 1}, {"s", 1, 1}};
  auto cat = std::make_shared<const FinCat>(FinCat({"0", "A"}, ms, {0, 1}, [](MorId g, MorId f) {
    if (g == 0) return 0;
    const int parity = (g == 2) ^ (f == 2);
    return parity ? 2 : 1;
  }));
  AnData d;
  d.cat = cat;
  d.bound = bound;
  d.unit = 0;
  d.mu_obj = [](std::span<const ObjId> t) { return std::any_of(t.begin(), t.end(), [](ObjId o) { return o == 1; }) ? 1 : 0; };
  d.mu_mor = [](std::span<const MorId> f) -> std::optional<MorId> {
    bool any_a = false;
    int parity = 0;
    for (MorId m : f) {
      if (m != 0) any_a = true;
      if (m == 2) parity ^= 1;
    }
    if (!any_a) return 0;
    return parity ? 2 : 1;
  };
  d.alpha = identity_alpha(cat, d.mu_obj);
  return d;
}

/// twisted() with alpha^{0,2,1}(A, A, A) = s.
inline AnData twisted_corrupted(int bound = 6) {
  AnData d = twisted(bound);
  AlphaFn good = d.alpha;
  d.alpha = [good](Split s, std::span<const ObjId> t) -> std::optional<MorId> {
    if (s.i == 0 && s.j == 2 && s.k == 1 && t.size() == 3 && t[0] == 1 && t[1] == 1 && t[2] == 1) return 2;
    return good(s, t);
  };
  return d;
}

}  // namespace assoc::fixtures
