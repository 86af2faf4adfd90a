// Brute-force coend quotient for the rectification: pairs (T, A) of a rooted
// tree and an object tuple, glued by (T o S, A) ~ (T, S(A)) with union-find.
#pragma once

#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "assoc/rectify.hpp"

namespace oracle {

// Empty when the classes of the quotient are exactly the normal-form
// objects of MC up to total arity N; otherwise a description of the mismatch.
inline std::string coend_mismatch(const assoc::AnData& d, int N) {
  using namespace assoc;
  KAlgebra alg = theta_from_an(d);
  MCat mc(alg, N);
  const int O = d.cat->num_objects();
  auto words_of = [](int k) { return k == 1 ? std::vector<ParenWord>{ParenWord::id()} : enumerate(k); };

  std::map<std::pair<std::string, std::vector<int>>, int> index;
  std::vector<std::pair<RootedKTree, std::vector<int>>> nodes;
  for (int k = 0; k <= N; ++k)
    for (const RootedKTree& t : enumerate_rooted(k))
      detail::for_each_index_tuple(k, O, [&](std::span<const int> ix) {
        std::vector<int> a(ix.begin(), ix.end());
        index[{render(t), a}] = static_cast<int>(nodes.size());
        nodes.emplace_back(t, a);
        return true;
      });
  std::vector<int> parent(nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };

  for (int m = 0; m <= N; ++m)
    for (const RootedKTree& t : enumerate_rooted(m)) {
      std::vector<ParenWord> s;
      std::function<void(int)> pick = [&](int budget) {
        if (static_cast<int>(s.size()) == m) {
          const RootedKTree ts = right_action(t, s);
          detail::for_each_index_tuple(ts.leaves(), O, [&](std::span<const int> ix) {
            std::vector<int> out;
            std::size_t at = 0;
            for (const ParenWord& w : s) {
              std::vector<ObjId> part(ix.begin() + static_cast<long>(at),
                                      ix.begin() + static_cast<long>(at + w.length()));
              out.push_back(alg.on_objects(to_tree(w))(part));
              at += static_cast<std::size_t>(w.length());
            }
            const int x = index.at({render(ts), std::vector<int>(ix.begin(), ix.end())});
            const int y = index.at({render(t), out});
            parent[find(x)] = find(y);
            return true;
          });
          return;
        }
        for (int k = 0; k <= budget; ++k)
          for (const ParenWord& w : words_of(k)) {
            s.push_back(w);
            pick(budget - k);
            s.pop_back();
          }
      };
      pick(N);
    }

  // normal form of (T, A): theta of each root child, units dropped
  auto nf = [&](const RootedKTree& t, const std::vector<int>& a) {
    std::vector<ObjId> vals;
    std::size_t at = 0;
    for (const StableTree& c : t.children()) {
      std::vector<ObjId> part(a.begin() + static_cast<long>(at), a.begin() + static_cast<long>(at + c.leaves()));
      vals.push_back(alg.on_objects(c)(part));
      at += static_cast<std::size_t>(c.leaves());
    }
    return mc.normalize(vals);
  };
  std::map<int, SeqObject> class_nf;
  std::map<SeqObject, int> nf_class;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const SeqObject v = nf(nodes[i].first, nodes[i].second);
    const int c = find(static_cast<int>(i));
    if (class_nf.emplace(c, v).first->second != v) return "normal form not constant on a class";
    if (nf_class.emplace(v, c).first->second != c) return "two classes share a normal form";
  }
  const auto objs = mc.objects();
  std::set<SeqObject> hit;
  for (const auto& [v, c] : nf_class) hit.insert(v);
  if (hit != std::set<SeqObject>(objs.begin(), objs.end())) return "classes do not cover the objects of MC";
  return {};
}

}  // namespace oracle
