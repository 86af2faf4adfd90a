// Finite categories given by explicit composition tables, cubical diagrams
// in them, and random finite quotients of the path category of a cube.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "report.hpp"

namespace assoc {

using ObjId = int;
using MorId = int;

struct Morphism {
  std::string name;
  ObjId src = 0;
  ObjId dst = 0;
};

class FinCat {
 public:
  FinCat() = default;

  /// `compose(g, f)` is called for every pair with dst(f) == src(g) and must
  /// return g.f.
  FinCat(std::vector<std::string> objects, std::vector<Morphism> morphisms, std::vector<MorId> identities,
         const std::function<MorId(MorId, MorId)>& compose)
      : objects_(std::move(objects)), morphisms_(std::move(morphisms)), identities_(std::move(identities)) {
    const int n = num_morphisms();
    if (static_cast<int>(identities_.size()) != num_objects())
      throw std::invalid_argument("FinCat: one identity per object required");
    for (const Morphism& f : morphisms_)
      if (f.src < 0 || f.src >= num_objects() || f.dst < 0 || f.dst >= num_objects())
        throw std::invalid_argument("FinCat: morphism " + f.name + " has an unknown endpoint");
    comp_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
    homs_.assign(static_cast<std::size_t>(num_objects() * num_objects()), {});
    for (MorId f = 0; f < n; ++f) homs_[hidx(src(f), dst(f))].push_back(f);
    for (MorId g = 0; g < n; ++g)
      for (MorId f = 0; f < n; ++f)
        if (dst(f) == src(g)) {
          MorId h = compose(g, f);
          if (h < 0 || h >= n) throw std::invalid_argument("FinCat: composite out of range");
          comp_[cidx(g, f)] = h;
        }
    thin_ = true;
    for (const auto& h : homs_)
      if (h.size() > 1) thin_ = false;
    for (std::size_t i = 0; i < objects_.size(); ++i) object_index_[objects_[i]] = static_cast<ObjId>(i);
    for (std::size_t i = 0; i < morphisms_.size(); ++i) morphism_index_[morphisms_[i].name] = static_cast<MorId>(i);
  }

  /// Discrete category on the given objects.
  static FinCat discrete(std::vector<std::string> objects) {
    std::vector<Morphism> ms;
    std::vector<MorId> ids;
    for (std::size_t i = 0; i < objects.size(); ++i) {
      ms.push_back({"id_" + objects[i], static_cast<ObjId>(i), static_cast<ObjId>(i)});
      ids.push_back(static_cast<MorId>(i));
    }
    return FinCat(std::move(objects), std::move(ms), std::move(ids), [](MorId g, MorId) { return g; });
  }

  /// The chain 0 < 1 < ... < n-1 as a category. Objects are named by their
  /// value; the morphism i -> j is named "i<=j" and identities "id_i".
  static FinCat chain(int n) {
    std::vector<std::string> objs;
    for (int i = 0; i < n; ++i) objs.push_back(std::to_string(i));
    std::vector<Morphism> ms;
    std::vector<MorId> ids(static_cast<std::size_t>(n));
    std::map<std::pair<int, int>, MorId> at;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        at[{i, j}] = static_cast<MorId>(ms.size());
        if (i == j) ids[static_cast<std::size_t>(i)] = static_cast<MorId>(ms.size());
        ms.push_back({i == j ? "id_" + std::to_string(i) : std::to_string(i) + "<=" + std::to_string(j), i, j});
      }
    std::vector<Morphism> copy = ms;
    return FinCat(std::move(objs), std::move(ms), std::move(ids),
                  [&](MorId g, MorId f) { return at.at({copy[f].src, copy[g].dst}); });
  }

  int num_objects() const { return static_cast<int>(objects_.size()); }
  int num_morphisms() const { return static_cast<int>(morphisms_.size()); }
  const std::string& object_name(ObjId o) const { return objects_.at(static_cast<std::size_t>(o)); }
  const std::vector<std::string>& objects() const { return objects_; }
  const Morphism& morphism(MorId f) const { return morphisms_.at(static_cast<std::size_t>(f)); }
  const std::vector<Morphism>& morphisms() const { return morphisms_; }
  ObjId src(MorId f) const { return morphisms_[static_cast<std::size_t>(f)].src; }
  ObjId dst(MorId f) const { return morphisms_[static_cast<std::size_t>(f)].dst; }
  MorId id(ObjId o) const { return identities_[static_cast<std::size_t>(o)]; }
  bool is_identity(MorId f) const { return identities_[static_cast<std::size_t>(src(f))] == f; }
  bool thin() const { return thin_; }

  /// g.f; throws if dst(f) != src(g).
  MorId compose(MorId g, MorId f) const {
    MorId h = comp_[cidx(g, f)];
    if (h < 0)
      throw std::invalid_argument("FinCat: " + morphism(g).name + " . " + morphism(f).name + " is not composable");
    return h;
  }

  const std::vector<MorId>& hom(ObjId a, ObjId b) const { return homs_[hidx(a, b)]; }

  /// The morphism a -> b of a thin category, if any.
  std::optional<MorId> unique(ObjId a, ObjId b) const {
    const auto& h = hom(a, b);
    if (h.empty()) return std::nullopt;
    return h.front();
  }

  ObjId object_index(const std::string& name) const {
    auto it = object_index_.find(name);
    if (it == object_index_.end()) throw std::invalid_argument("unknown object '" + name + "'");
    return it->second;
  }
  MorId morphism_index(const std::string& name) const {
    auto it = morphism_index_.find(name);
    if (it == morphism_index_.end()) throw std::invalid_argument("unknown morphism '" + name + "'");
    return it->second;
  }

  /// Typing, unit and associativity laws of the composition table.
  CheckReport validate() const {
    CheckReport rep;
    const int n = num_morphisms();
    for (ObjId o = 0; o < num_objects(); ++o) {
      ++rep.instances;
      if (src(id(o)) != o || dst(id(o)) != o) rep.fail("identity typing", {{"object", object_name(o)}});
    }
    for (MorId f = 0; f < n; ++f) {
      ++rep.instances;
      if (compose(id(dst(f)), f) != f || compose(f, id(src(f))) != f)
        rep.fail("unit law", {{"morphism", morphism(f).name}});
    }
    for (MorId g = 0; g < n; ++g)
      for (MorId f = 0; f < n; ++f) {
        if (dst(f) != src(g)) continue;
        ++rep.instances;
        MorId h = compose(g, f);
        if (src(h) != src(f) || dst(h) != dst(g))
          rep.fail("composite typing", {{"g", morphism(g).name}, {"f", morphism(f).name}});
      }
    if (!rep.ok) return rep;
    for (MorId h = 0; h < n; ++h)
      for (MorId g = 0; g < n; ++g) {
        if (dst(g) != src(h)) continue;
        for (MorId f = 0; f < n; ++f) {
          if (dst(f) != src(g)) continue;
          ++rep.instances;
          if (compose(compose(h, g), f) != compose(h, compose(g, f)))
            rep.fail("associativity",
                     {{"h", morphism(h).name}, {"g", morphism(g).name}, {"f", morphism(f).name}});
        }
      }
    return rep;
  }

 private:
  std::size_t cidx(MorId g, MorId f) const {
    return static_cast<std::size_t>(g) * morphisms_.size() + static_cast<std::size_t>(f);
  }
  std::size_t hidx(ObjId a, ObjId b) const {
    return static_cast<std::size_t>(a) * objects_.size() + static_cast<std::size_t>(b);
  }

  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<MorId> identities_;
  std::vector<MorId> comp_;
  std::vector<std::vector<MorId>> homs_;
  std::map<std::string, ObjId> object_index_;
  std::map<std::string, MorId> morphism_index_;
  bool thin_ = true;
};

// ---------------------------------------------------------------------------
// Cubical diagrams

/// A diagram of shape {0,1}^dim. Vertices are bitmasks; the edge leaving
/// vertex v in direction i (bit i clear in v) goes to v | (1 << i).
struct CubeDiagram {
  int dim = 0;
  std::vector<ObjId> vertices;  // 2^dim entries
  std::vector<MorId> edges;     // index v * dim + i, unused where bit i is set in v

  CubeDiagram() = default;
  explicit CubeDiagram(int d)
      : dim(d), vertices(std::size_t{1} << d, 0), edges((std::size_t{1} << d) * static_cast<std::size_t>(d), -1) {}

  MorId& edge(std::uint32_t v, int i) { return edges[v * static_cast<std::size_t>(dim) + static_cast<std::size_t>(i)]; }
  MorId edge(std::uint32_t v, int i) const {
    return edges[v * static_cast<std::size_t>(dim) + static_cast<std::size_t>(i)];
  }
};

struct CubeVerdict {
  bool faces_ok = true;
  bool all_paths_equal = true;
};

/// faces_ok: every 2-face commutes. all_paths_equal: between any two
/// vertices u <= v all monotone edge paths have the same composite.
inline CubeVerdict check_cube_commutes(const FinCat& cat, const CubeDiagram& d) {
  const std::uint32_t n = 1u << d.dim;
  if (d.vertices.size() != n || d.edges.size() != n * static_cast<std::size_t>(d.dim))
    throw std::invalid_argument("check_cube_commutes: malformed cube");
  for (std::uint32_t v = 0; v < n; ++v)
    for (int i = 0; i < d.dim; ++i) {
      if (v & (1u << i)) continue;
      MorId e = d.edge(v, i);
      if (e < 0 || e >= cat.num_morphisms() || cat.src(e) != d.vertices[v] || cat.dst(e) != d.vertices[v | (1u << i)])
        throw std::invalid_argument("check_cube_commutes: edge " + std::to_string(v) + "/" + std::to_string(i) +
                                    " does not connect its vertices");
    }

  CubeVerdict out;
  for (std::uint32_t v = 0; v < n; ++v)
    for (int i = 0; i < d.dim; ++i)
      for (int j = i + 1; j < d.dim; ++j) {
        const std::uint32_t bi = 1u << i, bj = 1u << j;
        if (v & (bi | bj)) continue;
        MorId p = cat.compose(d.edge(v | bi, j), d.edge(v, i));
        MorId q = cat.compose(d.edge(v | bj, i), d.edge(v, j));
        if (p != q) out.faces_ok = false;
      }

  // composites[u][v] = set of path composites u -> v, filled in order of |v|
  for (std::uint32_t u = 0; u < n && out.all_paths_equal; ++u) {
    std::vector<std::set<MorId>> comp(n);
    comp[u] = {cat.id(d.vertices[u])};
    for (std::uint32_t v = u + 1; v < n; ++v) {
      if ((v & u) != u) continue;
      for (int i = 0; i < d.dim; ++i) {
        const std::uint32_t b = 1u << i;
        if (!(v & b) || (u & b)) continue;
        for (MorId p : comp[v ^ b]) comp[v].insert(cat.compose(d.edge(v ^ b, i), p));
      }
      if (comp[v].size() > 1) {
        out.all_paths_equal = false;
        break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random quotients of the path category of a cube

struct CubeSample {
  FinCat cat;
  CubeDiagram cube;
  std::vector<std::array<std::uint32_t, 3>> imposed;  // (vertex, i, j) faces forced to commute
};

/// Path category of the d-cube (objects: vertices; morphisms u -> v:
/// orderings of the bits of v \ u) modulo the congruence generated by the
/// 2-faces in `imposed`. The cube diagram is the tautological one.
inline CubeSample cube_quotient(int d, std::vector<std::array<std::uint32_t, 3>> imposed) {
  const std::uint32_t n = 1u << d;
  // enumerate paths as bit sequences, grouped by (u, v)
  std::vector<std::vector<int>> paths;
  std::vector<std::uint32_t> path_src;
  std::map<std::pair<std::uint32_t, std::vector<int>>, int> path_id;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = 0; v < n; ++v) {
      if ((v & u) != u) continue;
      std::vector<int> bits;
      for (int i = 0; i < d; ++i)
        if ((v & ~u) & (1u << i)) bits.push_back(i);
      do {
        path_id[{u, bits}] = static_cast<int>(paths.size());
        paths.push_back(bits);
        path_src.push_back(u);
      } while (std::next_permutation(bits.begin(), bits.end()));
    }

  std::vector<int> parent(paths.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]); };
  std::set<std::array<std::uint32_t, 3>> faces(imposed.begin(), imposed.end());
  for (std::size_t p = 0; p < paths.size(); ++p) {
    std::uint32_t at = path_src[p];
    const auto& bits = paths[p];
    for (std::size_t k = 0; k + 1 < bits.size(); ++k) {
      std::uint32_t i = static_cast<std::uint32_t>(std::min(bits[k], bits[k + 1]));
      std::uint32_t j = static_cast<std::uint32_t>(std::max(bits[k], bits[k + 1]));
      if (faces.count({at, i, j})) {
        std::vector<int> swapped = bits;
        std::swap(swapped[k], swapped[k + 1]);
        parent[static_cast<std::size_t>(find(static_cast<int>(p)))] = find(path_id.at({path_src[p], swapped}));
      }
      at |= 1u << bits[k];
    }
  }

  std::map<int, MorId> class_of;
  std::vector<Morphism> ms;
  std::vector<MorId> mor_of_path(paths.size());
  for (std::size_t p = 0; p < paths.size(); ++p) {
    int r = find(static_cast<int>(p));
    auto it = class_of.find(r);
    if (it == class_of.end()) {
      std::uint32_t dst = path_src[p];
      std::string name = "p" + std::to_string(path_src[p]) + ":";
      for (int b : paths[p]) {
        dst |= 1u << b;
        name += std::to_string(b);
      }
      it = class_of.emplace(r, static_cast<MorId>(ms.size())).first;
      ms.push_back({name, static_cast<ObjId>(path_src[p]), static_cast<ObjId>(dst)});
    }
    mor_of_path[p] = it->second;
  }
  std::vector<int> rep(ms.size());
  for (std::size_t p = 0; p < paths.size(); ++p) rep[static_cast<std::size_t>(mor_of_path[p])] = static_cast<int>(p);

  std::vector<std::string> objs;
  std::vector<MorId> ids;
  for (std::uint32_t v = 0; v < n; ++v) {
    objs.push_back("v" + std::to_string(v));
    ids.push_back(mor_of_path[static_cast<std::size_t>(path_id.at({v, {}}))]);
  }
  FinCat cat(std::move(objs), ms, ids, [&](MorId g, MorId f) {
    const auto& pf = paths[static_cast<std::size_t>(rep[static_cast<std::size_t>(f)])];
    const auto& pg = paths[static_cast<std::size_t>(rep[static_cast<std::size_t>(g)])];
    std::vector<int> cat_path = pf;
    cat_path.insert(cat_path.end(), pg.begin(), pg.end());
    return mor_of_path[static_cast<std::size_t>(path_id.at({static_cast<std::uint32_t>(ms[static_cast<std::size_t>(f)].src), cat_path}))];
  });

  CubeDiagram cube(d);
  for (std::uint32_t v = 0; v < n; ++v) {
    cube.vertices[v] = static_cast<ObjId>(v);
    for (int i = 0; i < d; ++i)
      if (!(v & (1u << i))) cube.edge(v, i) = mor_of_path[static_cast<std::size_t>(path_id.at({v, {i}}))];
  }
  return {std::move(cat), std::move(cube), std::move(imposed)};
}

/// A random quotient: with probability 1/2 every 2-face is imposed,
/// otherwise each face independently with probability 3/4.
inline CubeSample random_cube_sample(std::mt19937_64& rng, int d) {
  std::vector<std::array<std::uint32_t, 3>> all;
  for (std::uint32_t v = 0; v < (1u << d); ++v)
    for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(d); ++i)
      for (std::uint32_t j = i + 1; j < static_cast<std::uint32_t>(d); ++j)
        if (!(v & ((1u << i) | (1u << j)))) all.push_back({v, i, j});
  std::bernoulli_distribution everything(0.5), keep(0.75);
  std::vector<std::array<std::uint32_t, 3>> chosen;
  const bool full = everything(rng);
  for (const auto& f : all)
    if (full || keep(rng)) chosen.push_back(f);
  return cube_quotient(d, std::move(chosen));
}

}  // namespace assoc
