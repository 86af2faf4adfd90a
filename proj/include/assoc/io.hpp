// JSON forms of finite categories, A_n data, directed monoidal data and cube
// diagrams.
//
// Category: {"chain": n} | {"discrete": [names]} |
//   {"objects": [...], "morphisms": [{"id","src","dst"}], "identities": {obj: mor},
//    "composition": [[g, f, g.f], ...]}
// Identities default to the morphism "id_<obj>"; composites with an identity
// may be omitted.
//
// A_n data: {"category", "unit", "n" (null = infinity), "bound",
//   "mu": {"right_nested": [[[a, b], c], ...]} | {"arities": {"k": [[[args], value], ...]}},
//   "mu_mor": same shape on morphism names (omit for a thin category),
//   "alpha": "unique" | "identity" |
//            {"default": "unique" | "identity" | null, "components": [{"split", "objects", "morphism"}]}}
//
// Directed data: {"category", "unit", "box": [[[a, b], c], ...],
//   "box_mor": [[[f, g], h], ...] (omit when thin), "eta": "unique" | [{"objects", "morphism"}]}
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "coherence.hpp"
#include "fincat.hpp"

namespace assoc {

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline const nlohmann::json& field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline ObjId obj_ref(const FinCat& c, const nlohmann::json& j) {
  if (!j.is_string()) throw InputError("object references must be strings");
  try {
    return c.object_index(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

inline MorId mor_ref(const FinCat& c, const nlohmann::json& j) {
  if (!j.is_string()) throw InputError("morphism references must be strings");
  try {
    return c.morphism_index(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

// Key of an index tuple for table lookup.
inline std::string tuple_key(std::span<const int> t) {
  std::string k;
  for (int x : t) k += std::to_string(x) + ',';
  return k;
}

template <class Ref>
std::map<std::string, int> read_table(const nlohmann::json& rows, Ref ref, std::size_t arity) {
  std::map<std::string, int> out;
  if (!rows.is_array()) throw InputError("tables are arrays of [[arguments], value] rows");
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != 2 || !row[0].is_array() || row[0].size() != arity)
      throw InputError("malformed table row " + row.dump());
    std::vector<int> args;
    for (const auto& a : row[0]) args.push_back(ref(a));
    if (!out.emplace(tuple_key(args), ref(row[1])).second) throw InputError("duplicate table row " + row.dump());
  }
  return out;
}

}  // namespace detail

inline FinCat fincat_from_json(const nlohmann::json& j) {
  if (j.contains("chain")) return FinCat::chain(j.at("chain").get<int>());
  if (j.contains("discrete")) return FinCat::discrete(j.at("discrete").get<std::vector<std::string>>());
  const auto objects = detail::field(j, "objects").get<std::vector<std::string>>();
  std::map<std::string, ObjId> oi;
  for (std::size_t i = 0; i < objects.size(); ++i) oi[objects[i]] = static_cast<ObjId>(i);
  auto obj = [&](const nlohmann::json& n) {
    auto it = oi.find(n.get<std::string>());
    if (it == oi.end()) throw InputError("unknown object '" + n.get<std::string>() + "'");
    return it->second;
  };
  std::vector<Morphism> ms;
  std::map<std::string, MorId> mi;
  for (const auto& m : detail::field(j, "morphisms")) {
    Morphism f{detail::field(m, "id").get<std::string>(), obj(detail::field(m, "src")), obj(detail::field(m, "dst"))};
    if (!mi.emplace(f.name, static_cast<MorId>(ms.size())).second) throw InputError("duplicate morphism " + f.name);
    ms.push_back(f);
  }
  auto mor = [&](const nlohmann::json& n) {
    auto it = mi.find(n.get<std::string>());
    if (it == mi.end()) throw InputError("unknown morphism '" + n.get<std::string>() + "'");
    return it->second;
  };
  std::vector<MorId> ids;
  for (const std::string& o : objects) {
    std::string name = "id_" + o;
    if (j.contains("identities") && j.at("identities").contains(o)) name = j.at("identities").at(o).get<std::string>();
    ids.push_back(mor(name));
  }
  std::map<std::pair<MorId, MorId>, MorId> table;
  if (j.contains("composition"))
    for (const auto& row : j.at("composition")) {
      if (!row.is_array() || row.size() != 3) throw InputError("composition rows are [g, f, g.f]");
      table[{mor(row[0]), mor(row[1])}] = mor(row[2]);
    }
  std::vector<bool> is_id(ms.size(), false);
  for (MorId i : ids) is_id[static_cast<std::size_t>(i)] = true;
  std::string missing;
  FinCat c(objects, ms, ids, [&](MorId g, MorId f) -> MorId {
    auto it = table.find({g, f});
    if (it != table.end()) return it->second;
    if (is_id[static_cast<std::size_t>(g)]) return f;
    if (is_id[static_cast<std::size_t>(f)]) return g;
    if (missing.empty()) missing = ms[static_cast<std::size_t>(g)].name + " . " + ms[static_cast<std::size_t>(f)].name;
    return 0;
  });
  if (!missing.empty()) throw InputError("composition table has no entry for " + missing);
  return c;
}

inline nlohmann::json to_json(const FinCat& c) {
  nlohmann::json ms = nlohmann::json::array(), comp = nlohmann::json::array(), ids = nlohmann::json::object();
  for (MorId f = 0; f < c.num_morphisms(); ++f)
    ms.push_back({{"id", c.morphism(f).name}, {"src", c.object_name(c.src(f))}, {"dst", c.object_name(c.dst(f))}});
  for (ObjId o = 0; o < c.num_objects(); ++o) ids[c.object_name(o)] = c.morphism(c.id(o)).name;
  for (MorId g = 0; g < c.num_morphisms(); ++g)
    for (MorId f = 0; f < c.num_morphisms(); ++f)
      if (c.dst(f) == c.src(g) && !c.is_identity(g) && !c.is_identity(f))
        comp.push_back({c.morphism(g).name, c.morphism(f).name, c.morphism(c.compose(g, f)).name});
  return {{"objects", c.objects()}, {"morphisms", ms}, {"identities", ids}, {"composition", comp}};
}

namespace detail {

// mu from {"right_nested": ...} or {"arities": ...}; `ref` resolves names.
template <class Ref>
std::function<std::optional<int>(std::span<const int>)> read_mu(const nlohmann::json& j, Ref ref, int unit_value) {
  if (j.contains("right_nested")) {
    auto t = std::make_shared<std::map<std::string, int>>(read_table(j.at("right_nested"), ref, 2));
    return [t, unit_value](std::span<const int> a) -> std::optional<int> {
      if (a.empty()) return unit_value;
      int acc = a.back();
      for (std::size_t i = a.size() - 1; i-- > 0;) {
        const int pair[2] = {a[i], acc};
        auto it = t->find(tuple_key(pair));
        if (it == t->end()) return std::nullopt;
        acc = it->second;
      }
      return acc;
    };
  }
  if (j.contains("arities")) {
    auto t = std::make_shared<std::map<std::string, int>>();
    for (const auto& [k, rows] : j.at("arities").items()) {
      auto part = read_table(rows, ref, static_cast<std::size_t>(std::stoi(k)));
      for (auto& [key, v] : part) (*t)[std::to_string(std::stoi(k)) + ':' + key] = v;
    }
    return [t, unit_value](std::span<const int> a) -> std::optional<int> {
      auto it = t->find(std::to_string(a.size()) + ':' + tuple_key(a));
      if (it != t->end()) return it->second;
      if (a.empty()) return unit_value;
      if (a.size() == 1) return a[0];
      return std::nullopt;
    };
  }
  throw InputError("mu must be {\"right_nested\": ...} or {\"arities\": ...}");
}

}  // namespace detail

inline AnData an_from_json(const nlohmann::json& j) {
  auto cat = std::make_shared<const FinCat>(fincat_from_json(detail::field(j, "category")));
  const FinCat& c = *cat;
  AnData d;
  d.cat = cat;
  d.unit = detail::obj_ref(c, detail::field(j, "unit"));
  if (j.contains("n") && !j.at("n").is_null()) d.n = j.at("n").get<int>();
  if (j.contains("bound")) d.bound = j.at("bound").get<int>();
  if (d.bound < 1 || d.bound > kMaxBound) throw InputError("bound out of range");
  auto obj_fn = detail::read_mu(detail::field(j, "mu"), [&](const nlohmann::json& n) { return detail::obj_ref(c, n); }, d.unit);
  d.mu_obj = [obj_fn, cat](std::span<const ObjId> a) {
    auto v = obj_fn(a);
    if (!v) throw InputError("mu table has no entry for " + detail::names(*cat, a).dump());
    return *v;
  };
  if (j.contains("mu_mor")) {
    auto mor_fn = detail::read_mu(j.at("mu_mor"), [&](const nlohmann::json& n) { return detail::mor_ref(c, n); }, c.id(d.unit));
    d.mu_mor = [mor_fn](std::span<const MorId> f) { return mor_fn(f); };
  } else {
    if (!c.thin()) throw InputError("mu_mor is required for a category that is not thin");
    d.mu_mor = thin_mu_mor(cat, d.mu_obj);
  }
  const nlohmann::json& a = detail::field(j, "alpha");
  auto fallback = [&](const nlohmann::json& kind) -> AlphaFn {
    if (kind.is_null()) return [](Split, std::span<const ObjId>) -> std::optional<MorId> { return std::nullopt; };
    const std::string k = kind.get<std::string>();
    if (k == "unique") return thin_alpha(cat, d.mu_obj);
    if (k == "identity") return identity_alpha(cat, d.mu_obj);
    throw InputError("alpha default must be \"unique\", \"identity\" or null");
  };
  if (a.is_string()) {
    d.alpha = fallback(a);
  } else {
    AlphaFn base = fallback(a.contains("default") ? a.at("default") : nlohmann::json());
    auto comps = std::make_shared<std::map<std::string, MorId>>();
    for (const auto& e : detail::field(a, "components")) {
      const auto s = detail::field(e, "split").get<std::vector<int>>();
      if (s.size() != 3) throw InputError("split must be [i, j, k]");
      std::vector<int> key = s;
      for (const auto& o : detail::field(e, "objects")) key.push_back(detail::obj_ref(c, o));
      if (static_cast<int>(key.size()) != 3 + s[0] + s[1] + s[2]) throw InputError("alpha component has the wrong number of objects");
      (*comps)[detail::tuple_key(key)] = detail::mor_ref(c, detail::field(e, "morphism"));
    }
    d.alpha = [base, comps](Split s, std::span<const ObjId> t) -> std::optional<MorId> {
      std::vector<int> key{s.i, s.j, s.k};
      key.insert(key.end(), t.begin(), t.end());
      auto it = comps->find(detail::tuple_key(key));
      if (it != comps->end()) return it->second;
      return base(s, t);
    };
  }
  return d;
}

/// Tables of d up to the given arity. mu_mor is written only when the
/// category is not thin.
inline nlohmann::json to_json(const AnData& d, int max_arity) {
  const FinCat& c = *d.cat;
  max_arity = std::min(max_arity, d.max_arity());
  nlohmann::json mu = nlohmann::json::object(), mu_mor = nlohmann::json::object(), comps = nlohmann::json::array();
  for (int k = 2; k <= max_arity; ++k) {
    nlohmann::json rows = nlohmann::json::array();
    detail::for_each_index_tuple(k, c.num_objects(), [&](std::span<const int> t) {
      rows.push_back({detail::names(c, t), c.object_name(d.mu_obj(t))});
      return true;
    });
    mu[std::to_string(k)] = rows;
    if (!c.thin()) {
      nlohmann::json mrows = nlohmann::json::array();
      detail::for_each_index_tuple(k, c.num_morphisms(), [&](std::span<const int> f) {
        if (auto v = d.mu_mor(f)) mrows.push_back({detail::mor_names(c, f), c.morphism(*v).name});
        return true;
      });
      mu_mor[std::to_string(k)] = mrows;
    }
  }
  detail::for_each_params(3, max_arity, [&](std::span<const int> p) {
    const Split s{p[0], p[1], p[2]};
    if (!d.has_alpha(s)) return true;
    detail::for_each_index_tuple(s.total(), c.num_objects(), [&](std::span<const int> t) {
      if (auto v = d.alpha(s, t))
        comps.push_back({{"split", {s.i, s.j, s.k}}, {"objects", detail::names(c, t)}, {"morphism", c.morphism(*v).name}});
      return true;
    });
    return true;
  });
  nlohmann::json j{{"schema", kSchemaVersion},
                   {"category", to_json(c)},
                   {"unit", c.object_name(d.unit)},
                   {"n", d.n ? nlohmann::json(*d.n) : nlohmann::json()},
                   {"bound", max_arity},
                   {"mu", {{"arities", mu}}},
                   {"alpha", {{"default", nullptr}, {"components", comps}}}};
  if (!c.thin()) j["mu_mor"] = {{"arities", mu_mor}};
  return j;
}

inline DirectedData directed_from_json(const nlohmann::json& j) {
  auto cat = std::make_shared<const FinCat>(fincat_from_json(detail::field(j, "category")));
  const FinCat& c = *cat;
  DirectedData dd;
  dd.cat = cat;
  dd.unit = detail::obj_ref(c, detail::field(j, "unit"));
  auto box = std::make_shared<std::map<std::string, int>>(
      detail::read_table(detail::field(j, "box"), [&](const nlohmann::json& n) { return detail::obj_ref(c, n); }, 2));
  dd.box_obj = [box, cat](ObjId a, ObjId b) {
    const int t[2] = {a, b};
    auto it = box->find(detail::tuple_key(t));
    if (it == box->end()) throw InputError("box table has no entry for " + detail::names(*cat, t).dump());
    return it->second;
  };
  if (j.contains("box_mor")) {
    auto bm = std::make_shared<std::map<std::string, int>>(
        detail::read_table(j.at("box_mor"), [&](const nlohmann::json& n) { return detail::mor_ref(c, n); }, 2));
    dd.box_mor = [bm](MorId f, MorId g) -> std::optional<MorId> {
      const int t[2] = {f, g};
      auto it = bm->find(detail::tuple_key(t));
      if (it == bm->end()) return std::nullopt;
      return it->second;
    };
  } else {
    if (!c.thin()) throw InputError("box_mor is required for a category that is not thin");
    dd.box_mor = [cat, b = dd.box_obj](MorId f, MorId g) {
      return cat->unique(b(cat->src(f), cat->src(g)), b(cat->dst(f), cat->dst(g)));
    };
  }
  const nlohmann::json& e = detail::field(j, "eta");
  if (e.is_string() && e.get<std::string>() == "unique") {
    dd.eta = [cat, b = dd.box_obj](ObjId x, ObjId y, ObjId z) { return cat->unique(b(b(x, y), z), b(x, b(y, z))); };
  } else if (e.is_array()) {
    auto t = std::make_shared<std::map<std::string, int>>();
    for (const auto& row : e) {
      std::vector<int> key;
      for (const auto& o : detail::field(row, "objects")) key.push_back(detail::obj_ref(c, o));
      if (key.size() != 3) throw InputError("eta components take three objects");
      (*t)[detail::tuple_key(key)] = detail::mor_ref(c, detail::field(row, "morphism"));
    }
    dd.eta = [t](ObjId x, ObjId y, ObjId z) -> std::optional<MorId> {
      const int k[3] = {x, y, z};
      auto it = t->find(detail::tuple_key(k));
      if (it == t->end()) return std::nullopt;
      return it->second;
    };
  } else {
    throw InputError("eta must be \"unique\" or a list of components");
  }
  return dd;
}

/// {"category", "dim", "vertices": [names], "edges": [{"from": v, "axis": i, "morphism"}]}
inline std::pair<FinCat, CubeDiagram> cube_from_json(const nlohmann::json& j) {
  FinCat c = fincat_from_json(detail::field(j, "category"));
  const int dim = detail::field(j, "dim").get<int>();
  if (dim < 0 || dim > 8) throw InputError("cube dimension out of range");
  CubeDiagram d(dim);
  const auto& vs = detail::field(j, "vertices");
  if (vs.size() != d.vertices.size()) throw InputError("a cube of dimension d has 2^d vertices");
  for (std::size_t v = 0; v < vs.size(); ++v) d.vertices[v] = detail::obj_ref(c, vs[v]);
  for (const auto& e : detail::field(j, "edges")) {
    const auto v = detail::field(e, "from").get<std::uint32_t>();
    const int i = detail::field(e, "axis").get<int>();
    if (v >= d.vertices.size() || i < 0 || i >= dim || (v >> i) & 1u) throw InputError("bad cube edge " + e.dump());
    d.edge(v, i) = detail::mor_ref(c, detail::field(e, "morphism"));
  }
  return {std::move(c), std::move(d)};
}

}  // namespace assoc
