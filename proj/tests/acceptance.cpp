// One line per acceptance criterion; exit status 1 if any criterion fails or
// exceeds its time limit.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "assoc/fixtures.hpp"
#include "assoc/rectify.hpp"
#include "assoc/tamari.hpp"
#include "coend_oracle.hpp"
#include "oracles.hpp"

using namespace assoc;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

std::string str(auto x) {
  std::ostringstream s;
  s << x;
  return s.str();
}

std::vector<ObjId> tuple(std::span<const int> ix) { return {ix.begin(), ix.end()}; }

Outcome pentagon() {
  Outcome o;
  const auto k4 = enumerate(4);
  o.require(k4.size() == 11 && oracle::brute_force_words(4).size() == 11, "|K4| = " + str(k4.size()));
  std::vector<ParenWord> cells[3];
  for (const ParenWord& w : k4) cells[4 - 2 - w.intervals().size()].push_back(w);
  o.require(cells[0].size() == 5 && cells[1].size() == 5 && cells[2].size() == 1,
            "cells by dimension " + str(cells[0].size()) + "/" + str(cells[1].size()) + "/" + str(cells[2].size()));
  // vertex graph: each edge lies over exactly two vertices and the graph is a 5-cycle
  std::map<ParenWord, int> degree;
  for (const ParenWord& e : cells[1]) {
    int below = 0;
    for (const ParenWord& v : cells[0])
      if (leq(v, e)) {
        ++below;
        ++degree[v];
      }
    o.require(below == 2, "edge " + render(e) + " has " + str(below) + " vertices");
  }
  for (const ParenWord& v : cells[0]) o.require(degree[v] == 2, "vertex " + render(v) + " has degree " + str(degree[v]));
  for (const ParenWord& w : k4) o.require(leq(w, cells[2][0]), "two-cell is not the top");
  std::size_t hasse = 0;
  for (const ParenWord& w : k4) hasse += upper_covers(w).size();
  o.require(hasse == 15, "Hasse edges " + str(hasse));
  return o;
}

Outcome cube_decomposition() {
  Outcome o;
  for (auto [m, expect] : {std::pair{4, 5}, std::pair{5, 14}}) {
    int maximal = 0;
    for (const ParenWord& w : enumerate(m))
      if (interval_cube(KMorphism(w, ParenWord::terminal(m))).dimension() == m - 2) ++maximal;
    o.require(maximal == expect, "K" + str(m) + " has " + str(maximal) + " maximal cubes");
  }
  return o;
}

Outcome interval_cubes() {
  Outcome o;
  for (int m = 2; m <= 6 && o.ok; ++m) {
    const auto all = enumerate(m);
    for (const ParenWord& lo : all)
      for (const ParenWord& hi : all) {
        if (!leq(lo, hi)) continue;
        const CubeIso cube = interval_cube(KMorphism(lo, hi));
        const int d = cube.dimension();
        o.require(d == static_cast<int>(lo.intervals().size() - hi.intervals().size()), "dimension at " + render(lo));
        const auto members = oracle::interval_members(all, lo, hi);
        o.require(members.size() == std::size_t{1} << d, "interval size at " + render(lo) + " <= " + render(hi));
        std::set<ParenWord> image;
        for (std::uint32_t s = 0; s < (1u << d); ++s) {
          image.insert(cube.word_at(s));
          for (std::uint32_t t = 0; t < (1u << d); ++t)
            o.require(leq(cube.word_at(s), cube.word_at(t)) == ((s & t) == t), "order at " + render(lo));
        }
        o.require(image == std::set<ParenWord>(members.begin(), members.end()), "image at " + render(lo));
      }
  }
  return o;
}

Outcome skeleton() {
  Outcome o;
  for (int m = 2; m <= 7; ++m) {
    const auto all = enumerate(m);
    for (int n = 2; n <= m; ++n)
      for (const ParenWord& w : all)
        if (static_cast<int>(m - 2 - w.intervals().size()) <= n - 2)
          o.require(filtration_level(w) <= n, "cell " + render(w) + " outside stage " + str(n));
  }
  int squares = 0;
  for (const ParenWord& w : oracle::brute_force_words(5))
    if (w.intervals().size() == 1 && filtration_level(w) <= 3) ++squares;
  o.require(squares == 3, "two-cells in stage 3 of K5: " + str(squares));
  o.require(f_vector(5, 3).counts.back() == 3, "f-vector of stage 3 of K5");
  return o;
}

Outcome euler() {
  Outcome o;
  for (int m = 2; m <= 7; ++m) {
    long chi = 0;
    for (const ParenWord& w : oracle::brute_force_words(m)) chi += (m - 2 - w.intervals().size()) % 2 ? -1 : 1;
    o.require(chi == 1, "brute-force Euler characteristic of K" + str(m) + " is " + str(chi));
    o.require(f_vector(m, std::nullopt).euler == 1, "f-vector Euler characteristic of K" + str(m));
  }
  return o;
}

Outcome operad_laws() {
  Outcome o;
  const CheckReport r = check_operad_laws(5);
  o.require(r.ok, r.failure + " " + r.witness.dump());
  for (int k = 1; k <= 3; ++k)
    for (const ParenWord& s : k == 1 ? std::vector<ParenWord>{ParenWord::id()} : enumerate(k)) {
      std::vector<ParenWord> args;
      std::function<void(int)> pick = [&](int budget) {
        if (static_cast<int>(args.size()) == k) {
          o.require(gamma(s, args) == oracle::interval_gamma(s, args), "gamma differs from the interval oracle");
          return;
        }
        for (int len = 0; len <= budget; ++len)
          for (const ParenWord& a : len == 0   ? std::vector<ParenWord>{ParenWord::zero()}
                                    : len == 1 ? std::vector<ParenWord>{ParenWord::id()}
                                               : enumerate(len)) {
            args.push_back(a);
            pick(budget - len);
            args.pop_back();
          }
      };
      pick(5);
    }
  return o;
}

Outcome tamari() {
  Outcome o;
  for (int m = 2; m <= 8; ++m) {
    const TamariPoset p(m);
    o.require(p.size() == oracle::catalan(m - 1) && oracle::brute_force_binary(m).size() == p.size(),
              "|L" + str(m) + "| = " + str(p.size()));
  }
  for (int m = 2; m <= 7; ++m) o.require(check_poset(m).ok, "L" + str(m) + " is not antisymmetric");
  const TamariPoset p(4);
  std::size_t covers = 0;
  for (std::size_t i = 0; i < p.size(); ++i) covers += p.covers(i).size();
  o.require(p.size() == 5 && covers == 5, "L4 is not a pentagon");
  std::vector<std::string> pairs;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (!p.leq(i, j) && !p.leq(j, i)) pairs.push_back(render(p.objects()[i]) + "|" + render(p.objects()[j]));
  const std::set<std::string> expect{"(x1x2)(x3x4)|(x1(x2x3))x4", "(x1(x2x3))x4|(x1x2)(x3x4)"};
  std::string listed;
  for (const auto& s : pairs) listed += " {" + s + "}";
  o.require(pairs.size() == 1 && expect.count(pairs[0]),
            "L4 has " + str(pairs.size()) + " incomparable pairs:" + listed);
  return o;
}

Outcome lambda() {
  Outcome o;
  for (int m = 2; m <= 7; ++m) {
    const CheckReport r = check_lambda(m);
    o.require(r.ok, "m=" + str(m) + " " + r.failure);
  }
  std::multiset<std::size_t> sizes;
  for (const LObject& t : binary_trees(4)) sizes.insert(fiber(t).size());
  o.require(sizes == std::multiset<std::size_t>{1, 2, 2, 2, 4}, "fiber sizes over L4");
  for (int m = 2; m <= 7; ++m) {
    std::map<ParenWord, std::vector<ParenWord>> parts;
    for (const ParenWord& w : oracle::brute_force_words(m)) parts[oracle::interval_comb(w)].push_back(w);
    o.require(parts.size() == oracle::catalan(m - 1), "image of K" + str(m));
    for (const auto& [b, ws] : parts) {
      std::vector<ParenWord> mins, maxs;
      for (const auto& x : ws) {
        bool is_min = true, is_max = true;
        for (const auto& y : ws) {
          is_min = is_min && leq(x, y);
          is_max = is_max && leq(y, x);
        }
        if (is_min) mins.push_back(x);
        if (is_max) maxs.push_back(x);
      }
      const LObject t = to_tree(b);
      o.require(mins.size() == 1 && maxs.size() == 1, "fiber over " + render(b) + " lacks extremes");
      if (mins.size() == 1 && maxs.size() == 1)
        o.require(min_preimage(t) == mins[0] && max_preimage(t) == maxs[0], "extremes over " + render(b));
    }
  }
  return o;
}

Outcome embedding() {
  Outcome o;
  for (int m = 4; m <= 6; ++m) {
    const CheckReport r = check_embedding(m);
    o.require(r.ok, "m=" + str(m) + " " + r.failure);
  }
  const auto ks = oracle::brute_force_words(5);
  std::set<std::vector<ParenWord>> images;
  for (const auto& w : ks) {
    std::vector<ParenWord> row;
    for (int a = 1; a <= 5; ++a)
      for (int b = a + 1; b <= 5; ++b)
        for (int c = b + 1; c <= 5; ++c) {
          std::vector<ParenWord> eps(5, ParenWord::zero());
          eps[a - 1] = eps[b - 1] = eps[c - 1] = ParenWord::id();
          row.push_back(oracle::interval_gamma(w, eps));
        }
    images.insert(row);
  }
  o.require(images.size() == ks.size(), "triple projections do not separate K5 under the oracle");
  return o;
}

Outcome coherence() {
  Outcome o;
  const AnData p = fixtures::poset(6);
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; b <= 8; ++b) {
      const ObjId ab[2] = {a, b};
      o.require(p.mu_obj(ab) == std::min(8, a + b + a * b * b), "poset box table");
    }
  for (const AnData& d : {fixtures::z2(6), p}) {
    const CheckReport r = check_an_axioms(d);
    o.require(r.ok, r.failure + " " + r.witness.dump());
  }
  const CheckReport bad = check_an_axioms(fixtures::poset_corrupted(6));
  o.require(!bad.ok && bad.witness.contains("split"), "corrupted alpha table accepted");
  return o;
}

Outcome theta_round_trip() {
  Outcome o;
  for (const AnData& d : {fixtures::z2(6), fixtures::poset(6)}) {
    const KAlgebra k = theta_from_an(d);
    const CheckReport back = compare_an(an_from_theta(k), d);
    o.require(back.ok, "round trip: " + back.failure);
    const CheckReport compat = check_theta_compat(k, 5);
    o.require(compat.ok, "compatibility: " + compat.failure + " " + compat.witness.dump());
  }
  return o;
}

Outcome cubical() {
  Outcome o;
  std::mt19937_64 rng(1000003);
  int samples = 0, faces_ok = 0, exceptions = 0;
  for (int d = 2; d <= 4; ++d)
    for (int n = 0; n < 350; ++n) {
      const CubeSample s = random_cube_sample(rng, d);
      const auto v = check_cube_commutes(s.cat, s.cube);
      bool oracle_equal = true;
      for (std::uint32_t u = 0; u < (1u << d); ++u)
        for (std::uint32_t w = u; w < (1u << d); ++w)
          if ((w & u) == u && !oracle::all_paths_connected(d, s.imposed, u, w)) oracle_equal = false;
      o.require(v.all_paths_equal == oracle_equal, "path verdict differs from the oracle");
      ++samples;
      faces_ok += v.faces_ok;
      exceptions += v.faces_ok && !v.all_paths_equal;
    }
  o.require(samples >= 1000 && faces_ok > 0, "samples " + str(samples) + ", faces ok " + str(faces_ok));
  o.require(exceptions == 0, str(exceptions) + " exceptions");
  o.note = o.ok ? str(samples) + " samples, " + str(faces_ok) + " with commuting faces" : o.note;
  return o;
}

Outcome directed() {
  Outcome o;
  const AnData a = ainfty_from_directed(fixtures::poset_directed());
  const CheckReport r = check_an_axioms(a);
  o.require(r.ok, r.failure + " " + r.witness.dump());
  auto box = [](int x, int y) { return std::min(8, x + y + x * y * y); };
  detail::for_each_index_tuple(4, 9, [&](std::span<const int> ix) {
    o.require(a.mu_obj(tuple(ix)) == box(ix[0], box(ix[1], box(ix[2], ix[3]))), "mu4 table");
    return o.ok;
  });
  return o;
}

Outcome rectification() {
  Outcome o;
  const AnData ua = fixtures::unit_and_a();
  const MCat mc(theta_from_an(ua), 4);
  auto A = [](int k) { return SeqObject(static_cast<std::size_t>(k), 1); };
  o.require(mc.hom(A(1), A(3)).size() == 1 && mc.hom(A(2), A(3)).size() == 2 && mc.hom(A(2), A(4)).size() == 3,
            "hom sizes 1, 2, 3");
  for (int m = 1; m <= 4; ++m)
    for (int p = 0; p <= 4; ++p) {
      // morphisms A^m -> A^p: ordered partitions of p into m non-empty blocks
      long count = 0;
      detail::for_each_index_tuple(m, p + 1, [&](std::span<const int> ix) {
        int total = 0;
        bool positive = true;
        for (int x : ix) {
          total += x;
          positive = positive && x > 0;
        }
        count += positive && total == p;
        return true;
      });
      o.require(static_cast<long>(mc.hom(A(m), A(p)).size()) == count, "hom A^" + str(m) + " -> A^" + str(p));
    }
  const FinCat& C = mc.base();
  for (ObjId x = 0; x < C.num_objects(); ++x) o.require(mc.E_obj(mc.I_obj(x)) == x, "E I on objects");
  for (MorId f = 0; f < C.num_morphisms(); ++f) o.require(mc.E_mor(mc.I_mor(f)) == f, "E I on morphisms");
  const CheckReport laws = check_rectify(mc);
  o.require(laws.ok, laws.failure + " " + laws.witness.dump());
  const std::string coend = oracle::coend_mismatch(ua, 4);
  o.require(coend.empty(), "coend: " + coend);
  const CheckReport strict = check_e_strict(MCat(theta_from_an(fixtures::z2()), 4));
  o.require(strict.ok, "E strict on Z/2: " + strict.failure);
  return o;
}

struct Criterion {
  int id;
  const char* what;
  double limit;
  Outcome (*run)();
};

}  // namespace

int main() {
  const Criterion all[] = {
      {1, "K4 is the pentagon", 1, pentagon},
      {2, "cube decomposition of K4 and K5", 1, cube_decomposition},
      {3, "intervals of K_m are cubes, m <= 6", 30, interval_cubes},
      {4, "valence filtration contains the skeleton", 30, skeleton},
      {5, "Euler characteristic of K_m is 1", 30, euler},
      {6, "operad laws for gamma, total length <= 5", 60, operad_laws},
      {7, "Tamari posets and the pentagon L4", 60, tamari},
      {8, "comb expansion, fibers and extremes", 60, lambda},
      {9, "triple projections embed K_m and L_m", 60, embedding},
      {10, "A_n axioms on the fixtures, corrupted table rejected", 120, coherence},
      {11, "theta round trip and gamma compatibility", 120, theta_round_trip},
      {12, "commuting faces imply commuting cubes", 60, cubical},
      {13, "A_infinity structure from directed data", 60, directed},
      {14, "rectification", 120, rectification},
  };
  int failed = 0;
  for (const Criterion& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs >= c.limit) {
      o.ok = false;
      o.note = "over the time limit";
    }
    failed += !o.ok;
    std::printf("%s criterion %d: %s (%.2f s, limit %.0f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.what, secs, c.limit,
                o.note.empty() ? "" : ": ", o.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of 14 criteria passed\n", 14 - failed);
  return failed ? 1 : 0;
}
