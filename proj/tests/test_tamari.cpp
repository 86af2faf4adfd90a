#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "assoc/tamari.hpp"
#include "oracles.hpp"

using assoc::LObject;
using assoc::ParenWord;
using assoc::box;
using assoc::parse;

namespace {

LObject X() { return assoc::StableTree::leaf(); }
LObject tree(const char* s) { return assoc::to_tree(parse(s)); }

}  // namespace

TEST(Rotation, Examples) {
  auto c3 = assoc::rotation_covers(tree("(x1x2)x3"));
  ASSERT_EQ(c3.size(), 1u);
  EXPECT_EQ(c3[0], tree("x1(x2x3)"));
  EXPECT_TRUE(assoc::rotation_covers(assoc::right_comb(4)).empty());
  EXPECT_EQ(assoc::rotation_covers(assoc::left_comb(4)).size(), 2u);
  EXPECT_THROW(assoc::rotation_covers(tree("x1x2x3")), std::invalid_argument);
}

TEST(Rotation, MatchesIntervalMove) {
  // a rotation drops the span of A.B and adds the span of B.C
  for (int m = 3; m <= 7; ++m)
    for (const LObject& t : assoc::binary_trees(m)) {
      auto r0 = oracle::right_bracket_vector(assoc::from_tree(t));
      for (const LObject& u : assoc::rotation_covers(t)) {
        auto r1 = oracle::right_bracket_vector(assoc::from_tree(u));
        int changed = 0;
        for (std::size_t i = 1; i < r0.size(); ++i)
          if (r0[i] != r1[i]) {
            ++changed;
            EXPECT_LT(r0[i], r1[i]);
          }
        EXPECT_EQ(changed, 1);
      }
    }
}

TEST(BinaryTrees, CatalanAndBruteForce) {
  for (int m = 1; m <= 8; ++m) {
    auto ts = assoc::binary_trees(m);
    EXPECT_EQ(ts.size(), oracle::catalan(m - 1)) << m;
    for (const LObject& t : ts) EXPECT_TRUE(assoc::is_binary(t));
  }
  for (int m = 2; m <= 7; ++m) {
    std::vector<ParenWord> ours;
    for (const LObject& t : assoc::binary_trees(m)) ours.push_back(assoc::from_tree(t));
    auto brute = oracle::brute_force_binary(m);
    std::sort(ours.begin(), ours.end());
    std::sort(brute.begin(), brute.end());
    EXPECT_EQ(ours, brute) << m;
  }
  EXPECT_EQ(assoc::binary_trees(0).size(), 1u);
}

TEST(TamariLeq, Examples) {
  EXPECT_TRUE(assoc::tamari_leq(assoc::left_comb(4), assoc::right_comb(4)));
  EXPECT_FALSE(assoc::tamari_leq(assoc::right_comb(4), assoc::left_comb(4)));
  LObject a = tree("(x1x2)(x3x4)"), b = tree("(x1(x2x3))x4");
  EXPECT_FALSE(assoc::tamari_leq(a, b));
  EXPECT_FALSE(assoc::tamari_leq(b, a));
  for (const LObject& t : assoc::binary_trees(5)) EXPECT_TRUE(assoc::tamari_leq(t, t));
}

TEST(TamariLeq, AgreesWithBracketVectors) {
  for (int m = 2; m <= 6; ++m) {
    assoc::TamariPoset p(m);
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j) {
        bool expect = oracle::tamari_leq_vectors(assoc::from_tree(p.object(i)), assoc::from_tree(p.object(j)));
        ASSERT_EQ(p.leq(i, j), expect) << assoc::render(p.object(i)) << " " << assoc::render(p.object(j));
        if (m <= 5) ASSERT_EQ(assoc::tamari_leq(p.object(i), p.object(j)), expect);
      }
  }
}

TEST(TamariPoset, Pentagon) {
  assoc::TamariPoset p(4);
  EXPECT_EQ(p.size(), 5u);
  std::size_t covers = 0, incomparable = 0;
  for (std::size_t i = 0; i < p.size(); ++i) covers += p.covers(i).size();
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (!p.leq(i, j) && !p.leq(j, i)) ++incomparable;
  EXPECT_EQ(covers, 5u);
  // the short side (x1x2)(x3x4) is incomparable with both elements of the
  // long side
  EXPECT_EQ(incomparable, 2u);
  EXPECT_FALSE(p.leq(tree("(x1x2)(x3x4)"), tree("(x1(x2x3))x4")));
  EXPECT_FALSE(p.leq(tree("(x1x2)(x3x4)"), tree("x1((x2x3)x4)")));
  EXPECT_FALSE(p.leq(tree("x1((x2x3)x4)"), tree("(x1x2)(x3x4)")));
}

TEST(CheckPoset, Antisymmetric) {
  for (int m = 2; m <= 7; ++m) EXPECT_TRUE(assoc::check_poset(m).ok) << m;
  EXPECT_EQ(assoc::TamariPoset(6).size(), 42u);
}

TEST(Lambda, Examples) {
  EXPECT_EQ(assoc::lambda_obj(parse("(x1x2)x3")), box(box(X(), X()), X()));
  EXPECT_EQ(assoc::lambda_obj(parse("x1x2x3")), box(X(), box(X(), X())));
  EXPECT_EQ(assoc::lambda_obj(parse("x1(x2x3x4)")), assoc::right_comb(4));
  EXPECT_EQ(assoc::lambda_obj(ParenWord::zero()), assoc::StableTree::empty());
  EXPECT_EQ(assoc::lambda_obj(ParenWord::id()), X());
  for (const LObject& t : assoc::binary_trees(6)) EXPECT_EQ(assoc::lambda_obj(t), t);
}

TEST(Lambda, AgreesWithIntervalOracle) {
  for (int m = 0; m <= 7; ++m)
    for (const ParenWord& w : assoc::enumerate(m))
      ASSERT_EQ(assoc::from_tree(assoc::lambda_obj(w)), oracle::interval_comb(w)) << assoc::render(w);
}

TEST(Lambda, Morphisms) {
  auto g = assoc::lambda_mor(assoc::KMorphism(parse("((x1x2)x3)x4"), parse("(x1x2x3)x4")));
  EXPECT_EQ(g.source, tree("((x1x2)x3)x4"));
  EXPECT_EQ(g.target, tree("(x1(x2x3))x4"));
  auto h = assoc::lambda_mor(assoc::KMorphism(parse("x1(x2(x3x4))"), parse("x1x2x3x4")));
  EXPECT_EQ(h.source, h.target);
  EXPECT_EQ(h.source, assoc::right_comb(4));
  auto i = assoc::lambda_mor(assoc::KMorphism::identity(parse("x1(x2x3)x4")));
  EXPECT_EQ(i.source, i.target);
}

TEST(Lambda, OrderPreservingExhaustive) {
  for (int m = 2; m <= 6; ++m) {
    auto ks = assoc::enumerate(m);
    for (const ParenWord& a : ks)
      for (const ParenWord& b : ks)
        if (assoc::leq(a, b))
          ASSERT_TRUE(oracle::tamari_leq_vectors(oracle::interval_comb(a), oracle::interval_comb(b)));
  }
}

TEST(Fiber, Examples) {
  auto f = assoc::fiber(assoc::right_comb(4));
  std::vector<std::string> got;
  for (const auto& w : f) got.push_back(assoc::render(w));
  std::sort(got.begin(), got.end());
  std::vector<std::string> want{"x1(x2(x3x4))", "x1(x2x3x4)", "x1x2(x3x4)", "x1x2x3x4"};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(got, want);
  EXPECT_EQ(assoc::fiber(assoc::left_comb(4)).size(), 1u);

  std::vector<std::size_t> sizes;
  std::size_t total = 0;
  for (const LObject& t : assoc::binary_trees(4)) {
    sizes.push_back(assoc::fiber(t).size());
    total += sizes.back();
  }
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 2, 2, 2, 4}));
  EXPECT_EQ(total, 11u);
}

TEST(Fiber, ExtremesMatchBruteForce) {
  EXPECT_EQ(assoc::max_preimage(assoc::right_comb(4)), parse("x1x2x3x4"));
  EXPECT_EQ(assoc::max_preimage(assoc::left_comb(4)), parse("((x1x2)x3)x4"));
  for (int m = 2; m <= 7; ++m) {
    // partition K_m by the interval oracle and find extremes by scanning
    std::map<ParenWord, std::vector<ParenWord>> parts;
    for (const ParenWord& w : oracle::brute_force_words(m)) parts[oracle::interval_comb(w)].push_back(w);
    EXPECT_EQ(parts.size(), oracle::catalan(m - 1));
    for (const auto& [b, ws] : parts) {
      const LObject t = assoc::to_tree(b);
      std::vector<ParenWord> mins, maxs;
      for (const auto& x : ws) {
        bool is_min = true, is_max = true;
        for (const auto& y : ws) {
          if (!assoc::leq(x, y)) is_min = false;
          if (!assoc::leq(y, x)) is_max = false;
        }
        if (is_min) mins.push_back(x);
        if (is_max) maxs.push_back(x);
      }
      ASSERT_EQ(mins.size(), 1u);
      ASSERT_EQ(maxs.size(), 1u);
      EXPECT_EQ(assoc::min_preimage(t), mins[0]);
      EXPECT_EQ(assoc::max_preimage(t), maxs[0]);
      if (m <= 6) EXPECT_EQ(assoc::fiber(t).size(), ws.size());
    }
  }
}

TEST(CheckLambda, Passes) {
  for (int m = 2; m <= 7; ++m) {
    auto r = assoc::check_lambda(m);
    EXPECT_TRUE(r.ok) << m << " " << r.to_json().dump();
  }
}

TEST(Project, Examples) {
  for (auto [a, b, c] : std::vector<std::array<int, 3>>{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}})
    EXPECT_EQ(assoc::project_abc(parse("x1x2x3x4"), a, b, c), parse("x1x2x3"));
  EXPECT_EQ(assoc::project_abc(parse("((x1x2)x3)x4"), 1, 2, 3), parse("(x1x2)x3"));
  EXPECT_EQ(assoc::project_abc(parse("(x1x2)(x3x4)"), 1, 2, 4), parse("(x1x2)x3"));
  EXPECT_THROW(assoc::project_abc(parse("x1x2x3x4"), 2, 2, 3), std::invalid_argument);
  EXPECT_THROW(assoc::project_abc(parse("x1x2x3x4"), 1, 2, 5), std::invalid_argument);
}

TEST(Project, AgreesWithIntervalOracle) {
  for (int m = 4; m <= 6; ++m)
    for (const ParenWord& w : assoc::enumerate(m))
      for (const auto& t : assoc::detail::triples(m)) {
        std::vector<ParenWord> eps(m, ParenWord::zero());
        for (int i : t) eps[i - 1] = ParenWord::id();
        ASSERT_EQ(assoc::project_abc(w, t[0], t[1], t[2]), oracle::interval_gamma(w, eps));
      }
}

TEST(CheckEmbedding, Passes) {
  for (int m = 4; m <= 6; ++m) {
    auto r = assoc::check_embedding(m);
    EXPECT_TRUE(r.ok) << m << " " << r.to_json().dump();
  }
}

TEST(CheckEmbedding, InjectivityByBruteForce) {
  auto ks = oracle::brute_force_words(4);
  std::set<std::vector<ParenWord>> images;
  for (const auto& w : ks) {
    std::vector<ParenWord> row;
    for (const auto& t : assoc::detail::triples(4)) {
      std::vector<ParenWord> eps(4, ParenWord::zero());
      for (int i : t) eps[i - 1] = ParenWord::id();
      row.push_back(oracle::interval_gamma(w, eps));
    }
    images.insert(row);
  }
  EXPECT_EQ(images.size(), 11u);
}

TEST(Generation, EveryCoverIsAComposite) {
  for (int m = 3; m <= 6; ++m) EXPECT_TRUE(assoc::check_generation(m).ok) << m;
  auto w = assoc::rotation_witnesses(assoc::left_comb(4));
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w[0].context.leaves(), 1);
}
