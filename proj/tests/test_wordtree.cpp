#include <gtest/gtest.h>

#include <random>
#include <set>

#include "assoc/kposet.hpp"
#include "assoc/wordtree.hpp"

using assoc::Interval;
using assoc::ParenWord;
using assoc::ParseError;
using assoc::StableTree;

TEST(Parse, NestedExample) {
  ParenWord w = assoc::parse("x1((x2x3x4)(x5x6))");
  EXPECT_EQ(w, ParenWord(6, {{2, 6}, {2, 4}, {5, 6}}));
  EXPECT_EQ(w.intervals().front(), (Interval{2, 6}));  // parent before children
}

TEST(Parse, FlatAndLeftNested) {
  EXPECT_EQ(assoc::parse("x1x2x3x4"), ParenWord::terminal(4));
  EXPECT_EQ(assoc::parse("((x1x2)x3)x4"), ParenWord(4, {{1, 3}, {1, 2}}));
  EXPECT_EQ(assoc::parse(""), ParenWord::zero());
  EXPECT_EQ(assoc::parse("x1"), ParenWord::id());
  EXPECT_EQ(assoc::parse(" x1 (x2 x3) "), ParenWord(3, {{2, 3}}));
}

TEST(Parse, Rejects) {
  EXPECT_THROW(assoc::parse("(x1x2"), ParseError);
  EXPECT_THROW(assoc::parse("x1x2)"), ParseError);
  EXPECT_THROW(assoc::parse("x2x1"), ParseError);
  EXPECT_THROW(assoc::parse("x1x3"), ParseError);
  EXPECT_THROW(assoc::parse("(x1)x2"), ParseError);
  EXPECT_THROW(assoc::parse("(x1x2x3)"), ParseError);
  EXPECT_THROW(assoc::parse("((x1x2))x3"), ParseError);
  EXPECT_THROW(assoc::parse("()x1x2"), ParseError);
  EXPECT_THROW(assoc::parse("x1y2"), ParseError);
  EXPECT_THROW(assoc::parse("x"), ParseError);
}

TEST(Render, Examples) {
  EXPECT_EQ(assoc::render(ParenWord(6, {{2, 6}, {2, 4}, {5, 6}})), "x1((x2x3x4)(x5x6))");
  EXPECT_EQ(assoc::render(ParenWord::zero()), "");
  EXPECT_EQ(assoc::render(ParenWord(4, {{2, 3}})), "x1(x2x3)x4");
  EXPECT_EQ(assoc::parse(assoc::render(ParenWord(4, {{2, 3}}))), ParenWord(4, {{2, 3}}));
}

TEST(ParenWordInvariants, ConstructorRejects) {
  EXPECT_THROW(ParenWord(4, {{1, 3}, {2, 4}}), ParseError);  // crossing
  EXPECT_THROW(ParenWord(4, {{1, 4}}), ParseError);          // whole word
  EXPECT_THROW(ParenWord(4, {{2, 2}}), ParseError);          // singleton
  EXPECT_THROW(ParenWord(4, {{3, 5}}), ParseError);          // out of range
  EXPECT_THROW(ParenWord(1, {{1, 1}}), ParseError);
}

// Random interval sets: the constructor accepts exactly the laminar ones.
TEST(ParenWordInvariants, LaminarityProperty) {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 3000; ++trial) {
    int m = 3 + static_cast<int>(rng() % 6);
    int count = static_cast<int>(rng() % 4);
    std::vector<Interval> ps;
    for (int i = 0; i < count; ++i) {
      int a = 1 + static_cast<int>(rng() % static_cast<unsigned>(m - 1));
      int b = a + 1 + static_cast<int>(rng() % static_cast<unsigned>(m - a));
      if (b - a + 1 >= m) b = a + 1;
      if (b > m || b - a + 1 >= m) continue;
      if (std::find(ps.begin(), ps.end(), Interval{a, b}) == ps.end()) ps.push_back({a, b});
    }
    bool laminar = true;
    for (const auto& x : ps)
      for (const auto& y : ps)
        if (!(x.contains(y) || y.contains(x) || x.disjoint(y))) laminar = false;
    if (laminar) {
      ParenWord w(m, ps);
      EXPECT_EQ(assoc::parse(assoc::render(w)), w);
    } else {
      EXPECT_THROW(ParenWord(m, ps), ParseError);
    }
  }
}

TEST(Trees, CorollaAndDegenerate) {
  EXPECT_EQ(assoc::to_tree(ParenWord::terminal(4)), StableTree::corolla(4));
  EXPECT_TRUE(assoc::to_tree(ParenWord::id()).is_leaf());
  EXPECT_TRUE(assoc::to_tree(ParenWord::zero()).is_empty());
  EXPECT_THROW(StableTree::node({StableTree::leaf()}), ParseError);
}

TEST(Trees, RoundTripExhaustive) {
  for (int m = 0; m <= 7; ++m)
    for (const ParenWord& w : assoc::enumerate(m)) {
      StableTree t = assoc::to_tree(w);
      EXPECT_EQ(t.leaves(), m);
      EXPECT_EQ(assoc::from_tree(t), w);
      EXPECT_EQ(assoc::parse(assoc::render(w)), w);
    }
}

TEST(Json, TreeForms) {
  EXPECT_EQ(assoc::to_json(assoc::parse("(x1x2)x3")).dump(), "[[1,2],3]");
  EXPECT_EQ(assoc::to_json(ParenWord::id()).dump(), "{\"id\":true}");
  EXPECT_EQ(assoc::to_json(ParenWord::zero()).dump(), "{\"empty\":true}");
  EXPECT_EQ(assoc::word_from_json(nlohmann::json::parse("[1,[2,3,4]]")), assoc::parse("x1(x2x3x4)"));
  EXPECT_THROW(assoc::word_from_json(nlohmann::json::parse("[[1],2]")), ParseError);
  EXPECT_THROW(assoc::word_from_json(nlohmann::json::parse("[2,1]")), ParseError);
  EXPECT_THROW(assoc::word_from_json(nlohmann::json::parse("1")), ParseError);
  for (const ParenWord& w : assoc::enumerate(5)) EXPECT_EQ(assoc::word_from_json(assoc::to_json(w)), w);
}
