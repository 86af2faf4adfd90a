#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "assoc/cli.hpp"
#include "assoc/fixtures.hpp"

using namespace assoc;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(ASSOC_DATA_DIR) + "/" + name; }

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

nlohmann::json json_of(const Result& r) { return nlohmann::json::parse(r.out); }

AnData load(const std::string& name) { return an_from_json(cli::read_file(data(name))); }

}  // namespace

TEST(Cli, Enumerate) {
  auto r = run({"enumerate", "--m", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).size(), 11u);
  EXPECT_EQ(run({"enumerate", "--m", "1"}).out, "x1\n");
  auto f = run({"enumerate", "--m", "5", "--filtration", "3", "--format", "json"});
  EXPECT_EQ(json_of(f)["words"].size(), 45u - 1u - 6u);
}

TEST(Cli, FVectorAndCompose) {
  auto r = run({"fvector", "--m", "5", "--format", "json"});
  EXPECT_EQ(json_of(r)["f"], nlohmann::json({14, 21, 9, 1}));
  EXPECT_EQ(json_of(r)["euler"], 1);
  EXPECT_EQ(run({"compose", "--outer", "x1x2", "--args", "x1x2", "x1"}).out, "(x1x2)x3\n");
  EXPECT_EQ(run({"compose", "--outer", "x1x2", "--args", "0", "x1"}).out, "x1\n");
  EXPECT_EQ(run({"compose", "--outer", "x1", "--args", "0"}).out, "0\n");
  EXPECT_EQ(run({"compose", "--outer", "[1,2]", "--args", "[1,2]", "{\"id\":true}"}).out, "(x1x2)x3\n");
  EXPECT_EQ(run({"compose", "--outer", "x1x2", "--args", "x1"}).code, 2);
}

TEST(Cli, Hasse) {
  auto k4 = json_of(run({"hasse", "--m", "4", "--format", "json"}));
  EXPECT_EQ(k4["nodes"].size(), 11u);
  EXPECT_EQ(k4["edges"].size(), 15u);
  auto l4 = json_of(run({"hasse", "--m", "4", "--tamari", "--format", "json"}));
  EXPECT_EQ(l4["nodes"].size(), 5u);
  EXPECT_EQ(l4["edges"].size(), 5u);
  auto dot = run({"hasse", "--m", "3", "--format", "dot"});
  EXPECT_EQ(dot.out,
            "digraph K3 {\n  n0 [label=\"x1x2x3\"];\n  n1 [label=\"x1(x2x3)\"];\n  n2 [label=\"(x1x2)x3\"];\n"
            "  n1 -> n0;\n  n2 -> n0;\n}\n");
}

TEST(Cli, LambdaFiberProject) {
  EXPECT_EQ(run({"lambda", "--word", "x1x2x3x4"}).out, "x1(x2(x3x4))\n");
  auto f = json_of(run({"fiber", "--binary", "x1(x2(x3x4))", "--format", "json"}));
  EXPECT_EQ(f["fiber"].size(), 4u);
  EXPECT_EQ(f["min"], "x1(x2(x3x4))");
  EXPECT_EQ(f["max"], "x1x2x3x4");
  EXPECT_EQ(run({"fiber", "--binary", "x1x2x3"}).code, 2);
  EXPECT_EQ(run({"project", "--word", "(x1x2)(x3x4)", "--a", "1", "--b", "2", "--c", "4"}).out,
            render(project_abc(parse("(x1x2)(x3x4)"), 1, 2, 4)) + "\n");
}

TEST(Cli, Checks) {
  EXPECT_EQ(run({"check", "tamari", "--poset", "--m", "5"}).code, 0);
  EXPECT_EQ(run({"check", "tamari", "--lambda", "--m", "5"}).code, 0);
  EXPECT_EQ(run({"check", "tamari", "--generation", "--m", "5"}).code, 0);
  EXPECT_EQ(run({"check", "embedding", "--m", "5"}).code, 0);
  EXPECT_EQ(run({"check", "operad", "--max-total", "3"}).code, 0);
  EXPECT_EQ(run({"check", "coherence", "--input", data("z2.json")}).code, 0);
  EXPECT_EQ(run({"check", "coherence", "--input", data("twisted.json")}).code, 0);
  EXPECT_EQ(run({"check", "cube", "--input", data("square_poset.json")}).code, 0);
  auto sq = run({"check", "cube", "--input", data("square_twisted.json")});
  EXPECT_EQ(sq.code, 1);
  EXPECT_EQ(json_of(sq)["faces_ok"], false);
  EXPECT_EQ(run({"check", "cube", "--random", "300", "--seed", "9"}).code, 0);
  EXPECT_EQ(run({"check", "rectify", "--input", data("unit_and_a.json"), "--max-len", "3", "--max-total", "3"}).code, 0);
}

TEST(Cli, FixtureFilesMatchFixtures) {
  EXPECT_TRUE(compare_an(load("z2.json"), fixtures::z2()).ok);
  EXPECT_TRUE(compare_an(load("unit_and_a.json"), fixtures::unit_and_a()).ok);
  EXPECT_TRUE(compare_an(load("twisted.json"), fixtures::twisted()).ok);
  EXPECT_TRUE(compare_an(load("twisted_corrupted.json"), fixtures::twisted_corrupted()).ok);
  AnData p = load("poset.json");
  p.bound = 4;
  EXPECT_TRUE(compare_an(p, fixtures::poset(4)).ok);
  AnData pc = load("poset_corrupted.json");
  pc.bound = 4;
  EXPECT_TRUE(compare_an(pc, fixtures::poset_corrupted(4)).ok);
  EXPECT_FALSE(compare_an(pc, fixtures::poset(4)).ok);
}

TEST(Cli, CorruptedAlphaWitnessReplays) {
  auto r = run({"check", "coherence", "--input", data("poset_corrupted.json"), "--bound", "4"});
  ASSERT_EQ(r.code, 1);
  const auto j = json_of(r);
  EXPECT_EQ(j["failure"], "alpha typing");
  const AnData d = load("poset_corrupted.json");
  const FinCat& C = *d.cat;
  const auto s = j["witness"]["split"].get<std::vector<int>>();
  std::vector<ObjId> t;
  for (const auto& o : j["witness"]["objects"]) t.push_back(C.object_index(o.get<std::string>()));
  const auto a = d.alpha({s[0], s[1], s[2]}, t);
  ASSERT_TRUE(a);
  EXPECT_EQ(C.morphism(*a).name, j["witness"]["value"]);
  EXPECT_NE(C.object_name(C.dst(*a)), j["witness"]["expected_target"]);

  auto tw = run({"check", "coherence", "--input", data("twisted_corrupted.json")});
  ASSERT_EQ(tw.code, 1);
  EXPECT_EQ(json_of(tw)["failure"], "(ii)");
}

TEST(Cli, FromDirected) {
  auto r = run({"from-directed", "--input", data("poset_directed.json"), "--bound", "4", "--emit-arity", "4"});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  AnData back = an_from_json(json_of(r)["data"]);
  EXPECT_EQ(back.bound, 4);
  EXPECT_TRUE(compare_an(back, fixtures::poset(4)).ok);
  auto bad = run({"from-directed", "--input", data("twisted_directed.json"), "--bound", "4"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(json_of(bad)["failure"], "pentagon");
  EXPECT_EQ(json_of(bad)["witness"]["objects"], nlohmann::json({"A", "A", "A", "A"}));
}

TEST(Cli, AnDataRoundTripsThroughJson) {
  for (AnData d : {fixtures::twisted(4), fixtures::twisted_corrupted(4), fixtures::poset(3), fixtures::z2(4)}) {
    AnData back = an_from_json(to_json(d, 4));
    EXPECT_TRUE(compare_an(back, d).ok);
  }
  for (AnData d : {fixtures::twisted(), fixtures::z2()}) {
    FinCat c = fincat_from_json(to_json(*d.cat));
    EXPECT_TRUE(c.validate().ok);
    EXPECT_EQ(c.num_morphisms(), d.cat->num_morphisms());
  }
}

TEST(Cli, BuildTheta) {
  auto j = json_of(run({"build-theta", "--input", data("poset.json"), "--max-m", "3"}));
  const auto& rows = j["theta"]["(x1x2)x3"];
  ASSERT_EQ(rows.size(), 729u);
  for (const auto& row : rows) {
    const int a = std::stoi(row[0][0].get<std::string>()), b = std::stoi(row[0][1].get<std::string>()),
              c = std::stoi(row[0][2].get<std::string>());
    EXPECT_EQ(std::stoi(row[1].get<std::string>()), fixtures::poset_box(fixtures::poset_box(a, b), c));
  }
}

TEST(Cli, RectifyDemo) {
  auto r = run({"rectify", "demo", "--input", data("unit_and_a.json"), "--max-len", "4"});
  ASSERT_EQ(r.code, 0);
  const auto j = json_of(r);
  EXPECT_EQ(j["objects"].size(), 5u);
  auto count = [&](int m, int p) {
    for (const auto& h : j["homs"])
      if (h["source"].size() == static_cast<std::size_t>(m) && h["target"].size() == static_cast<std::size_t>(p))
        return h["count"].get<int>();
    return 0;
  };
  EXPECT_EQ(count(1, 3), 1);
  EXPECT_EQ(count(2, 3), 2);
  EXPECT_EQ(count(2, 4), 3);
  EXPECT_EQ(j["e_strict"]["ok"], true);
  EXPECT_EQ(run({"rectify", "demo", "--input", data("poset.json")}).code, 1);
}

TEST(Cli, JsonOutputIsStable) {
  for (auto args : std::vector<std::vector<std::string>>{
           {"hasse", "--m", "5", "--format", "json"},
           {"rectify", "demo", "--input", data("twisted.json"), "--max-len", "3"},
           {"from-directed", "--input", data("poset_directed.json"), "--bound", "4", "--emit-arity", "3"}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}

TEST(Cli, UsageAndInputErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"enumerate"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--m", "x"}).code, 2);
  EXPECT_EQ(run({"check", "tamari", "--m", "4"}).code, 2);
  EXPECT_EQ(run({"lambda", "--word", "x1(x2"}).code, 2);
  EXPECT_EQ(run({"check", "coherence", "--input", data("missing.json")}).code, 2);
  const std::string bad = testing::TempDir() + "bad_input.json";
  for (const std::string body : {"{not json", R"({"category": {"chain": 2}, "unit": "7", "mu": {}, "alpha": "unique"})",
                                 R"({"category": {"chain": 2}, "unit": "0", "mu": {"right_nested": []}, "alpha": "x"})"}) {
    std::ofstream(bad) << body;
    auto r = run({"check", "coherence", "--input", bad});
    EXPECT_EQ(r.code, 2) << body;
    EXPECT_FALSE(r.err.empty());
  }
  std::remove(bad.c_str());
  EXPECT_EQ(run({"--help"}).code, 0);
}
