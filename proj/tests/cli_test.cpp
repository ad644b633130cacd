#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "cli_app.hpp"

using knotperm::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream f(std::string(KNOTPERM_GOLDEN_DIR) + "/" + name, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

std::size_t count_of(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(Classify, GoldenFiles) {
  EXPECT_EQ(cli({"classify", "864275193"}).out, golden("classify_864275193.txt"));
  EXPECT_EQ(cli({"classify", "732541698"}).out, golden("classify_732541698.txt"));
}

TEST(Classify, LinkedWitness) {
  const auto r = cli({"classify", "3412"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("status: linked"), std::string::npos);
  EXPECT_NE(r.out.find("between (1 3) and (2 4)"), std::string::npos);
}

TEST(Classify, TrivialCycle) {
  const auto r = cli({"classify", "21"});
  EXPECT_NE(r.out.find("status: unknot"), std::string::npos);
  EXPECT_NE(r.out.find("tree: (. .)"), std::string::npos);
}

TEST(Classify, JsonRoundTripIsByteIdentical) {
  for (const char* p : {"864275193", "3412", "21", "732541698", "456231", "132"}) {
    const auto r = cli({"classify", p, "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::string body = r.out;
    ASSERT_FALSE(body.empty());
    body.pop_back();
    EXPECT_EQ(nlohmann::json::parse(body).dump(), body);
  }
  const auto j = nlohmann::json::parse(cli({"classify", "3412", "--json"}).out);
  EXPECT_EQ(j["status"], "linked");
  EXPECT_EQ(j["tb"], 0);
  EXPECT_EQ(j["witness"]["components"][0], "(1 3)");
  const auto k = nlohmann::json::parse(cli({"classify", "132", "--json"}).out);
  EXPECT_FALSE(k.contains("tb"));
  EXPECT_FALSE(k.contains("tree"));
  const auto u = nlohmann::json::parse(cli({"classify", "864275193", "--json"}).out);
  std::vector<std::string> keys;
  for (auto it = u.begin(); it != u.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"components", "crossings", "input", "n", "status", "tb", "tree",
                                            "ur_indices", "writhe"}));
}

TEST(Classify, ParseErrorsExitTwo) {
  EXPECT_EQ(cli({"classify", "331"}).code, 2);
  EXPECT_EQ(cli({"classify", "1,x"}).code, 2);
  EXPECT_EQ(cli({"bogus"}).code, 2);
  EXPECT_EQ(cli({}).code, 2);
}

TEST(Tree, ToCycleAndTrace) {
  EXPECT_EQ(cli({"tree", "to-cycle", "(+(+(. .) -(. .)) -(. .))"}).out, "2,4,6,3,1,5\n");
  EXPECT_EQ(cli({"tree", "to-cycle", "(+(+(. .) -(. .)) -(. .))", "--trace"}).out, golden("tree_trace.txt"));
  EXPECT_EQ(cli({"tree", "to-cycle", "(+(. .) +(. .) extra"}).code, 2);
}

TEST(Tree, FromCycle) {
  const auto r = cli({"tree", "from-cycle", "246315"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, knotperm::canonical_form(knotperm::parse_tree("(+(+(. .) -(. .)) -(. .))")).to_string() + "\n");
  const auto k = cli({"tree", "from-cycle", "456231"});
  EXPECT_EQ(k.code, 1);
  EXPECT_EQ(k.err, "knotted\n");
  EXPECT_EQ(cli({"tree", "from-cycle", "345612"}).code, 2);  // two 3-cycles, not a cycle
}

TEST(Count, UnknottedCyclesWithCheck) {
  const auto r = cli({"count", "unknotted-cycles", "2..9", "--check"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "n\tunknotted\n2\t1\n3\t2\n4\t6\n5\t22\n6\t90\n7\t394\n8\t1806\n9\t8558\n");
  EXPECT_EQ(r.err, "check: ok\n");
}

TEST(Count, UnlinkedByComponents) {
  const auto r = cli({"count", "unlinked", "2..8", "--by-components", "--check"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("8\t3316\t1806\t1216\t280\t14\n"), std::string::npos);
}

TEST(Count, WithFixedPoints) {
  const auto r = cli({"count", "unlinked-with-fixed", "1..8", "--check"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "n\ttotal\n1\t1\n2\t2\n3\t6\n4\t23\n5\t103\n6\t511\n7\t2719\n8\t15205\n");
}

TEST(Count, CapsAndThreads) {
  EXPECT_EQ(cli({"count", "unlinked", "12"}).code, 2);
  EXPECT_EQ(cli({"--max-n", "6", "count", "unknotted-cycles", "7"}).code, 2);
  EXPECT_EQ(cli({"count", "unknotted-cycles", "7", "--max-n", "6"}).code, 2);
  EXPECT_EQ(cli({"--threads", "3", "count", "unknotted-cycles", "9"}).out, cli({"count", "unknotted-cycles", "9"}).out);
  EXPECT_EQ(cli({"count", "everything", "3"}).code, 2);
  EXPECT_EQ(cli({"count", "unlinked", "5..3"}).code, 2);
}

TEST(Render, Ascii) {
  EXPECT_EQ(cli({"render", "21", "--ascii"}).out, golden("render_21.txt"));
  const auto r = cli({"render", "864275193"});
  EXPECT_EQ(count_of(r.out, "^"), 3u);
  EXPECT_EQ(count_of(r.out, "+"), 9u);
  EXPECT_EQ(count_of(r.out, "\n"), 17u);
}

TEST(Render, Svg) {
  const auto a = cli({"render", "467513298", "--svg"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(count_of(a.out, "<circle class=\"dot\""), 9u);
  EXPECT_EQ(count_of(a.out, "class=\"diagonal\""), 1u);
  EXPECT_EQ(a.out, cli({"render", "467513298", "--svg"}).out);
  const auto b = cli({"render", "864275193", "--svg", "--seifert"});
  EXPECT_EQ(count_of(b.out, "<polygon class=\"seifert\""), 4u);
  EXPECT_EQ(cli({"render", "21", "--svg", "--cell-size", "3"}).code, 2);
  EXPECT_EQ(cli({"render", "21", "--svg", "--ascii"}).code, 2);
}

TEST(Render, OutFile) {
  const auto path = std::filesystem::temp_directory_path() / "knotperm_render_test.svg";
  EXPECT_EQ(cli({"render", "21", "--svg", "--out", path.string()}).code, 0);
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  EXPECT_EQ(s.str(), cli({"render", "21", "--svg"}).out);
  std::filesystem::remove(path);
}

TEST(Verify, SmallAndCapped) {
  const auto r = cli({"verify", "5"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(count_of(r.out, "PASS"), 5u);
  EXPECT_EQ(cli({"verify", "99"}).code, 2);
}

TEST(Misc, DgAndProbability) {
  const auto d = cli({"dg-experiment", "4"});
  EXPECT_EQ(d.out, "n=4: equal  dg_tight=23 unlinked=23 only_dg=0 only_unlinked=0\n");
  EXPECT_EQ(cli({"dg-experiment", "9"}).code, 2);
  EXPECT_EQ(cli({"prob-unknot", "5"}).out, "5\t11/12\n");
  EXPECT_EQ(cli({"prob-unknot", "9"}).out, "9\t4279/20160\n");
}
