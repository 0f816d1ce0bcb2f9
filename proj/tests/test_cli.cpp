#include <gtest/gtest.h>

#include "skein/cli.hpp"
#include "support.hpp"

#include <cstdlib>

using namespace skein;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, DoubleText) {
  auto r = run_cli({"double", "--J", "U", "--k", "1", "--p", "5", "--format", "text"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("gamma = x^2 + (-1 - A^2 + A^3)*x + 1"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("period = 10"), std::string::npos);
  // -1 - A^2 + A^3 is -(A + A^-1) reduced in k_5.
  EXPECT_EQ(CycloElem(5, LaurentPoly::parse("-1 - A^2 + A^3")), -(CycloElem::A(5) + CycloElem::A(5, -1)));
}

TEST(Cli, CoversPrintsEightOneValue) {
  auto r = run_cli({"covers", "--J", "U", "--k", "3", "--p", "5", "--d", "17..17"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("d=17: 188 + 152*A + 136*A^2"), std::string::npos) << r.out;
}

TEST(Cli, CoversCsvHasOneRowPerCover) {
  auto r = run_cli({"covers", "--J", "U", "--k", "-1", "--p", "5", "--d", "1..15", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "d,value");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 15);
  EXPECT_NE(r.out.find("15,\"2\""), std::string::npos);
}

TEST(Cli, BranchedCovers) {
  auto r = run_cli({"covers", "--J", "U", "--k", "3", "--p", "5", "--d", "17", "--branched"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("1175 + 762*A + 1123*A^2"), std::string::npos) << r.out;
}

TEST(Cli, JsonRoundTrip) {
  auto r = run_cli({"sum", "--left", "RT", "--right", "LT", "--p", "5", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  for (const char* key : {"p", "gamma", "D", "flatRank", "matrix", "eigen", "period"}) EXPECT_TRUE(j.contains(key)) << key;
  auto rec = invariant_from_json(j);
  auto z = knot_invariant(*KnotRef::parse("RT#LT"), 5);
  EXPECT_EQ(rec.p, 5);
  EXPECT_EQ(rec.gamma, z.gamma);
  EXPECT_EQ(rec.D, z.D);
  EXPECT_EQ(rec.flat_rank, z.flat_rank);
  EXPECT_EQ(rec.matrix, z.flat);
  EXPECT_EQ(rec.period, z.period);
  EXPECT_EQ(j["eigen"].size(), z.eigen.size());
}

TEST(Cli, TextAndJsonAgree) {
  auto t = run_cli({"double", "--J", "F8", "--k", "2", "--p", "5"});
  auto j = run_cli({"double", "--J", "F8", "--k", "2", "--p", "5", "--format", "json"});
  ASSERT_EQ(t.code, 0);
  ASSERT_EQ(j.code, 0);
  auto rec = invariant_from_json(nlohmann::json::parse(j.out));
  EXPECT_NE(t.out.find("gamma = " + poly_text(rec.gamma) + "\n"), std::string::npos);
  EXPECT_NE(t.out.find("D = " + ring_text(rec.D) + "\n"), std::string::npos);
}

TEST(Cli, DeterministicAcrossThreadCounts) {
  std::vector<std::string> args{"covers", "--J", "RT", "--k", "1", "--p", "5", "--d", "1..20", "--branched", "--format", "json"};
  setenv("SKEIN_THREADS", "1", 1);
  auto a = run_cli(args);
  setenv("SKEIN_THREADS", "4", 1);
  auto b = run_cli(args);
  unsetenv("SKEIN_THREADS");
  auto c = run_cli(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
}

TEST(Cli, BracketOfCorpusFiles) {
  auto a = run_cli({"bracket", skein_test::corpus_path("trefoil.pd")});
  ASSERT_EQ(a.code, 0) << a.err;
  auto d = PDCode::parse(read_file(skein_test::corpus_path("trefoil.pd")));
  EXPECT_EQ(a.out, "bracket = " + state_sum_bracket(d).str() + "\n");
  auto b = run_cli({"bracket", skein_test::corpus_path("plat_1.sw"), "--format", "json"});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(nlohmann::json::parse(b.out)["input"], "sw");
}

TEST(Cli, TangleCommand) {
  auto path = std::filesystem::temp_directory_path() / "skein_cli_tangle.sw";
  {
    std::ofstream f(path);
    f << "2n=4; cross+ 2; cross- 1; cross+ 3; cross+ 2\n";
  }
  auto r = run_cli({"tangle", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("D(L) = "), std::string::npos);
  EXPECT_NE(r.out.find("gamma(L) = "), std::string::npos);
  EXPECT_NE(r.out.find("wrapping = "), std::string::npos);
  EXPECT_EQ(run_cli({"tangle", path.string(), "--p", "6"}).code, 3);
  std::filesystem::remove(path);
}

TEST(Cli, BrieskornCommand) {
  auto r = run_cli({"brieskorn", "--c", "5", "--p", "5", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(parse_ring_text(j["value"].get<std::string>(), 5), brieskorn_value(5, 5));
}

TEST(Cli, CheckSuite) {
  auto r = run_cli({"check", "--suite", "appendixA"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("appendixA: 3/3 passed"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"double", "--J", "Q", "--k", "1", "--p", "5"}).code, 2);
  EXPECT_EQ(run_cli({"double", "--J", "U", "--k", "x", "--p", "5"}).code, 2);
  EXPECT_EQ(run_cli({"double", "--J", "U", "--k", "1", "--p", "5", "--format", "xml"}).code, 2);
  EXPECT_EQ(run_cli({"covers", "--J", "U", "--k", "1", "--p", "5", "--d", "3..1"}).code, 2);
  EXPECT_EQ(run_cli({"bracket", "/nonexistent/file.sw"}).code, 2);
  EXPECT_EQ(run_cli({"check", "--suite", "nope"}).code, 2);
  EXPECT_EQ(run_cli({"sum", "--left", "RT", "--right", "LT", "--p", "2"}).code, 3);
  EXPECT_EQ(run_cli({"double", "--J", "RT", "--k", "1", "--p", "7", "--color", "2"}).code, 3);
  setenv("SKEIN_THREADS", "-2", 1);
  EXPECT_EQ(run_cli({"double", "--J", "U", "--k", "1", "--p", "5"}).code, 2);
  unsetenv("SKEIN_THREADS");
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}
