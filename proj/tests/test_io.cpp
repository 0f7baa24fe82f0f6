#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "bimarket/io/commands.hpp"

namespace bimarket::io {
namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(BIMARKET_DATA_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(ParseMarket, Model1Fixture) {
  const auto m = parse_market(slurp("model1_market.json"));
  EXPECT_EQ(m.size(), 3u);
  EXPECT_EQ(m.a[0][0], 76);
  EXPECT_EQ(m.b[2][1], 85);
  EXPECT_EQ(m.workers, (std::vector<std::string>{"s1", "s2", "s3"}));
}

TEST(ParseMarket, ExactNumbers) {
  const auto m = parse_market(R"({"workers":["w"],"enterprises":["e"],"A":[[0.1]],"B":[["7/3"]]})");
  EXPECT_EQ(m.a[0][0], Rational(1, 10));
  EXPECT_EQ(m.b[0][0], Rational(7, 3));
  const auto e = parse_market(R"({"workers":["w"],"enterprises":["e"],"A":[[1.5e1]],"B":[[-2]]})");
  EXPECT_EQ(e.a[0][0], 15);
  EXPECT_EQ(e.b[0][0], -2);
}

TEST(ParseMarket, SchemaErrors) {
  EXPECT_THROW(parse_market(R"({"workers":[],"enterprises":[],"A":[],"B":[]})"), SchemaError);
  EXPECT_THROW(parse_market(R"({"workers":["a","b"],"enterprises":["x","y"],
      "A":[[1,2,3],[4,5,6],[7,8,9]],"B":[[1,2],[4,5]]})"),
               SchemaError);
  EXPECT_THROW(parse_market(R"({"workers":["a","b"],"enterprises":["x","y","z"],
      "A":[[1,2],[4,5]],"B":[[1,2],[4,5]]})"),
               SchemaError);
  EXPECT_THROW(parse_market(R"({"workers":["a"],"enterprises":["x"],"A":[["abc"]],"B":[[1]]})"), SchemaError);
  EXPECT_THROW(parse_market(R"({"workers":["a"],"enterprises":["x"],"A":[[true]],"B":[[1]]})"), SchemaError);
  EXPECT_THROW(parse_market(R"({"workers":["a"],"enterprises":["x"],"A":[[1]]})"), SchemaError);
  EXPECT_THROW(parse_market(R"([1,2])"), SchemaError);
}

TEST(ParseMarket, SyntaxErrors) {
  EXPECT_THROW(parse_market("{\"workers\": [\"a\""), ParseError);
  EXPECT_THROW(parse_market(""), ParseError);
}

TEST(ParseBimatrix, FixtureAndErrors) {
  const auto f = parse_bimatrix(slurp("model3_union_game.json"));
  EXPECT_EQ(f.payoffs[1][1], (PayoffPair{2, 6}));
  EXPECT_THROW(parse_bimatrix(R"({"row_labels":["a"],"col_labels":["b"],"payoffs":[[[1]]]})"), SchemaError);
  EXPECT_THROW(parse_bimatrix(R"({"row_labels":["a"],"col_labels":["b","c"],"payoffs":[[[1,1]]]})"),
               SchemaError);
  EXPECT_THROW(parse_bimatrix(R"({"row_labels":["a"],"col_labels":["b"],"payoffs":[[[1,1]])"), ParseError);
}

MarketFile random_market(std::mt19937& rng) {
  const std::size_t n = 1 + rng() % 5;
  MarketFile m;
  for (std::size_t i = 0; i < n; ++i) {
    m.workers.push_back("w" + std::to_string(i));
    m.enterprises.push_back("firm \"" + std::to_string(i) + "\"");
  }
  auto grid = [&] {
    Grid g(n, std::vector<Rational>(n));
    for (auto& row : g)
      for (auto& v : row) v = Rational(static_cast<std::int64_t>(rng() % 200) - 50, 1 + rng() % 12);
    return g;
  };
  m.a = grid();
  m.b = grid();
  return m;
}

TEST(FilesProperty, MarketRoundTrip) {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = random_market(rng);
    ASSERT_EQ(parse_market(render_market(m)), m);
  }
}

TEST(FilesProperty, BimatrixRoundTrip) {
  std::mt19937 rng(67);
  for (int trial = 0; trial < 100; ++trial) {
    BimatrixFile f;
    const std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 3;
    for (std::size_t i = 0; i < rows; ++i) f.row_labels.push_back("r" + std::to_string(i));
    for (std::size_t j = 0; j < cols; ++j) f.col_labels.push_back("c" + std::to_string(j));
    f.payoffs.assign(rows, std::vector<PayoffPair>(cols));
    for (auto& row : f.payoffs)
      for (auto& p : row) p = {Rational(static_cast<std::int64_t>(rng() % 20), 1 + rng() % 4), Rational(static_cast<std::int64_t>(rng() % 20))};
    ASSERT_EQ(parse_bimatrix(render_bimatrix(f)), f);
  }
}

TEST(CmdAssign, Model2Fixture) {
  const auto market = parse_market(slurp("model2_market.json"));
  const auto workers = cmd_assign(market, Side::Workers, Objective::Maximize);
  EXPECT_EQ(workers.total, 78);
  EXPECT_EQ(workers.grid, (std::vector<std::vector<int>>{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}));
  EXPECT_TRUE(workers.notes.empty());

  const auto jobs = cmd_assign(market, Side::Enterprises, Objective::Maximize);
  EXPECT_EQ(jobs.total, 50);
  EXPECT_EQ(jobs.matching, (Image{1, 0, 2}));
  ASSERT_EQ(jobs.notes.size(), 1u);
  EXPECT_NE(jobs.notes[0].find("48"), std::string::npos);
  EXPECT_EQ(jobs.row_labels, market.enterprises);
}

TEST(CmdAssign, SingleAndMinimize) {
  const auto one = parse_market(R"({"workers":["w"],"enterprises":["e"],"A":[[3]],"B":[[4]]})");
  EXPECT_EQ(cmd_assign(one, Side::Workers, Objective::Maximize).grid, (std::vector<std::vector<int>>{{1}}));
  const auto market = parse_market(slurp("model2_market.json"));
  const auto min = cmd_assign(market, Side::Workers, Objective::Minimize);
  EXPECT_EQ(min.objective, "minimize");
  EXPECT_EQ(min.total, solve_bruteforce(market.worker_matrix(), Objective::Minimize).total_value);
}

TEST(CmdGame, Model1Fixture) {
  const auto r = cmd_game(parse_market(slurp("model1_market.json")));
  EXPECT_EQ(r.table.size(), 6u);
  EXPECT_EQ(r.ideal, (std::vector<Rational>{94, 86, 54, 94, 85, 38}));
  EXPECT_EQ(r.compromise, (std::vector<Image>{{0, 2, 1}}));
  EXPECT_EQ(r.optimal_regret, 41);
  ASSERT_EQ(r.least_satisfied.size(), 1u);
  EXPECT_EQ(r.least_satisfied[0].player, 2u);
  EXPECT_EQ(r.least_satisfied[0].payoff, 13);
  ASSERT_TRUE(r.equilibria);
  EXPECT_EQ(r.equilibria->size(), 6u);
  EXPECT_EQ(r.notes.size(), 2u);
}

TEST(CmdGame, SingleAndTied) {
  const auto one = cmd_game(parse_market(R"({"workers":["w"],"enterprises":["e"],"A":[[3]],"B":[[4]]})"));
  EXPECT_EQ(one.table.size(), 1u);
  EXPECT_EQ(one.optimal_regret, 0);
  const auto tie = cmd_game(
      parse_market(R"({"workers":["a","b"],"enterprises":["x","y"],"A":[[1,1],[1,1]],"B":[[2,2],[2,2]]})"));
  EXPECT_EQ(tie.compromise, (std::vector<Image>{{0, 1}, {1, 0}}));
}

TEST(CmdGame, LargeMarketSkipsEquilibria) {
  MarketFile m;
  for (int i = 0; i < 6; ++i) {
    m.workers.push_back("w" + std::to_string(i));
    m.enterprises.push_back("e" + std::to_string(i));
  }
  m.a.assign(6, std::vector<Rational>(6, 1));
  m.b = m.a;
  m.a[0][0] = 5;
  const auto r = cmd_game(m);
  EXPECT_EQ(r.table.size(), 720u);
  EXPECT_FALSE(r.equilibria);
  m.workers.resize(9, "w");
  m.enterprises.resize(9, "e");
  m.a.assign(9, std::vector<Rational>(9, 1));
  m.b = m.a;
  EXPECT_THROW(cmd_game(m), SizeTooLarge);
}

TEST(CmdBargain, Examples) {
  const auto fixture = parse_bimatrix(slurp("model3_union_game.json"));
  const auto r = cmd_bargain(fixture);
  EXPECT_EQ(r.disagreement, (PayoffPair{Rational(3, 2), Rational(3, 2)}));
  EXPECT_EQ(r.solution, (PayoffPair{4, 4}));
  ASSERT_TRUE(r.maximin_one);
  EXPECT_EQ(r.maximin_one->strategy, (std::vector<Rational>{Rational(1, 4), Rational(3, 4)}));

  const auto big = parse_bimatrix(R"({"row_labels":["a","b","c"],"col_labels":["x","y","z"],
      "payoffs":[[[1,0],[0,0],[0,0]],[[0,0],[0,1],[0,0]],[[0,0],[0,0],[2,2]]]})");
  EXPECT_THROW(cmd_bargain(big), NotTwoByTwo);
  const auto over = cmd_bargain(big, PayoffPair{0, 0});
  EXPECT_FALSE(over.maximin_one);
  EXPECT_EQ(over.solution, (PayoffPair{2, 2}));

  const auto constant = parse_bimatrix(R"({"row_labels":["a","b"],"col_labels":["x","y"],
      "payoffs":[[[5,1],[5,1]],[[5,1],[5,1]]]})");
  EXPECT_EQ(cmd_bargain(constant).solution, (PayoffPair{5, 1}));
}

TEST(CmdPipeline, Fixtures) {
  const auto r = cmd_pipeline(parse_market(slurp("model2_market.json")), parse_bimatrix(slurp("model3_union_game.json")));
  EXPECT_EQ(r.workers.total, 78);
  EXPECT_EQ(r.enterprises.total, 50);
  EXPECT_EQ(r.mismatch, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(r.bargain.solution, (PayoffPair{4, 4}));
}

TEST(CmdPipeline, AgreeingMarket) {
  // Both sides prefer the diagonal.
  const auto market = parse_market(
      R"({"workers":["a","b"],"enterprises":["x","y"],"A":[[5,1],[1,5]],"B":[[5,1],[1,5]]})");
  const auto r = cmd_pipeline(market, parse_bimatrix(slurp("model3_union_game.json")));
  EXPECT_TRUE(r.mismatch.empty());
  EXPECT_EQ(r.bargain.solution, (PayoffPair{4, 4}));
}

TEST(Reports, MachineRoundTripAndDeterminism) {
  const auto m1 = parse_market(slurp("model1_market.json"));
  const auto m2 = parse_market(slurp("model2_market.json"));
  const auto game = parse_bimatrix(slurp("model3_union_game.json"));
  const std::vector<Report> reports = {cmd_assign(m2, Side::Enterprises, Objective::Maximize), cmd_game(m1),
                                       cmd_bargain(game), cmd_bargain(game, PayoffPair{1, Rational(1, 3)}),
                                       cmd_pipeline(m2, game)};
  for (const auto& r : reports) {
    const std::string text = render_machine(r);
    EXPECT_EQ(parse_report(text), r);
    EXPECT_EQ(render_machine(parse_report(text)), text);
    EXPECT_FALSE(render_text(r).empty());
  }
}

TEST(Reports, RationalsAreExactInMachineMode) {
  const std::string text = render_machine(cmd_bargain(parse_bimatrix(slurp("model3_union_game.json"))));
  EXPECT_NE(text.find("\"3/2\""), std::string::npos);
  EXPECT_NE(text.find("\"25/4\""), std::string::npos);
  EXPECT_EQ(text.find("1.5"), std::string::npos);
  EXPECT_EQ(text.find("0.25"), std::string::npos);
}

TEST(Reports, ParseRejectsUnknownCommand) {
  EXPECT_THROW(parse_report(R"({"command":"nope","report":{}})"), SchemaError);
  EXPECT_THROW(parse_report(R"({"command":"assign","report":{"side":"workers"}})"), SchemaError);
}

}  // namespace
}  // namespace bimarket::io
