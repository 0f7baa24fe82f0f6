// bimarket: assignment, compromise and bargaining workflows for bilateral
// worker/enterprise markets.
//
// Exit codes: 0 success, 1 input error, 2 size-cap error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bimarket/io/commands.hpp"

namespace {

using namespace bimarket;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

io::MarketFile load_market(const std::string& path) {
  try {
    return io::parse_market(read_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

io::BimatrixFile load_bimatrix(const std::string& path) {
  try {
    return io::parse_bimatrix(read_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bilateral assignment market solver"};
  app.require_subcommand(1);

  std::string output = "text";
  std::string out_path;
  app.add_option("--output", output, "Report format")
      ->check(CLI::IsMember({"text", "machine"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "Write the report to FILE instead of stdout");

  std::string market_path;
  std::string game_path;
  std::string side = "workers";
  bool minimize = false;
  std::vector<std::string> disagreement;

  auto* assign = app.add_subcommand("assign", "Optimal assignment for one side of the market");
  assign->add_option("--market", market_path, "Market file")->required();
  assign->add_option("--side", side, "Whose utilities to optimize")
      ->check(CLI::IsMember({"workers", "enterprises"}))
      ->capture_default_str();
  assign->add_flag("--minimize", minimize, "Minimize instead of maximize");

  auto* game = app.add_subcommand("game", "Situation table, ideal point, compromise set and equilibria");
  game->add_option("--market", market_path, "Market file")->required();

  auto* bargain = app.add_subcommand("bargain", "Nash arbitration for a bimatrix union game");
  bargain->add_option("--game", game_path, "Bimatrix file")->required();
  bargain->add_option("--disagreement", disagreement, "Disagreement point V1 V2 (skips maximin)")
      ->expected(2);

  auto* pipeline = app.add_subcommand("pipeline", "Both assignments, their mismatch, then union bargaining");
  pipeline->add_option("--market", market_path, "Market file")->required();
  pipeline->add_option("--union-game", game_path, "Bimatrix file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    io::Report report;
    if (*assign) {
      report = io::cmd_assign(load_market(market_path),
                              side == "workers" ? io::Side::Workers : io::Side::Enterprises,
                              minimize ? Objective::Minimize : Objective::Maximize);
    } else if (*game) {
      report = io::cmd_game(load_market(market_path));
    } else if (*bargain) {
      std::optional<PayoffPair> d;
      if (!disagreement.empty()) {
        try {
          d = PayoffPair{Rational::parse(disagreement[0]), Rational::parse(disagreement[1])};
        } catch (const std::exception& e) {
          throw InputError(std::string("--disagreement: ") + e.what());
        }
      }
      report = io::cmd_bargain(load_bimatrix(game_path), d);
    } else {
      // Both files are validated before any solving starts.
      const auto market = load_market(market_path);
      const auto union_game = load_bimatrix(game_path);
      report = io::cmd_pipeline(market, union_game);
    }

    const std::string rendered = output == "machine" ? io::render_machine(report) : io::render_text(report);
    if (out_path.empty()) {
      std::cout << rendered;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out || !(out << rendered)) throw InputError("cannot write '" + out_path + "'");
    }
    return 0;
  } catch (const SizeTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
