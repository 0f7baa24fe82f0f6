// Command reports and their machine-readable (JSON) form.
//
// Matchings are written as 0-based image arrays; rationals as JSON integers
// or exact "p/q" strings. Field names are part of the file interface.
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bimarket/bargaining.hpp"
#include "bimarket/io/json_exact.hpp"

namespace bimarket::io {

using Image = std::vector<std::size_t>;

struct AssignReport {
  std::string side;       // "workers" | "enterprises"
  std::string objective;  // "maximize" | "minimize"
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  Image matching;
  Rational total;
  std::vector<std::vector<int>> grid;
  std::vector<std::string> notes;

  friend bool operator==(const AssignReport&, const AssignReport&) = default;
};

struct SituationRow {
  Image matching;
  std::vector<Rational> payoffs;
  std::vector<Rational> regrets;
  Rational max_regret;

  friend bool operator==(const SituationRow&, const SituationRow&) = default;
};

struct GuaranteedPrize {
  Image matching;
  std::size_t player = 0;
  Rational payoff;

  friend bool operator==(const GuaranteedPrize&, const GuaranteedPrize&) = default;
};

struct GameReport {
  std::vector<std::string> players;  // workers, then the employer of each worker
  std::vector<std::string> enterprises;
  std::vector<SituationRow> table;
  std::vector<Rational> ideal;
  Rational optimal_regret;
  std::vector<Image> compromise;
  std::vector<GuaranteedPrize> least_satisfied;
  // Absent when the market is above the equilibrium enumeration cap.
  std::optional<std::vector<Image>> equilibria;
  std::vector<std::string> notes;

  friend bool operator==(const GameReport&, const GameReport&) = default;
};

struct MaximinEntry {
  std::vector<Rational> strategy;
  Rational value;

  friend bool operator==(const MaximinEntry&, const MaximinEntry&) = default;
};

struct BargainReport {
  std::optional<MaximinEntry> maximin_one;
  std::optional<MaximinEntry> maximin_two;
  PayoffPair disagreement;
  std::vector<PayoffPair> hull;
  std::vector<Segment> frontier;
  PayoffPair solution;
  Rational nash_product;
  std::vector<std::string> notes;

  friend bool operator==(const BargainReport&, const BargainReport&) = default;
};

struct PipelineReport {
  AssignReport workers;
  AssignReport enterprises;
  std::vector<std::size_t> mismatch;
  BargainReport bargain;
  std::vector<std::string> notes;

  friend bool operator==(const PipelineReport&, const PipelineReport&) = default;
};

using Report = std::variant<AssignReport, GameReport, BargainReport, PipelineReport>;

namespace detail {

inline json rationals_to_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(rational_to_json(r));
  return out;
}

inline std::vector<Rational> rationals_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + " must be an array");
  std::vector<Rational> out;
  for (const auto& item : j) out.push_back(rational_from_json(item, where));
  return out;
}

inline json pair_to_json(const PayoffPair& p) {
  return json::array({rational_to_json(p.v1), rational_to_json(p.v2)});
}

inline PayoffPair pair_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw SchemaError(where + " must be a pair");
  return {rational_from_json(j[0], where), rational_from_json(j[1], where)};
}

template <class T>
T field(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw SchemaError(std::string("report field '") + key + "': " + e.what());
  }
}

inline const json& at(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("report is missing '") + key + "'");
  return j.at(key);
}

inline json maximin_to_json(const std::optional<MaximinEntry>& m) {
  if (!m) return nullptr;
  return json{{"strategy", rationals_to_json(m->strategy)}, {"value", rational_to_json(m->value)}};
}

inline std::optional<MaximinEntry> maximin_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return MaximinEntry{rationals_from_json(at(j, "strategy"), "strategy"), rational_from_json(at(j, "value"), "value")};
}

}  // namespace detail

inline json to_json(const AssignReport& r) {
  return json{{"side", r.side},
              {"objective", r.objective},
              {"row_labels", r.row_labels},
              {"col_labels", r.col_labels},
              {"matching", r.matching},
              {"total", rational_to_json(r.total)},
              {"grid", r.grid},
              {"notes", r.notes}};
}

inline AssignReport assign_report_from_json(const json& j) {
  AssignReport r;
  r.side = detail::field<std::string>(j, "side");
  r.objective = detail::field<std::string>(j, "objective");
  r.row_labels = detail::field<std::vector<std::string>>(j, "row_labels");
  r.col_labels = detail::field<std::vector<std::string>>(j, "col_labels");
  r.matching = detail::field<Image>(j, "matching");
  r.total = rational_from_json(detail::at(j, "total"), "total");
  r.grid = detail::field<std::vector<std::vector<int>>>(j, "grid");
  r.notes = detail::field<std::vector<std::string>>(j, "notes");
  return r;
}

inline json to_json(const GameReport& r) {
  json table = json::array();
  for (const auto& row : r.table) {
    table.push_back(json{{"matching", row.matching},
                         {"payoffs", detail::rationals_to_json(row.payoffs)},
                         {"regrets", detail::rationals_to_json(row.regrets)},
                         {"max_regret", rational_to_json(row.max_regret)}});
  }
  json prizes = json::array();
  for (const auto& p : r.least_satisfied) {
    prizes.push_back(json{{"matching", p.matching}, {"player", p.player}, {"payoff", rational_to_json(p.payoff)}});
  }
  return json{{"players", r.players},
              {"enterprises", r.enterprises},
              {"table", std::move(table)},
              {"ideal", detail::rationals_to_json(r.ideal)},
              {"optimal_regret", rational_to_json(r.optimal_regret)},
              {"compromise", r.compromise},
              {"least_satisfied", std::move(prizes)},
              {"equilibria", r.equilibria ? json(*r.equilibria) : json(nullptr)},
              {"notes", r.notes}};
}

inline GameReport game_report_from_json(const json& j) {
  GameReport r;
  r.players = detail::field<std::vector<std::string>>(j, "players");
  r.enterprises = detail::field<std::vector<std::string>>(j, "enterprises");
  for (const auto& row : detail::at(j, "table")) {
    r.table.push_back({detail::field<Image>(row, "matching"),
                       detail::rationals_from_json(detail::at(row, "payoffs"), "payoffs"),
                       detail::rationals_from_json(detail::at(row, "regrets"), "regrets"),
                       rational_from_json(detail::at(row, "max_regret"), "max_regret")});
  }
  r.ideal = detail::rationals_from_json(detail::at(j, "ideal"), "ideal");
  r.optimal_regret = rational_from_json(detail::at(j, "optimal_regret"), "optimal_regret");
  r.compromise = detail::field<std::vector<Image>>(j, "compromise");
  for (const auto& p : detail::at(j, "least_satisfied")) {
    r.least_satisfied.push_back({detail::field<Image>(p, "matching"), detail::field<std::size_t>(p, "player"),
                                 rational_from_json(detail::at(p, "payoff"), "payoff")});
  }
  if (const json& eq = detail::at(j, "equilibria"); !eq.is_null()) r.equilibria = eq.get<std::vector<Image>>();
  r.notes = detail::field<std::vector<std::string>>(j, "notes");
  return r;
}

inline json to_json(const BargainReport& r) {
  json hull = json::array();
  for (const auto& p : r.hull) hull.push_back(detail::pair_to_json(p));
  json frontier = json::array();
  for (const auto& s : r.frontier)
    frontier.push_back(json::array({detail::pair_to_json(s.from), detail::pair_to_json(s.to)}));
  return json{{"maximin_one", detail::maximin_to_json(r.maximin_one)},
              {"maximin_two", detail::maximin_to_json(r.maximin_two)},
              {"disagreement", detail::pair_to_json(r.disagreement)},
              {"hull", std::move(hull)},
              {"frontier", std::move(frontier)},
              {"solution", detail::pair_to_json(r.solution)},
              {"nash_product", rational_to_json(r.nash_product)},
              {"notes", r.notes}};
}

inline BargainReport bargain_report_from_json(const json& j) {
  BargainReport r;
  r.maximin_one = detail::maximin_from_json(detail::at(j, "maximin_one"));
  r.maximin_two = detail::maximin_from_json(detail::at(j, "maximin_two"));
  r.disagreement = detail::pair_from_json(detail::at(j, "disagreement"), "disagreement");
  for (const auto& p : detail::at(j, "hull")) r.hull.push_back(detail::pair_from_json(p, "hull"));
  for (const auto& s : detail::at(j, "frontier")) {
    if (!s.is_array() || s.size() != 2) throw SchemaError("frontier segment must have two endpoints");
    r.frontier.push_back({detail::pair_from_json(s[0], "frontier"), detail::pair_from_json(s[1], "frontier")});
  }
  r.solution = detail::pair_from_json(detail::at(j, "solution"), "solution");
  r.nash_product = rational_from_json(detail::at(j, "nash_product"), "nash_product");
  r.notes = detail::field<std::vector<std::string>>(j, "notes");
  return r;
}

inline json to_json(const PipelineReport& r) {
  return json{{"workers", to_json(r.workers)},
              {"enterprises", to_json(r.enterprises)},
              {"mismatch", r.mismatch},
              {"bargain", to_json(r.bargain)},
              {"notes", r.notes}};
}

inline PipelineReport pipeline_report_from_json(const json& j) {
  PipelineReport r;
  r.workers = assign_report_from_json(detail::at(j, "workers"));
  r.enterprises = assign_report_from_json(detail::at(j, "enterprises"));
  r.mismatch = detail::field<std::vector<std::size_t>>(j, "mismatch");
  r.bargain = bargain_report_from_json(detail::at(j, "bargain"));
  r.notes = detail::field<std::vector<std::string>>(j, "notes");
  return r;
}

inline const char* command_name(const Report& r) {
  static constexpr const char* names[] = {"assign", "game", "bargain", "pipeline"};
  return names[r.index()];
}

/// {"command": <name>, "report": {...}}, keys sorted, two-space indent.
inline std::string render_machine(const Report& r) {
  json payload = std::visit([](const auto& x) { return to_json(x); }, r);
  return json{{"command", command_name(r)}, {"report", std::move(payload)}}.dump(2) + "\n";
}

inline Report parse_report(std::string_view text) {
  const json root = parse_json_exact(text);
  const auto command = detail::field<std::string>(root, "command");
  const json& payload = detail::at(root, "report");
  if (command == "assign") return assign_report_from_json(payload);
  if (command == "game") return game_report_from_json(payload);
  if (command == "bargain") return bargain_report_from_json(payload);
  if (command == "pipeline") return pipeline_report_from_json(payload);
  throw SchemaError("unknown report command '" + command + "'");
}

}  // namespace bimarket::io
