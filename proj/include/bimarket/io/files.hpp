// Market and bimatrix input files.
//
// Market file:
//   { "workers": [..], "enterprises": [..],
//     "A": [[..]],   worker row x enterprise column
//     "B": [[..]] }  enterprise row x worker column
// Bimatrix file:
//   { "row_labels": [..], "col_labels": [..], "payoffs": [[[k1, k2], ..], ..] }
//
// Numbers are JSON integers, decimals, or "p/q" strings.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bimarket/bargaining.hpp"
#include "bimarket/core.hpp"
#include "bimarket/io/json_exact.hpp"

namespace bimarket::io {

using Grid = std::vector<std::vector<Rational>>;

struct MarketFile {
  std::vector<std::string> workers;
  std::vector<std::string> enterprises;
  Grid a;
  Grid b;

  std::size_t size() const noexcept { return workers.size(); }
  UtilityMatrix worker_matrix() const { return UtilityMatrix(a, workers, enterprises); }
  UtilityMatrix enterprise_matrix() const { return UtilityMatrix(b, enterprises, workers); }
  GameInstance instance() const { return GameInstance(worker_matrix(), enterprise_matrix()); }

  friend bool operator==(const MarketFile&, const MarketFile&) = default;
};

struct BimatrixFile {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<std::vector<PayoffPair>> payoffs;

  BimatrixGame game() const { return BimatrixGame(payoffs); }

  friend bool operator==(const BimatrixFile&, const BimatrixFile&) = default;
};

namespace detail {

inline const json& require(const json& obj, const char* key) {
  if (!obj.is_object()) throw SchemaError("top level must be an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(std::string("missing key '") + key + "'");
  return *it;
}

inline std::vector<std::string> string_list(const json& j, const char* key) {
  if (!j.is_array()) throw SchemaError(std::string("'") + key + "' must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) throw SchemaError(std::string("'") + key + "' must contain only strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

inline Grid square_grid(const json& j, const char* key, std::size_t n) {
  const std::string name(key);
  if (!j.is_array() || j.empty()) throw SchemaError("'" + name + "' must be a non-empty array of rows");
  if (j.size() != n) {
    throw SchemaError("'" + name + "' has " + std::to_string(j.size()) + " rows, expected " + std::to_string(n));
  }
  Grid out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& row = j[i];
    if (!row.is_array() || row.size() != n) {
      throw SchemaError("'" + name + "' row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
    }
    auto& dst = out.emplace_back();
    for (std::size_t c = 0; c < n; ++c)
      dst.push_back(rational_from_json(row[c], name + "[" + std::to_string(i) + "][" + std::to_string(c) + "]"));
  }
  return out;
}

inline json grid_to_json(const Grid& grid) {
  json out = json::array();
  for (const auto& row : grid) {
    json r = json::array();
    for (const auto& v : row) r.push_back(rational_to_json(v));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace detail

inline MarketFile market_from_json(const json& root) {
  MarketFile m;
  m.workers = detail::string_list(detail::require(root, "workers"), "workers");
  m.enterprises = detail::string_list(detail::require(root, "enterprises"), "enterprises");
  const std::size_t n = m.workers.size();
  if (n == 0) throw SchemaError("market must have at least one worker");
  if (m.enterprises.size() != n) {
    throw SchemaError("market has " + std::to_string(n) + " workers but " + std::to_string(m.enterprises.size()) +
                      " enterprises");
  }
  m.a = detail::square_grid(detail::require(root, "A"), "A", n);
  m.b = detail::square_grid(detail::require(root, "B"), "B", n);
  return m;
}

inline MarketFile parse_market(std::string_view text) { return market_from_json(parse_json_exact(text)); }

inline json market_to_json(const MarketFile& m) {
  return json{{"workers", m.workers},
              {"enterprises", m.enterprises},
              {"A", detail::grid_to_json(m.a)},
              {"B", detail::grid_to_json(m.b)}};
}

inline std::string render_market(const MarketFile& m) { return market_to_json(m).dump(2) + "\n"; }

inline BimatrixFile bimatrix_from_json(const json& root) {
  BimatrixFile f;
  f.row_labels = detail::string_list(detail::require(root, "row_labels"), "row_labels");
  f.col_labels = detail::string_list(detail::require(root, "col_labels"), "col_labels");
  const json& grid = detail::require(root, "payoffs");
  if (!grid.is_array() || grid.empty()) throw SchemaError("'payoffs' must be a non-empty array of rows");
  if (grid.size() != f.row_labels.size()) throw SchemaError("'payoffs' row count differs from row_labels");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& row = grid[i];
    if (!row.is_array() || row.size() != f.col_labels.size()) {
      throw SchemaError("'payoffs' row " + std::to_string(i) + " must have " + std::to_string(f.col_labels.size()) +
                        " cells");
    }
    auto& dst = f.payoffs.emplace_back();
    for (std::size_t c = 0; c < row.size(); ++c) {
      const std::string where = "payoffs[" + std::to_string(i) + "][" + std::to_string(c) + "]";
      if (!row[c].is_array() || row[c].size() != 2) throw SchemaError(where + " must be a [k1, k2] pair");
      dst.push_back({rational_from_json(row[c][0], where), rational_from_json(row[c][1], where)});
    }
  }
  if (f.col_labels.empty()) throw SchemaError("bimatrix game needs at least one column");
  return f;
}

inline BimatrixFile parse_bimatrix(std::string_view text) { return bimatrix_from_json(parse_json_exact(text)); }

inline json bimatrix_to_json(const BimatrixFile& f) {
  json grid = json::array();
  for (const auto& row : f.payoffs) {
    json r = json::array();
    for (const auto& p : row) r.push_back(json::array({rational_to_json(p.v1), rational_to_json(p.v2)}));
    grid.push_back(std::move(r));
  }
  return json{{"row_labels", f.row_labels}, {"col_labels", f.col_labels}, {"payoffs", std::move(grid)}};
}

inline std::string render_bimatrix(const BimatrixFile& f) { return bimatrix_to_json(f).dump(2) + "\n"; }

}  // namespace bimarket::io
