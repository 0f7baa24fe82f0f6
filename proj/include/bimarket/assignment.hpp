// Optimal perfect assignment on square utility matrices.
//
// solve_hungarian runs the O(n^3) shortest-augmenting-path Hungarian method
// on exact rationals, then picks the lexicographically smallest optimal
// matching from the equality subgraph of the final dual. solve_bruteforce is
// the exhaustive oracle with the same tie-break.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bimarket/core.hpp"

namespace bimarket {

enum class Objective { Maximize, Minimize };

struct AssignmentResult {
  Matching matching;
  Rational total_value;
  Objective objective;
};

namespace detail {

struct HungarianDual {
  std::vector<Rational> row;  // u
  std::vector<Rational> col;  // v
  std::vector<std::size_t> row_to_col;
};

// Min-cost assignment; returns duals with cost(i, j) - u[i] - v[j] >= 0 and
// equality on every matched pair.
inline HungarianDual hungarian_min(const std::vector<Rational>& cost, std::size_t n) {
  // 1-based arrays; index 0 is the virtual source column.
  std::vector<Rational> u(n + 1), v(n + 1);
  std::vector<std::size_t> owner(n + 1, 0), way(n + 1, 0);
  auto at = [&](std::size_t i, std::size_t j) -> const Rational& {
    return cost[(i - 1) * n + (j - 1)];
  };

  for (std::size_t i = 1; i <= n; ++i) {
    owner[0] = i;
    std::size_t j0 = 0;
    std::vector<std::optional<Rational>> minv(n + 1);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = owner[j0];
      std::optional<Rational> delta;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const Rational cur = at(i0, j) - u[i0] - v[j];
        if (!minv[j] || cur < *minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (!delta || *minv[j] < *delta) {
          delta = *minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[owner[j]] += *delta;
          v[j] -= *delta;
        } else {
          *minv[j] -= *delta;
        }
      }
      j0 = j1;
    } while (owner[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      owner[j0] = owner[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  HungarianDual dual;
  dual.row.assign(u.begin() + 1, u.end());
  dual.col.assign(v.begin() + 1, v.end());
  dual.row_to_col.assign(n, 0);
  for (std::size_t j = 1; j <= n; ++j) dual.row_to_col[owner[j] - 1] = j - 1;
  return dual;
}

// Every optimal assignment is a perfect matching of the tight edges of an
// optimal dual, and vice versa. Fix rows in order, each to the smallest tight
// column that still leaves a perfect matching on the remaining rows.
inline std::vector<std::size_t> lex_smallest_tight_matching(
    const std::vector<Rational>& cost, std::size_t n, const HungarianDual& dual) {
  std::vector<std::vector<bool>> tight(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      tight[i][j] = cost[i * n + j] - dual.row[i] - dual.col[j] == 0;

  std::vector<std::size_t> row_to_col = dual.row_to_col;
  constexpr std::size_t kFree = static_cast<std::size_t>(-1);
  std::vector<std::size_t> col_to_row(n, kFree);
  for (std::size_t i = 0; i < n; ++i) col_to_row[row_to_col[i]] = i;
  std::vector<bool> fixed(n, false);  // column locked by an earlier row

  std::vector<bool> visited(n);
  // Kuhn augmentation restricted to tight, unlocked, unvisited columns.
  auto augment = [&](auto&& self, std::size_t row) -> bool {
    for (std::size_t k = 0; k < n; ++k) {
      if (!tight[row][k] || fixed[k] || visited[k]) continue;
      visited[k] = true;
      if (col_to_row[k] == kFree || self(self, col_to_row[k])) {
        col_to_row[k] = row;
        row_to_col[row] = k;
        return true;
      }
    }
    return false;
  };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!tight[i][j] || fixed[j]) continue;
      if (row_to_col[i] == j) break;
      // Move i onto j; the displaced row must reach i's old column.
      const std::size_t displaced = col_to_row[j];
      const std::size_t old_col = row_to_col[i];
      col_to_row[old_col] = kFree;
      col_to_row[j] = i;
      row_to_col[i] = j;
      fixed[j] = true;
      std::fill(visited.begin(), visited.end(), false);
      const bool ok = augment(augment, displaced);
      fixed[j] = false;
      if (ok) break;
      col_to_row[j] = displaced;
      row_to_col[displaced] = j;
      col_to_row[old_col] = i;
      row_to_col[i] = old_col;
    }
    fixed[row_to_col[i]] = true;
  }
  return row_to_col;
}

inline std::vector<Rational> minimization_costs(const UtilityMatrix& m, Objective objective) {
  std::vector<Rational> cost(m.entries().begin(), m.entries().end());
  if (objective == Objective::Maximize) {
    const Rational top = m.max_entry();
    for (auto& c : cost) c = top - c;
  }
  return cost;
}

}  // namespace detail

inline AssignmentResult solve_hungarian(const UtilityMatrix& matrix, Objective objective) {
  const std::size_t n = matrix.size();
  const auto cost = detail::minimization_costs(matrix, objective);
  const auto dual = detail::hungarian_min(cost, n);
  Matching best = matching_from_image(detail::lex_smallest_tight_matching(cost, n, dual));
  Rational total = matrix.value_of(best);
  return {std::move(best), total, objective};
}

inline AssignmentResult solve_bruteforce(const UtilityMatrix& matrix, Objective objective) {
  std::optional<AssignmentResult> best;
  for (auto& m : all_matchings(matrix.size())) {
    const Rational value = matrix.value_of(m);
    const bool better = !best || (objective == Objective::Maximize
                                      ? value > best->total_value
                                      : value < best->total_value);
    if (better) best = AssignmentResult{std::move(m), value, objective};
  }
  return *best;
}

/// Workers whose enterprise under `x` differs from the enterprise that picks
/// them under `y_on_jobs` (indexed job -> worker).
inline std::vector<std::size_t> compare_assignments(const Matching& x, const Matching& y_on_jobs) {
  if (x.size() != y_on_jobs.size()) {
    throw DimensionMismatch("assignments have different sizes: " + std::to_string(x.size()) +
                            " vs " + std::to_string(y_on_jobs.size()));
  }
  const Matching y = inverse(y_on_jobs);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != y[i]) out.push_back(i);
  return out;
}

/// 0/1 grid with a one at (i, m[i]).
inline std::vector<std::vector<int>> assignment_grid(const Matching& m) {
  std::vector<std::vector<int>> grid(m.size(), std::vector<int>(m.size(), 0));
  for (std::size_t i = 0; i < m.size(); ++i) grid[i][m[i]] = 1;
  return grid;
}

}  // namespace bimarket
