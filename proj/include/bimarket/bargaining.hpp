// Two-player bargaining over a bimatrix game: maximin threat point, feasible
// region under joint randomization, Pareto frontier and the Nash solution.
//
// All geometry is exact; no tolerances.
#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bimarket/errors.hpp"
#include "bimarket/rational.hpp"

namespace bimarket {

struct PayoffPair {
  Rational v1;
  Rational v2;

  friend bool operator==(const PayoffPair&, const PayoffPair&) = default;
  friend auto operator<=>(const PayoffPair&, const PayoffPair&) = default;
};

class BimatrixGame {
 public:
  using Grid = std::vector<std::vector<PayoffPair>>;

  explicit BimatrixGame(const Grid& grid) : rows_(grid.size()) {
    if (rows_ == 0 || grid.front().empty()) throw DimensionMismatch("bimatrix game must be non-empty");
    cols_ = grid.front().size();
    for (const auto& row : grid) {
      if (row.size() != cols_) throw DimensionMismatch("bimatrix game rows differ in length");
      cells_.insert(cells_.end(), row.begin(), row.end());
    }
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const PayoffPair& operator()(std::size_t row, std::size_t col) const { return cells_[row * cols_ + col]; }
  const std::vector<PayoffPair>& outcomes() const noexcept { return cells_; }

  Grid grid() const {
    Grid out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i].push_back((*this)(i, j));
    return out;
  }

  /// Same game with the players' roles exchanged (transpose, swap pairs).
  BimatrixGame swapped() const {
    Grid out(cols_);
    for (std::size_t j = 0; j < cols_; ++j)
      for (std::size_t i = 0; i < rows_; ++i) out[j].push_back({(*this)(i, j).v2, (*this)(i, j).v1});
    return BimatrixGame(out);
  }

  friend bool operator==(const BimatrixGame&, const BimatrixGame&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_ = 0;
  std::vector<PayoffPair> cells_;
};

class MixedStrategy {
 public:
  explicit MixedStrategy(std::vector<Rational> weights) : weights_(std::move(weights)) {
    Rational sum = 0;
    for (const auto& w : weights_) {
      if (w < 0) throw InputError("mixed strategy weight is negative");
      sum += w;
    }
    if (weights_.empty() || sum != 1) throw InputError("mixed strategy weights must sum to 1");
  }

  const std::vector<Rational>& weights() const noexcept { return weights_; }
  const Rational& operator[](std::size_t i) const { return weights_[i]; }

  friend bool operator==(const MixedStrategy&, const MixedStrategy&) = default;

 private:
  std::vector<Rational> weights_;
};

enum class Player { One, Two };

struct MaximinResult {
  MixedStrategy strategy;
  Rational value;
};

struct DisagreementPoint {
  Rational v1;
  Rational v2;
  std::optional<MixedStrategy> x0;  // absent when supplied by the caller
  std::optional<MixedStrategy> y0;

  PayoffPair point() const { return {v1, v2}; }
};

struct Segment {
  PayoffPair from;
  PayoffPair to;

  friend bool operator==(const Segment&, const Segment&) = default;
};

struct BargainingOutcome {
  std::vector<PayoffPair> feasible_hull;
  std::vector<Segment> pareto_frontier;
  DisagreementPoint disagreement;
  PayoffPair solution;
  Rational nash_product;
};

/// Closed-form maximin for a 2x2 game: pure strategy when the player's own
/// payoff matrix has a saddle point, otherwise the indifference mix.
inline MaximinResult maximin_2x2(const BimatrixGame& game, Player player) {
  if (game.rows() != 2 || game.cols() != 2) {
    throw NotTwoByTwo("maximin is only available for 2x2 games, got " + std::to_string(game.rows()) + "x" +
                      std::to_string(game.cols()));
  }
  // k[own][other]: the player's payoff when choosing `own` against `other`.
  Rational k[2][2];
  for (std::size_t own = 0; own < 2; ++own)
    for (std::size_t other = 0; other < 2; ++other)
      k[own][other] = player == Player::One ? game(own, other).v1 : game(other, own).v2;

  const Rational row_min[2] = {std::min(k[0][0], k[0][1]), std::min(k[1][0], k[1][1])};
  const Rational col_max[2] = {std::max(k[0][0], k[1][0]), std::max(k[0][1], k[1][1])};
  const Rational lower = std::max(row_min[0], row_min[1]);
  const Rational upper = std::min(col_max[0], col_max[1]);
  if (lower == upper) {
    const bool first = row_min[0] == lower;
    return {MixedStrategy({first ? Rational{1} : Rational{0}, first ? Rational{0} : Rational{1}}), lower};
  }
  // Without a saddle point the denominator cannot vanish.
  const Rational xi = (k[1][1] - k[1][0]) / (k[0][0] - k[0][1] - k[1][0] + k[1][1]);
  const Rational value = xi * k[0][0] + (1 - xi) * k[1][0];
  return {MixedStrategy({xi, 1 - xi}), value};
}

namespace detail {

inline Rational cross(const PayoffPair& o, const PayoffPair& a, const PayoffPair& b) {
  return (a.v1 - o.v1) * (b.v2 - o.v2) - (a.v2 - o.v2) * (b.v1 - o.v1);
}

}  // namespace detail

/// Monotone chain. Counterclockwise from the lexicographically smallest
/// point, collinear points dropped.
inline std::vector<PayoffPair> convex_hull(std::vector<PayoffPair> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 3) return points;

  std::vector<PayoffPair> hull(2 * points.size());
  std::size_t k = 0;
  for (const auto& p : points) {
    while (k >= 2 && detail::cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && detail::cross(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  return hull;
}

inline std::vector<PayoffPair> feasible_hull(const BimatrixGame& game) { return convex_hull(game.outcomes()); }

/// True iff `p` lies in the (possibly degenerate) hull.
inline bool hull_contains(const std::vector<PayoffPair>& hull, const PayoffPair& p) {
  if (hull.empty()) return false;
  if (hull.size() == 1) return hull.front() == p;
  if (hull.size() == 2) {
    const auto& a = hull[0];
    const auto& b = hull[1];
    return detail::cross(a, b, p) == 0 && std::min(a.v1, b.v1) <= p.v1 && p.v1 <= std::max(a.v1, b.v1) &&
           std::min(a.v2, b.v2) <= p.v2 && p.v2 <= std::max(a.v2, b.v2);
  }
  for (std::size_t i = 0; i < hull.size(); ++i)
    if (detail::cross(hull[i], hull[(i + 1) % hull.size()], p) < 0) return false;
  return true;
}

/// Strongly Pareto-optimal part of the hull boundary, ordered from the
/// highest-v2 end to the highest-v1 end. A single optimal point comes back
/// as one degenerate segment.
inline std::vector<Segment> pareto_frontier(const std::vector<PayoffPair>& hull) {
  if (hull.empty()) return {};
  std::size_t top = 0;    // max v2, then max v1
  std::size_t right = 0;  // max v1, then max v2
  for (std::size_t i = 1; i < hull.size(); ++i) {
    const auto& p = hull[i];
    if (std::pair(p.v2, p.v1) > std::pair(hull[top].v2, hull[top].v1)) top = i;
    if (std::pair(p.v1, p.v2) > std::pair(hull[right].v1, hull[right].v2)) right = i;
  }
  if (top == right) return {Segment{hull[top], hull[top]}};

  // Counterclockwise from `right` reaches `top` along the upper-right chain.
  std::vector<PayoffPair> chain{hull[right]};
  for (std::size_t i = right; i != top;) {
    i = (i + 1) % hull.size();
    chain.push_back(hull[i]);
  }
  std::reverse(chain.begin(), chain.end());
  std::vector<Segment> out;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) out.push_back({chain[i], chain[i + 1]});
  return out;
}

inline Rational nash_product(const PayoffPair& v, const PayoffPair& d) { return (v.v1 - d.v1) * (v.v2 - d.v2); }

namespace detail {

struct Candidate {
  PayoffPair point;
  Rational product;
};

// Best point of from + t (to - from), t in [0, 1], subject to v >= d.
inline std::optional<Candidate> best_on_segment(const Segment& s, const PayoffPair& d) {
  const Rational dx = s.to.v1 - s.from.v1;
  const Rational dy = s.to.v2 - s.from.v2;
  const Rational ax = s.from.v1 - d.v1;
  const Rational ay = s.from.v2 - d.v2;

  Rational lo = 0;
  Rational hi = 1;
  // ax + t dx >= 0 and ay + t dy >= 0
  for (const auto& [a, delta] : {std::pair{ax, dx}, std::pair{ay, dy}}) {
    if (delta == 0) {
      if (a < 0) return std::nullopt;
    } else if (delta > 0) {
      lo = std::max(lo, -a / delta);
    } else {
      hi = std::min(hi, -a / delta);
    }
  }
  if (lo > hi) return std::nullopt;

  auto at = [&](const Rational& t) { return PayoffPair{s.from.v1 + t * dx, s.from.v2 + t * dy}; };
  std::vector<Rational> ts{lo, hi};
  // product(t) = (ax + t dx)(ay + t dy); concave when dx dy < 0.
  if (dx * dy < 0) {
    const Rational vertex = -(ax * dy + ay * dx) / (2 * dx * dy);
    if (lo < vertex && vertex < hi) ts.push_back(vertex);
  }
  std::optional<Candidate> best;
  for (const auto& t : ts) {
    const PayoffPair p = at(t);
    const Rational prod = nash_product(p, d);
    if (!best || prod > best->product) best = Candidate{p, prod};
  }
  return best;
}

}  // namespace detail

/// Maximizes (v1 - d1)(v2 - d2) over the Pareto frontier restricted to v >= d.
inline BargainingOutcome nash_solution(const BimatrixGame& game, DisagreementPoint disagreement) {
  BargainingOutcome out;
  out.feasible_hull = feasible_hull(game);
  const PayoffPair d = disagreement.point();
  if (!hull_contains(out.feasible_hull, d)) {
    throw DisagreementOutsideHull("disagreement point (" + d.v1.to_string() + ", " + d.v2.to_string() +
                                  ") lies outside the feasible region");
  }
  out.pareto_frontier = pareto_frontier(out.feasible_hull);

  std::optional<detail::Candidate> best;
  for (const auto& s : out.pareto_frontier) {
    const auto c = detail::best_on_segment(s, d);
    if (c && (!best || c->product > best->product)) best = c;
  }
  if (!best) throw EmptyIndividuallyRationalRegion("no Pareto-optimal point dominates the disagreement point");
  out.solution = best->point;
  out.nash_product = best->product;
  out.disagreement = std::move(disagreement);
  return out;
}

/// Maximin threat point for both players, then the Nash solution.
inline BargainingOutcome bargain(const BimatrixGame& game) {
  const MaximinResult one = maximin_2x2(game, Player::One);
  const MaximinResult two = maximin_2x2(game, Player::Two);
  return nash_solution(game, DisagreementPoint{one.value, two.value, one.strategy, two.strategy});
}

}  // namespace bimarket
