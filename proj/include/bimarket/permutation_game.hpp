// The 2n-player matching game: workers are players 0..n-1, the enterprise
// side is players n..2n-1. Situations are the n! perfect matchings.
//
// Enterprise-side column n+k of the situation table is keyed by worker k and
// reports B[p(k)][k], the utility of whichever enterprise holds worker k.
#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bimarket/core.hpp"

namespace bimarket {

using PayoffProfile = std::vector<Rational>;

struct Situation {
  Matching matching;
  PayoffProfile payoffs;  // length 2n
};

struct SituationTable {
  std::size_t n = 0;
  std::vector<Situation> rows;  // lexicographic by matching image

  const Situation* find(const Matching& m) const {
    auto it = std::lower_bound(rows.begin(), rows.end(), m,
                               [](const Situation& s, const Matching& key) { return s.matching < key; });
    return it != rows.end() && it->matching == m ? &*it : nullptr;
  }
};

struct CompromiseResult {
  Rational optimal_regret;
  std::vector<Matching> members;
  std::vector<PayoffProfile> regrets;   // per row, per player
  std::vector<Rational> max_regrets;    // per row
};

struct LeastSatisfied {
  std::size_t player;
  Rational payoff;
  Rational regret;
};

inline PayoffProfile situation_payoffs(const GameInstance& instance, const Matching& p) {
  const std::size_t n = instance.size();
  const auto& a = instance.worker_utilities();
  const auto& b = instance.enterprise_utilities();
  PayoffProfile out(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = a(k, p[k]);
    out[n + k] = b(p[k], k);
  }
  return out;
}

inline SituationTable build_table(const GameInstance& instance) {
  SituationTable table;
  table.n = instance.size();
  for (auto& m : all_matchings(instance.size())) {
    PayoffProfile payoffs = situation_payoffs(instance, m);
    table.rows.push_back({std::move(m), std::move(payoffs)});
  }
  return table;
}

/// Coordinatewise maximum over all situations.
inline PayoffProfile ideal_point(const SituationTable& table) {
  if (table.rows.empty()) throw InputError("situation table is empty");
  PayoffProfile ideal = table.rows.front().payoffs;
  for (const auto& row : table.rows)
    for (std::size_t i = 0; i < ideal.size(); ++i) ideal[i] = std::max(ideal[i], row.payoffs[i]);
  return ideal;
}

inline CompromiseResult compromise_set(const SituationTable& table) {
  const PayoffProfile ideal = ideal_point(table);
  CompromiseResult result;
  for (const auto& row : table.rows) {
    PayoffProfile regret(ideal.size());
    for (std::size_t i = 0; i < ideal.size(); ++i) regret[i] = ideal[i] - row.payoffs[i];
    result.max_regrets.push_back(*std::max_element(regret.begin(), regret.end()));
    result.regrets.push_back(std::move(regret));
  }
  result.optimal_regret = *std::min_element(result.max_regrets.begin(), result.max_regrets.end());
  for (std::size_t r = 0; r < table.rows.size(); ++r)
    if (result.max_regrets[r] == result.optimal_regret) result.members.push_back(table.rows[r].matching);
  return result;
}

/// The player with the largest regret at `m` (lowest index on ties) and
/// the payoff that player actually receives there.
inline LeastSatisfied least_satisfied(const SituationTable& table, const Matching& m) {
  const Situation* row = table.find(m);
  if (row == nullptr) throw MatchingNotInTable("matching is not a situation of this table");
  const PayoffProfile ideal = ideal_point(table);
  std::optional<LeastSatisfied> worst;
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    const Rational regret = ideal[i] - row->payoffs[i];
    if (!worst || regret > worst->regret) worst = LeastSatisfied{i, row->payoffs[i], regret};
  }
  return *worst;
}

/// Each worker names an enterprise, each enterprise names a worker.
struct StrategyProfile {
  std::vector<std::size_t> worker_choice;
  std::vector<std::size_t> enterprise_choice;

  friend bool operator==(const StrategyProfile&, const StrategyProfile&) = default;
};

inline StrategyProfile profile_from_matching(const Matching& m) {
  const Matching inv = inverse(m);
  return {{m.image().begin(), m.image().end()}, {inv.image().begin(), inv.image().end()}};
}

/// True iff worker choices form a bijection that the enterprises confirm.
inline bool is_consistent(const StrategyProfile& s) {
  const std::size_t n = s.worker_choice.size();
  std::vector<bool> taken(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = s.worker_choice[i];
    if (taken[j] || s.enterprise_choice[j] != i) return false;
    taken[j] = true;
  }
  return true;
}

struct Equilibrium {};

/// Player index uses the strategy-owner numbering: worker i is player i,
/// enterprise j is player n + j.
struct Deviation {
  std::size_t player;
  std::size_t better_strategy;
  Rational gain;
};

using NashVerdict = std::variant<Equilibrium, Deviation>;

namespace detail {

inline void check_profile(const GameInstance& instance, const StrategyProfile& s) {
  const std::size_t n = instance.size();
  if (s.worker_choice.size() != n || s.enterprise_choice.size() != n) {
    throw MalformedProfile("strategy profile must name one choice per player");
  }
  for (std::size_t c : s.worker_choice)
    if (c >= n) throw MalformedProfile("worker choice out of range");
  for (std::size_t c : s.enterprise_choice)
    if (c >= n) throw MalformedProfile("enterprise choice out of range");
}

// Inconsistent profiles pay zero to everyone.
inline Rational player_payoff(const GameInstance& instance, const StrategyProfile& s,
                              std::size_t player) {
  if (!is_consistent(s)) return 0;
  const std::size_t n = instance.size();
  if (player < n) return instance.worker_utilities()(player, s.worker_choice[player]);
  const std::size_t j = player - n;
  return instance.enterprise_utilities()(j, s.enterprise_choice[j]);
}

}  // namespace detail

/// Scans every unilateral deviation; reports the first strictly profitable
/// one in (player, strategy) order.
inline NashVerdict verify_nash(const GameInstance& instance, const StrategyProfile& profile) {
  detail::check_profile(instance, profile);
  const std::size_t n = instance.size();
  for (std::size_t player = 0; player < 2 * n; ++player) {
    const Rational current = detail::player_payoff(instance, profile, player);
    StrategyProfile trial = profile;
    std::size_t& slot = player < n ? trial.worker_choice[player] : trial.enterprise_choice[player - n];
    const std::size_t original = slot;
    for (std::size_t alt = 0; alt < n; ++alt) {
      if (alt == original) continue;
      slot = alt;
      const Rational payoff = detail::player_payoff(instance, trial, player);
      if (payoff > current) return Deviation{player, alt, payoff - current};
    }
  }
  return Equilibrium{};
}

/// Largest n accepted by enumerate_equilibria.
inline constexpr std::size_t kEquilibriumCap = 5;

/// Consistent profiles (one per matching, lexicographic) that are equilibria.
inline std::vector<StrategyProfile> enumerate_equilibria(const GameInstance& instance) {
  if (instance.size() > kEquilibriumCap) {
    throw SizeTooLarge("equilibrium enumeration is capped at n = " + std::to_string(kEquilibriumCap));
  }
  std::vector<StrategyProfile> out;
  for (const auto& m : all_matchings(instance.size())) {
    StrategyProfile s = profile_from_matching(m);
    if (std::holds_alternative<Equilibrium>(verify_nash(instance, s))) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace bimarket
