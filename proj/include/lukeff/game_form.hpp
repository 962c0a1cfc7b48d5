#pragma once

// Finite strategic game forms and the effectivity functions they induce.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "lukeff/eff_fn.hpp"

namespace lukeff {

class GameForm {
 public:
  /// `outcome_map` lists outcome indices over all strategy profiles in
  /// row-major order, player 1 varying slowest.
  GameForm(int players, std::vector<int> strategies, std::vector<std::string> outcomes,
           std::vector<int> outcome_map);

  int players() const noexcept { return players_; }
  const std::vector<int>& strategies() const noexcept { return strategies_; }
  const std::vector<std::string>& outcomes() const noexcept { return outcomes_; }
  int outcome_count() const noexcept { return static_cast<int>(outcomes_.size()); }
  const std::vector<int>& outcome_map() const noexcept { return map_; }
  std::size_t profile_count() const noexcept { return map_.size(); }

  std::vector<int> profile(std::size_t index) const;
  std::size_t profile_index(std::span<const int> profile) const;
  int outcome(std::size_t profile_index) const { return map_[profile_index]; }

  /// Outcomes reachable by o, as a bitmask.
  std::uint32_t range() const;

  /// For each joint strategy of C, the set of outcomes the complement can
  /// still reach. C = {} yields the single set range().
  std::vector<std::uint32_t> forcing_sets(std::uint32_t coalition) const;

  friend bool operator==(const GameForm&, const GameForm&) = default;

 private:
  int players_;
  std::vector<int> strategies_;
  std::vector<std::string> outcomes_;
  std::vector<int> map_;
  std::vector<std::size_t> stride_;
};

/// Some joint strategy of C forces the outcome into X.
bool boolean_effectivity(const GameForm& g, const Coalition& c, std::uint32_t x);

/// max over joint strategies of C of the min over replies of f(o(.)).
TruthValue mv_effectivity(const GameForm& g, Chain chain, const Coalition& c, std::span<const int> f);

/// The full L_n-valued table; throws BudgetExceeded when 2^k (n+1)^|S|
/// exceeds `budget_cells`.
EffFn effectivity_table(const GameForm& g, Chain chain, std::uint64_t budget_cells = kDefaultBudgetCells);

/// The n = 1 table.
BoolEffFn boolean_effectivity_table(const GameForm& g, std::uint64_t budget_cells = kDefaultBudgetCells);

/// A ranking of the base outcomes, most preferred first.
using Preference = std::vector<int>;
/// Maps one preference per player to a subset (bitmask) of the base outcomes.
using ChoiceRule = std::function<std::uint32_t(std::span<const Preference>)>;

/// Each player's strategies are the supplied preferences; outcomes are all
/// subsets of the base set, named like "{a,b}"; o applies the rule.
GameForm from_social_choice(const std::vector<std::string>& base_outcomes, int players,
                            const std::vector<Preference>& profiles, const ChoiceRule& rule);

std::string subset_name(std::uint32_t mask, const std::vector<std::string>& base);

}  // namespace lukeff
