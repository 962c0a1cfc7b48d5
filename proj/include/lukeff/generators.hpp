#pragma once

// Exhaustive and seeded random sources of game forms, effectivity tables,
// models and formulas.

#include <random>
#include <vector>

#include "lukeff/effectivity.hpp"
#include "lukeff/game_form.hpp"
#include "lukeff/semantics.hpp"

namespace lukeff {

using Rng = std::mt19937_64;

/// Every game form with the given players and outcome count and strategy
/// counts in 1..max_strategies. With `dedupe`, only the first form of each
/// Boolean effectivity table is kept.
std::vector<GameForm> enumerate_game_forms(int players, int max_strategies, int outcomes, bool dedupe = true);

/// Every playable Boolean effectivity function over `outcomes` <= 4 outcomes.
std::vector<BoolEffFn> enumerate_playable_boolean(int players, int outcomes);

/// Every playable L_n table, obtained as lifts of the Boolean ones.
std::vector<EffFn> enumerate_playable(Chain chain, int players, int outcomes);

GameForm random_game_form(Rng& rng, int players, int max_strategies, const std::vector<std::string>& outcomes);

/// Uniform random cells; almost never playable.
EffFn random_table(Rng& rng, Chain chain, int players, int outcomes);

/// Copy of `e` with one cell changed to a different value.
EffFn mutate_cell(Rng& rng, const EffFn& e);

/// The table of a random game form, hence truly playable.
EffFn random_playable(Rng& rng, Chain chain, int players, const std::vector<std::string>& outcomes);

struct RandomModelOptions {
  int states = 2;
  std::vector<int> props{1};
  /// Adds the standard relation.
  bool enriched = false;
};

/// Playable model whose E(u) come from random game forms over the states.
Model random_model(Rng& rng, Chain chain, int players, const RandomModelOptions& options);

/// Random formula of depth <= `depth` over the given propositions.
Formula random_formula(Rng& rng, int depth, const std::vector<int>& props, int players, Chain chain,
                       Dialect dialect = Dialect::L);

}  // namespace lukeff
