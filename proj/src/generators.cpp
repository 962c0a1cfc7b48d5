#include "lukeff/generators.hpp"

#include <set>
#include <stdexcept>

namespace lukeff {

std::vector<GameForm> enumerate_game_forms(int players, int max_strategies, int outcomes, bool dedupe) {
  const auto names = default_outcome_names(outcomes);
  std::vector<GameForm> out;
  std::set<std::vector<std::uint8_t>> seen;
  std::vector<int> strategies(players, 1);
  for (;;) {
    std::size_t profiles = 1;
    for (int x : strategies) profiles *= static_cast<std::size_t>(x);
    std::vector<int> map(profiles, 0);
    for (;;) {
      GameForm g(players, strategies, names, map);
      if (!dedupe || seen.insert(boolean_effectivity_table(g).table().table()).second) out.push_back(std::move(g));
      std::size_t k = profiles;
      while (k > 0 && map[k - 1] == outcomes - 1) map[--k] = 0;
      if (k == 0) break;
      ++map[k - 1];
    }
    int i = players - 1;
    while (i >= 0 && strategies[i] == max_strategies) strategies[i--] = 1;
    if (i < 0) break;
    ++strategies[i];
  }
  return out;
}

namespace {

// A row E(C) as a bitmask over the 2^|S| outcome sets.
using Family = std::uint32_t;

bool has(Family f, std::uint32_t x) { return (f >> x) & 1u; }

// X in A, Y in B imply X & Y in target.
bool meets_into(Family a, Family b, Family target, std::uint32_t sets) {
  for (std::uint32_t x = 0; x < sets; ++x) {
    if (!has(a, x)) continue;
    for (std::uint32_t y = 0; y < sets; ++y)
      if (has(b, y) && !has(target, x & y)) return false;
  }
  return true;
}

struct PlayableSearch {
  int players;
  int outcomes;
  std::uint32_t sets;
  std::vector<Family> rows;  // upsets containing S and not the empty set
  std::vector<Family> chosen;
  std::vector<BoolEffFn> found;

  void run(std::uint32_t c) {
    const std::uint32_t coalitions = 1u << players;
    if (c == coalitions) {
      EffFn h(Chain(1), players, default_outcome_names(outcomes));
      for (std::uint32_t d = 0; d < coalitions; ++d)
        for (std::uint32_t x = 0; x < sets; ++x) h.set(d, x, has(chosen[d], x) ? 1 : 0);
      if (!is_playable(h)) throw std::logic_error("pruned search produced a non-playable table");
      found.emplace_back(std::move(h));
      return;
    }
    for (Family row : rows) {
      chosen[c] = row;
      if (consistent(c)) run(c + 1);
    }
  }

  bool consistent(std::uint32_t c) const {
    for (std::uint32_t c1 = 0; c1 <= c; ++c1) {
      const std::uint32_t c2 = c & ~c1;
      if ((c1 & c2) != 0 || c1 > c2 || (c1 | c2) != c) continue;
      if (!meets_into(chosen[c1], chosen[c2], chosen[c], sets)) return false;
    }
    if (c == (1u << players) - 1u) {
      const std::uint32_t all = sets - 1u;
      for (std::uint32_t x = 0; x < sets; ++x)
        if (!has(chosen[0], all & ~x) && !has(chosen[c], x)) return false;
    }
    return true;
  }
};

}  // namespace

std::vector<BoolEffFn> enumerate_playable_boolean(int players, int outcomes) {
  if (outcomes < 1 || outcomes > 4) fail(Errc::invalid_argument, "playable enumeration supports 1..4 outcomes");
  if (players < 1 || players > 3) fail(Errc::invalid_argument, "playable enumeration supports 1..3 players");
  PlayableSearch search{players, outcomes, 1u << outcomes, {}, std::vector<Family>(1u << players), {}};
  const std::uint32_t sets = search.sets;
  const std::uint64_t families = std::uint64_t{1} << sets;
  for (std::uint64_t f = 0; f < families; ++f) {
    const Family row = static_cast<Family>(f);
    if (!has(row, sets - 1u) || has(row, 0)) continue;
    bool upset = true;
    for (std::uint32_t x = 0; x < sets && upset; ++x)
      for (int s = 0; s < outcomes && upset; ++s)
        if (has(row, x) && !has(row, x | (1u << s))) upset = false;
    if (upset) search.rows.push_back(row);
  }
  search.run(0);
  return std::move(search.found);
}

std::vector<EffFn> enumerate_playable(Chain chain, int players, int outcomes) {
  std::vector<EffFn> out;
  for (const BoolEffFn& h : enumerate_playable_boolean(players, outcomes)) out.push_back(lift_boolean(h, chain));
  return out;
}

GameForm random_game_form(Rng& rng, int players, int max_strategies, const std::vector<std::string>& outcomes) {
  std::uniform_int_distribution<int> strat(1, max_strategies);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(outcomes.size()) - 1);
  std::vector<int> strategies(players);
  std::size_t profiles = 1;
  for (int& s : strategies) {
    s = strat(rng);
    profiles *= static_cast<std::size_t>(s);
  }
  std::vector<int> map(profiles);
  for (int& o : map) o = pick(rng);
  return GameForm(players, std::move(strategies), outcomes, std::move(map));
}

EffFn random_table(Rng& rng, Chain chain, int players, int outcomes) {
  EffFn e(chain, players, default_outcome_names(outcomes));
  std::uniform_int_distribution<int> value(0, chain.n());
  for (std::uint32_t c = 0; c < e.coalitions(); ++c)
    for (Code f = 0; f < e.space().count(); ++f) e.set(c, f, value(rng));
  return e;
}

EffFn mutate_cell(Rng& rng, const EffFn& e) {
  EffFn out = e;
  std::uniform_int_distribution<std::uint32_t> coalition(0, e.coalitions() - 1);
  std::uniform_int_distribution<Code> fn(0, e.space().count() - 1);
  std::uniform_int_distribution<int> shift(1, e.n());
  const std::uint32_t c = coalition(rng);
  const Code f = fn(rng);
  out.set(c, f, (e.at(c, f) + shift(rng)) % (e.n() + 1));
  return out;
}

EffFn random_playable(Rng& rng, Chain chain, int players, const std::vector<std::string>& outcomes) {
  return effectivity_table(random_game_form(rng, players, 3, outcomes), chain);
}

Model random_model(Rng& rng, Chain chain, int players, const RandomModelOptions& options) {
  std::vector<std::string> states;
  for (int u = 0; u < options.states; ++u) states.push_back("s" + std::to_string(u));
  std::vector<EffFn> eff;
  if (options.states == 1) {
    // Game forms need two outcomes; on one state the only playable table is f -> f(s0).
    EffFn e(chain, players, states);
    for (std::uint32_t c = 0; c < e.coalitions(); ++c)
      for (Code f = 0; f < e.space().count(); ++f) e.set(c, f, static_cast<int>(f));
    eff.push_back(std::move(e));
  } else {
    for (int u = 0; u < options.states; ++u) eff.push_back(random_playable(rng, chain, players, states));
  }
  std::uniform_int_distribution<int> value(0, chain.n());
  Valuation val;
  for (int p : options.props) {
    std::vector<int> column(options.states);
    for (int& v : column) v = value(rng);
    val[p] = std::move(column);
  }
  Model m(chain, players, std::move(states), std::move(eff), std::move(val));
  return options.enriched ? standardize(m) : m;
}

Formula random_formula(Rng& rng, int depth, const std::vector<int>& props, int players, Chain chain,
                       Dialect dialect) {
  std::uniform_int_distribution<int> leaf(0, static_cast<int>(props.size()));
  if (depth <= 0) {
    const int k = leaf(rng);
    return k == static_cast<int>(props.size()) ? Formula::top() : Formula::prop(props[k]);
  }
  const int kinds = dialect == Dialect::LPlus ? 9 : 8;
  std::uniform_int_distribution<int> kind(0, kinds - 1);
  std::uniform_int_distribution<std::uint32_t> coalition(0, (1u << players) - 1u);
  std::uniform_int_distribution<int> threshold(1, chain.n());
  auto sub = [&] { return random_formula(rng, depth - 1, props, players, chain, dialect); };
  switch (kind(rng)) {
    case 0: return props.empty() ? Formula::top() : Formula::prop(props[leaf(rng) % props.size()]);
    case 1: return Formula::neg(sub());
    case 2: {
      Formula a = sub();
      return Formula::implies(std::move(a), sub());
    }
    case 3:
    case 4: return Formula::box(Coalition(coalition(rng), players), sub());
    case 5: {
      Formula a = sub();
      return Formula::oplus(std::move(a), sub());
    }
    case 6: {
      Formula a = sub();
      return Formula::meet(std::move(a), sub());
    }
    case 7: {
      const int i = threshold(rng);
      return Formula::tau(chain, i, sub());
    }
    default: return Formula::box_o(sub());
  }
}

}  // namespace lukeff
