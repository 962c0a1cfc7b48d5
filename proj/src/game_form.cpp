#include "lukeff/game_form.hpp"

#include <algorithm>

namespace lukeff {

GameForm::GameForm(int players, std::vector<int> strategies, std::vector<std::string> outcomes,
                   std::vector<int> outcome_map)
    : players_(players),
      strategies_(std::move(strategies)),
      outcomes_(std::move(outcomes)),
      map_(std::move(outcome_map)) {
  if (players_ < 2 || players_ > 16) fail(Errc::invalid_argument, "a game form needs 2..16 players");
  if (static_cast<int>(strategies_.size()) != players_)
    fail(Errc::invalid_argument, "one strategy count per player required");
  if (outcomes_.size() < 2 || outcomes_.size() > 30) fail(Errc::invalid_argument, "a game form needs 2..30 outcomes");
  std::vector<std::string> sorted = outcomes_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(Errc::invalid_argument, "duplicate outcome name");

  std::size_t profiles = 1;
  stride_.assign(players_, 1);
  for (int i = players_ - 1; i >= 0; --i) {
    if (strategies_[i] < 1) fail(Errc::invalid_argument, "every player needs a strategy");
    stride_[i] = profiles;
    profiles *= static_cast<std::size_t>(strategies_[i]);
    if (profiles > (std::size_t{1} << 26)) fail(Errc::budget_exceeded, "too many strategy profiles");
  }
  if (map_.size() != profiles) fail(Errc::invalid_argument, "outcome map is not total on strategy profiles");
  for (int o : map_)
    if (o < 0 || o >= outcome_count()) fail(Errc::index_out_of_range, "outcome map leaves the outcome set");
}

std::vector<int> GameForm::profile(std::size_t index) const {
  std::vector<int> out(players_);
  for (int i = 0; i < players_; ++i) out[i] = static_cast<int>(index / stride_[i] % strategies_[i]);
  return out;
}

std::size_t GameForm::profile_index(std::span<const int> profile) const {
  if (static_cast<int>(profile.size()) != players_) fail(Errc::invalid_argument, "profile has wrong length");
  std::size_t idx = 0;
  for (int i = 0; i < players_; ++i) {
    if (profile[i] < 0 || profile[i] >= strategies_[i]) fail(Errc::index_out_of_range, "strategy out of range");
    idx += profile[i] * stride_[i];
  }
  return idx;
}

std::uint32_t GameForm::range() const {
  std::uint32_t mask = 0;
  for (int o : map_) mask |= 1u << o;
  return mask;
}

std::vector<std::uint32_t> GameForm::forcing_sets(std::uint32_t coalition) const {
  // Index joint strategies of C by the mixed-radix digits of its members.
  std::size_t joint = 1;
  std::vector<std::size_t> cstride(players_, 0);
  for (int i = players_ - 1; i >= 0; --i)
    if ((coalition >> i) & 1u) {
      cstride[i] = joint;
      joint *= static_cast<std::size_t>(strategies_[i]);
    }
  std::vector<std::uint32_t> sets(joint, 0);
  for (std::size_t p = 0; p < map_.size(); ++p) {
    std::size_t j = 0;
    for (int i = 0; i < players_; ++i)
      if ((coalition >> i) & 1u) j += (p / stride_[i] % strategies_[i]) * cstride[i];
    sets[j] |= 1u << map_[p];
  }
  return sets;
}

namespace {
void check_coalition(const GameForm& g, const Coalition& c) {
  if (c.players() != g.players()) fail(Errc::unknown_player, "coalition over a different player set");
}

// Drops duplicates and supersets; what remains decides every cell.
std::vector<std::uint32_t> minimal_sets(std::vector<std::uint32_t> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<std::uint32_t> out;
  for (std::uint32_t a : sets) {
    bool dominated = false;
    for (std::uint32_t b : sets)
      if (b != a && (b & a) == b) dominated = true;
    if (!dominated) out.push_back(a);
  }
  return out;
}
}  // namespace

bool boolean_effectivity(const GameForm& g, const Coalition& c, std::uint32_t x) {
  check_coalition(g, c);
  for (std::uint32_t f : g.forcing_sets(c.bits()))
    if ((f & ~x) == 0) return true;
  return false;
}

TruthValue mv_effectivity(const GameForm& g, Chain chain, const Coalition& c, std::span<const int> f) {
  check_coalition(g, c);
  if (static_cast<int>(f.size()) != g.outcome_count()) fail(Errc::invalid_argument, "function has wrong arity");
  for (int v : f)
    if (v < 0 || v > chain.n()) fail(Errc::index_out_of_range, "function value outside L_n");
  int best = 0;
  for (std::uint32_t set : g.forcing_sets(c.bits())) {
    int worst = chain.n();
    for (int s = 0; s < g.outcome_count(); ++s)
      if ((set >> s) & 1u) worst = std::min(worst, f[s]);
    best = std::max(best, worst);
  }
  return {best, chain};
}

EffFn effectivity_table(const GameForm& g, Chain chain, std::uint64_t budget_cells) {
  std::uint64_t cells = std::uint64_t{1} << g.players();
  for (int s = 0; s < g.outcome_count() && cells <= budget_cells; ++s) cells *= static_cast<std::uint64_t>(chain.size());
  if (cells > budget_cells)
    fail(Errc::budget_exceeded, "effectivity table needs more than " + std::to_string(budget_cells) + " cells");

  EffFn e(chain, g.players(), g.outcomes());
  const FunctionSpace& fs = e.space();
  for (std::uint32_t c = 0; c < e.coalitions(); ++c) {
    const auto sets = minimal_sets(g.forcing_sets(c));
    for (Code f = 0; f < fs.count(); ++f) {
      int best = 0;
      for (std::uint32_t set : sets) {
        int worst = chain.n();
        for (int s = 0; s < fs.outcomes(); ++s)
          if ((set >> s) & 1u) worst = std::min(worst, fs.digit(f, s));
        best = std::max(best, worst);
      }
      e.set(c, f, best);
    }
  }
  return e;
}

BoolEffFn boolean_effectivity_table(const GameForm& g, std::uint64_t budget_cells) {
  return BoolEffFn(effectivity_table(g, Chain(1), budget_cells));
}

std::string subset_name(std::uint32_t mask, const std::vector<std::string>& base) {
  std::string out = "{";
  bool first = true;
  for (std::size_t s = 0; s < base.size(); ++s) {
    if (!((mask >> s) & 1u)) continue;
    if (!first) out += ",";
    out += base[s];
    first = false;
  }
  return out + "}";
}

GameForm from_social_choice(const std::vector<std::string>& base_outcomes, int players,
                            const std::vector<Preference>& profiles, const ChoiceRule& rule) {
  if (profiles.empty()) fail(Errc::empty_profile_set, "no preference profiles supplied");
  const int m = static_cast<int>(base_outcomes.size());
  if (m < 1 || m > 4) fail(Errc::invalid_argument, "social choice base sets hold 1..4 outcomes");

  std::vector<std::string> names;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) names.push_back(subset_name(mask, base_outcomes));

  const int q = static_cast<int>(profiles.size());
  std::vector<int> strategies(players, q);
  std::size_t total = 1;
  for (int i = 0; i < players; ++i) total *= static_cast<std::size_t>(q);

  std::vector<int> map(total);
  std::vector<Preference> tuple(players);
  for (std::size_t p = 0; p < total; ++p) {
    std::size_t rest = p;
    for (int i = players - 1; i >= 0; --i) {
      tuple[i] = profiles[rest % q];
      rest /= q;
    }
    const std::uint32_t chosen = rule(tuple);
    if (chosen >> m) fail(Errc::index_out_of_range, "choice rule left the base outcome set");
    map[p] = static_cast<int>(chosen);
  }
  return GameForm(players, std::move(strategies), std::move(names), std::move(map));
}

}  // namespace lukeff
