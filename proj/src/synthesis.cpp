#include <algorithm>
#include <stdexcept>

#include "lukeff/effectivity.hpp"

namespace lukeff {

namespace {

// Strategy-count vectors in 1..budget, by profile count and then
// lexicographically.
std::vector<std::vector<int>> shapes(int players, int budget) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(players, 1);
  for (;;) {
    out.push_back(v);
    int i = players - 1;
    while (i >= 0 && v[i] == budget) v[i--] = 1;
    if (i < 0) break;
    ++v[i];
  }
  auto product = [](const std::vector<int>& s) {
    std::size_t p = 1;
    for (int x : s) p *= static_cast<std::size_t>(x);
    return p;
  };
  std::stable_sort(out.begin(), out.end(),
                   [&](const auto& a, const auto& b) { return product(a) < product(b); });
  return out;
}

// H_G == H, comparing coalition by coalition.
bool realizes(const GameForm& g, const BoolEffFn& h) {
  const std::uint32_t subsets = 1u << h.outcome_count();
  for (std::uint32_t c = 0; c < (1u << g.players()); ++c) {
    const auto sets = g.forcing_sets(c);
    for (std::uint32_t x = 0; x < subsets; ++x) {
      bool eff = false;
      for (std::uint32_t s : sets)
        if ((s & ~x) == 0) {
          eff = true;
          break;
        }
      if (eff != h.effective(c, x)) return false;
    }
  }
  return true;
}

}  // namespace

GameForm synthesize_game_form(const EffFn& e, const SynthesisOptions& options) {
  const bool truly = options.truly_playable_check ? options.truly_playable_check(e) : is_truly_playable(e);
  if (!truly) fail(Errc::not_truly_playable, "only truly playable tables come from game forms");
  if (e.players() < 2 || e.outcome_count() < 2)
    fail(Errc::invalid_argument, "game forms need at least two players and two outcomes");
  if (options.max_strategies < 1) fail(Errc::invalid_argument, "strategy budget must be positive");

  const BoolEffFn h = boolean_skeleton(e);
  std::uint32_t z = (1u << e.outcome_count()) - 1u;
  for (std::uint32_t x = 0; x < (1u << e.outcome_count()); ++x)
    if (h.effective(0, x)) z &= x;
  std::vector<int> zs;
  for (int s = 0; s < e.outcome_count(); ++s)
    if ((z >> s) & 1u) zs.push_back(s);
  if (zs.empty()) fail(Errc::not_truly_playable, "the empty coalition forces the empty set");

  const int base = static_cast<int>(zs.size());
  std::uint64_t examined = 0;
  for (const auto& strategies : shapes(e.players(), options.max_strategies)) {
    std::size_t profiles = 1;
    for (int x : strategies) profiles *= static_cast<std::size_t>(x);
    if (profiles < static_cast<std::size_t>(base)) continue;  // cannot cover Z
    std::vector<int> digits(profiles, 0);
    for (;;) {
      if (++examined > options.max_candidates)
        fail(Errc::budget_exceeded, "synthesis examined more than " + std::to_string(options.max_candidates) +
                                        " outcome maps");
      std::uint32_t covered = 0;
      std::vector<int> map(profiles);
      for (std::size_t p = 0; p < profiles; ++p) {
        map[p] = zs[digits[p]];
        covered |= 1u << map[p];
      }
      if (covered == z) {
        GameForm g(e.players(), strategies, e.outcomes(), std::move(map));
        if (realizes(g, h)) {
          if (!(effectivity_table(g, e.chain(), kMaxTableCells) == e))
            throw std::logic_error("game form realizes the skeleton but not the table");
          return g;
        }
      }
      std::size_t k = profiles;
      while (k > 0 && digits[k - 1] == base - 1) digits[--k] = 0;
      if (k == 0) break;
      ++digits[k - 1];
    }
  }
  fail(Errc::synthesis_budget_exceeded,
       "no game form with at most " + std::to_string(options.max_strategies) + " strategies per player");
}

}  // namespace lukeff
