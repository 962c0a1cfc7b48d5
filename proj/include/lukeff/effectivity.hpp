#pragma once

// Playability predicates, the Boolean skeleton and its L_n lift, and game
// form synthesis for effectivity tables.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "lukeff/eff_fn.hpp"
#include "lukeff/game_form.hpp"

namespace lukeff {

enum class Property {
  outcome_monotonic,
  n_maximal,
  regular,
  superadditive,
  coalition_monotonic,
  homogeneous,
  liveness,
  safety,
  principal,
  semi_playable,
  playable,
  truly_playable,
};

inline constexpr std::array kAllProperties = {
    Property::outcome_monotonic, Property::n_maximal,      Property::regular,     Property::superadditive,
    Property::coalition_monotonic, Property::homogeneous,  Property::liveness,    Property::safety,
    Property::principal,         Property::semi_playable,  Property::playable,    Property::truly_playable,
};

std::string_view to_string(Property p);
std::optional<Property> property_from_string(std::string_view name);

/// A cell (or pair of cells) at which a property fails.
struct Witness {
  std::uint32_t c = 0;
  Code f = 0;
  std::optional<std::uint32_t> c2;
  std::optional<Code> g;
};

struct PropertyResult {
  Property property = Property::outcome_monotonic;
  bool holds = true;
  std::optional<Witness> witness;
};

struct PlayabilityReport {
  std::array<PropertyResult, kAllProperties.size()> results;

  const PropertyResult& operator[](Property p) const { return results[static_cast<std::size_t>(p)]; }
  bool holds(Property p) const { return (*this)[p].holds; }
};

PropertyResult check_property(const EffFn& e, Property p);
PlayabilityReport check_playability(const EffFn& e);

inline bool is_playable(const EffFn& e) { return check_property(e, Property::playable).holds; }
inline bool is_truly_playable(const EffFn& e) { return check_property(e, Property::truly_playable).holds; }

/// Restriction of E to idempotent functions.
BoolEffFn boolean_skeleton(const EffFn& e);

/// E(C, f) = max{i | H(C, tau_i(f)) = 1}, 0 when no i qualifies. Throws
/// NotPlayableInput unless H is playable.
EffFn lift_boolean(const BoolEffFn& h, Chain chain);

/// Compares skeletons only; both tables must be homogeneous. With
/// `debug` the full tables are compared too and disagreement between the
/// two answers raises std::logic_error.
bool equal_by_skeleton(const EffFn& a, const EffFn& b, bool debug = false);

struct SynthesisOptions {
  /// Largest strategy count tried per player.
  int max_strategies = 3;
  /// Cap on candidate outcome maps examined; BudgetExceeded beyond it.
  std::uint64_t max_candidates = std::uint64_t{1} << 26;
  /// Replaces the principality test, for exercising the precondition path.
  std::function<bool(const EffFn&)> truly_playable_check;
};

/// A game form G with effectivity_table(G) == E. Throws NotTrulyPlayable or
/// SynthesisBudgetExceeded (no witness within the strategy budget).
GameForm synthesize_game_form(const EffFn& e, const SynthesisOptions& options = {});

}  // namespace lukeff
