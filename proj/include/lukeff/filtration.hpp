#pragma once

// Filtrations of playable models through the subformulas of a formula mu.

#include <string_view>
#include <vector>

#include "lukeff/semantics.hpp"

namespace lukeff {

/// States grouped by their values on every subformula of mu. Classes are
/// numbered by their least member, which also serves as representative.
struct Quotient {
  std::vector<int> class_of;
  std::vector<int> representative;

  int size() const { return static_cast<int>(representative.size()); }
};

Quotient quotient(const Model& m, const Formula& mu);

enum class Stage { intermediate, playable, enriched };

std::string_view to_string(Stage s);

struct FiltrationResult {
  Quotient quotient;
  Model model;
  Stage stage;
};

/// The value vectors (over classes) of the subformulas of mu, closed under
/// pointwise ~, ->, tau+ and tau. . Codes in the function space of the
/// class set; sorted.
std::vector<Code> definable_closure(const Model& m, const Formula& mu, const Quotient& q);

/// E*(|u|)(C, f) = max{E(u)(C, d) | d definable, d <= f} for C != N and
/// E*(|u|)(N, f) = ~E*(|u|)(0, ~f). Throws NotPlayable.
FiltrationResult intermediate_filtration(const Model& m, const Formula& mu);

/// E+ = lift of the skeleton of E*. Throws NotPlayable.
FiltrationResult playable_filtration(const Model& m, const Formula& mu);

/// E+ together with R* = {(|u|,|v|) | for all definable d, [O]d = 1 at u
/// implies d(|v|) = 1}. Throws NotStandard, NotPlayable, PremiseViolated.
FiltrationResult enriched_filtration(const Model& m, const Formula& mu);

}  // namespace lukeff
