#pragma once

// Countermodel search for the playable logics P_n and TP_n, and corpus-wide
// soundness checks of their axioms and rules.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lukeff/semantics.hpp"

namespace lukeff {

enum class Logic { Pn, TPn };
enum class SearchStrategy { exhaustive, enumerate, randomized };

std::string_view to_string(Logic l);
std::string_view to_string(SearchStrategy s);

struct SearchOptions {
  Chain chain{1};
  int players = 2;
  int max_states = 2;
  SearchStrategy strategy = SearchStrategy::exhaustive;
  std::uint64_t seed = 1;
  /// Random models drawn by the randomized strategy.
  std::uint64_t samples = 5000;
  /// Cap on state types (values of the atoms) in exhaustive mode.
  std::uint64_t max_types = 4096;
  /// Cap on candidate state sets or models examined.
  std::uint64_t max_candidates = std::uint64_t{1} << 20;
};

enum class Verdict { countermodel_found, no_countermodel_up_to_bound, theorem_by_filtration_bound };

std::string_view to_string(Verdict v);

struct SearchStats {
  std::uint64_t types = 0;
  std::uint64_t surviving = 0;
  std::uint64_t rounds = 0;
  std::uint64_t candidates = 0;
};

struct DecisionVerdict {
  Verdict status = Verdict::no_countermodel_up_to_bound;
  std::optional<Model> countermodel;
  int state = -1;
  /// (n+1)^(number of subformulas), saturating.
  std::uint64_t bound = 0;
  int max_states = 0;
  SearchStats stats;
};

std::uint64_t filtration_bound(const Formula& f, Chain chain);

/// Looks for a finite playable model (TPn: standard playable enriched
/// model) with at most max_states states refuting f at some state.
///
/// The exhaustive strategy decides the question outright by eliminating
/// state types, then looks for a small refuting model among the survivors.
/// The enumerate strategy walks every playable table tuple and valuation
/// (tiny instances only); randomized samples seeded random models.
DecisionVerdict search_countermodel(const Formula& f, Logic logic, const SearchOptions& options);

struct SoundnessEntry {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
  std::string witness;
};

struct SoundnessReport {
  Logic logic = Logic::Pn;
  std::vector<SoundnessEntry> entries;

  bool passed() const;
  /// One line per entry; stable across runs.
  std::string to_string() const;
};

/// Axiom schemata of the logic (and the B family for Pn) as frame validity
/// over every corpus model, plus spot checks that Modus Ponens, Uniform
/// Substitution, Monotonicity and (TPn) [0]-necessitation preserve truth.
/// Corpus models must carry valuations for p1 and p2.
SoundnessReport soundness_suite(Logic logic, const std::vector<Model>& corpus, std::uint64_t seed = 1);

}  // namespace lukeff
