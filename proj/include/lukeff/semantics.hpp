#pragma once

// L_n-models over neighborhood frames, the enriched variant with a relation
// R for [O], and formula evaluation.
//
// States double as outcomes: every E(u) is a table over the model's own
// state set, and a value vector Val(-, phi) is a function code over it.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lukeff/eff_fn.hpp"
#include "lukeff/syntax.hpp"

namespace lukeff {

/// succ[u] is the bitmask of R-successors of u.
struct Relation {
  std::vector<std::uint32_t> succ;

  bool contains(int u, int v) const { return (succ[u] >> v) & 1u; }
  friend bool operator==(const Relation&, const Relation&) = default;
};

/// Proposition id -> numerator at each state.
using Valuation = std::map<int, std::vector<int>>;

class Model {
 public:
  Model(Chain chain, int players, std::vector<std::string> states, std::vector<EffFn> eff, Valuation val = {},
        std::optional<Relation> relation = std::nullopt);

  Chain chain() const { return eff_.front().chain(); }
  int n() const { return eff_.front().n(); }
  int players() const { return eff_.front().players(); }
  int size() const { return static_cast<int>(states_.size()); }
  const std::vector<std::string>& states() const noexcept { return states_; }
  int state_index(std::string_view name) const;
  const FunctionSpace& space() const { return eff_.front().space(); }

  const EffFn& eff(int u) const { return eff_[u]; }
  const std::vector<EffFn>& effs() const noexcept { return eff_; }
  const Valuation& valuation() const noexcept { return val_; }
  const std::optional<Relation>& relation() const noexcept { return relation_; }
  bool enriched() const noexcept { return relation_.has_value(); }

  Model with_valuation(Valuation val) const;
  Model with_relation(std::optional<Relation> relation) const;

  friend bool operator==(const Model&, const Model&) = default;

 private:
  std::vector<std::string> states_;
  std::vector<EffFn> eff_;
  Valuation val_;
  std::optional<Relation> relation_;
};

/// A formula flattened into its subformulas (children first) so that the
/// value vectors of all of them can be computed in one pass.
class Evaluator {
 public:
  explicit Evaluator(const Formula& f);

  const ClosureSet& closure() const noexcept { return closure_; }
  /// Sorted proposition ids; run() takes their value vectors in this order.
  const std::vector<int>& propositions() const noexcept { return props_; }
  std::size_t index_of(const Formula& g) const;

  /// Value vector of every subformula, in closure order. The root comes last.
  void run(const Model& m, std::span<const Code> props, std::vector<Code>& out) const;
  /// Same, reading propositions from the model's valuation.
  std::vector<Code> run(const Model& m) const;

 private:
  struct Step {
    NodeKind kind;
    int a = -1;
    int b = -1;
    std::uint32_t coalition = 0;
    int coalition_players = 0;
    int prop_slot = -1;
  };
  ClosureSet closure_;
  std::vector<int> props_;
  std::vector<Step> steps_;
  bool uses_box_o_ = false;
};

/// Value vector of Val(-, p) from the model's valuation.
Code proposition_vector(const Model& m, int prop);

/// Throws DialectViolation ([O] on a model without R) and
/// UnknownProposition.
std::vector<TruthValue> evaluate(const Model& m, const Formula& f);
TruthValue eval(const Model& m, int state, const Formula& f);
bool is_true(const Model& m, const Formula& f);

struct ValidityResult {
  bool valid = true;
  /// First falsifying valuation (over the support) and state.
  std::optional<Valuation> valuation;
  int state = -1;
  std::uint64_t valuations_checked = 0;
};

/// Truth under every valuation of `support` over the frame; other
/// propositions keep their values from the model. Throws BudgetExceeded when
/// (n+1)^(|S| |support|) exceeds `budget`.
ValidityResult is_valid(const Model& frame, const Formula& f, const std::vector<int>& support,
                        std::uint64_t budget = std::uint64_t{1} << 22);

bool is_playable(const Model& m);
/// {(u, v) | E(u)(0, ~chi_{v}) = 0}.
Relation standard_relation(const Model& m);
bool is_standard(const Model& m);
Model standardize(const Model& m);

enum class Schema { p1, p2, p3, p4, p5, tp6, tp7, tp8, b_family };

inline constexpr Schema kPnSchemas[] = {Schema::p1, Schema::p2, Schema::p3, Schema::p4, Schema::p5};
inline constexpr Schema kTPnSchemas[] = {Schema::tp6, Schema::tp7, Schema::tp8};

std::string_view to_string(Schema s);

/// Every instance of the schema over k players, with p1 and p2 as the
/// schema variables p and q.
std::vector<Formula> schema_instances(Schema s, int players, Chain chain);

struct SchemaResult {
  bool holds = true;
  std::size_t instances = 0;
  std::optional<Formula> instance;
  ValidityResult failure;
};

SchemaResult check_axiom_schema(const Model& m, Schema s, std::uint64_t budget = std::uint64_t{1} << 22);

}  // namespace lukeff
