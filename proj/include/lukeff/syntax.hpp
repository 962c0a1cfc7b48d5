#pragma once

// Formulas of the coalition languages L and L+ (L plus the [O] modality).
//
// The kernel AST has six node kinds: 1, p, ->, ~, [C] and [O]. Everything
// else the surface grammar offers ((+), (.), &, |, <->, 0, m.F, tau(i)F) is
// expanded into kernel nodes while parsing.

#include <compare>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lukeff/chain.hpp"

namespace lukeff {

enum class Dialect { L, LPlus };

/// A set of players drawn from N = {1, ..., players}, bit i-1 for player i.
class Coalition {
 public:
  Coalition(std::uint32_t bits, int players);

  static Coalition empty(int players) { return {0u, players}; }
  static Coalition grand(int players) { return {(1u << players) - 1u, players}; }

  std::uint32_t bits() const noexcept { return bits_; }
  int players() const noexcept { return players_; }
  bool contains(int player) const { return (bits_ >> (player - 1)) & 1u; }
  Coalition complement() const { return {~bits_ & grand(players_).bits_, players_}; }

  /// "{1,3}", "{}" for the empty coalition.
  std::string to_string() const;

  friend bool operator==(const Coalition&, const Coalition&) = default;
  friend auto operator<=>(const Coalition&, const Coalition&) = default;

 private:
  std::uint32_t bits_;
  int players_;
};

/// Accepts "{1,3}", "{}" and "N".
Coalition parse_coalition(std::string_view text, int players);
std::string format_coalition(std::uint32_t bits);

enum class NodeKind : std::uint8_t { top, prop, implies, neg, box, box_o };

struct FormulaNode;

class Formula {
 public:
  static Formula top();
  static Formula prop(int id);
  static Formula implies(Formula a, Formula b);
  static Formula neg(Formula a);
  static Formula box(Coalition c, Formula a);
  static Formula box_o(Formula a);

  // Derived connectives, expanded into kernel nodes.
  static Formula bottom();
  static Formula oplus(Formula a, Formula b);
  static Formula odot(Formula a, Formula b);
  static Formula join(Formula a, Formula b);
  static Formula meet(Formula a, Formula b);
  static Formula iff(Formula a, Formula b);
  /// a (+) a (+) ... (+) a, m copies; 0 copies is the constant 0.
  static Formula multiple(int m, Formula a);
  /// The threshold tau_{i/n}(a) via its synthesized doubling-map term.
  static Formula tau(Chain chain, int i, Formula a);

  NodeKind kind() const;
  int prop_id() const;
  const Coalition& coalition() const;
  /// Sole child of ~, [C], [O]; left operand of ->.
  const Formula& left() const;
  const Formula& right() const;

  /// Number of nodes counted as a tree.
  std::size_t tree_size() const;
  bool uses_box_o() const;
  bool in_dialect(Dialect d) const { return d == Dialect::LPlus || !uses_box_o(); }

  /// Identity of the shared node; stable for the lifetime of the formula.
  const FormulaNode* node() const noexcept { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  explicit Formula(std::shared_ptr<const FormulaNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const FormulaNode> node_;
};

struct FormulaNode {
  NodeKind kind;
  int prop = 0;
  Coalition coalition{0u, 0};
  std::vector<Formula> children{};
  std::size_t tree_size = 1;
  bool has_box_o = false;
};

struct ParseOptions {
  int players = 2;
  Chain chain{1};
  Dialect dialect = Dialect::LPlus;
};

/// Throws SyntaxError, UnknownPlayer, DialectViolation.
Formula parse(std::string_view text, const ParseOptions& options);

/// Kernel syntax; parse(print(f)) == f.
std::string print(const Formula& f);

/// The subformula set of a generator, children listed before parents.
struct ClosureSet {
  Formula generator;
  std::vector<Formula> members;

  bool contains(const Formula& f) const;
};

ClosureSet subformulas(const Formula& f);

/// Replaces every occurrence of proposition `prop` by `replacement`.
Formula substitute(const Formula& f, int prop, const Formula& replacement);

std::set<int> propositions(const Formula& f);

}  // namespace lukeff
