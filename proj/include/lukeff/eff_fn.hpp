#pragma once

// Functions S -> L_n as dense integer codes, and effectivity functions
// P(N) x L_n^S -> L_n stored as explicit tables.
//
// A function f is encoded base (n+1) over the ordered outcome set with
// outcome 0 as the least significant digit. Cell (C, f) of a table lives
// at index C * count + f, C a coalition bitmask.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "lukeff/chain.hpp"
#include "lukeff/syntax.hpp"

namespace lukeff {

using Code = std::uint32_t;

/// Hard ceiling on table cells; callers impose tighter budgets.
inline constexpr std::uint64_t kMaxTableCells = std::uint64_t{1} << 28;
inline constexpr std::uint64_t kDefaultBudgetCells = std::uint64_t{1} << 20;

class FunctionSpace {
 public:
  FunctionSpace(Chain chain, int outcomes);

  Chain chain() const { return Chain(n_); }
  int n() const noexcept { return n_; }
  int outcomes() const noexcept { return s_; }
  Code count() const noexcept { return count_; }

  int digit(Code f, int s) const { return static_cast<int>(f / pow_[s] % (n_ + 1)); }
  Code with_digit(Code f, int s, int v) const { return f + (v - digit(f, s)) * pow_[s]; }
  Code weight(int s) const { return pow_[s]; }

  Code encode(std::span<const int> values) const;
  std::vector<int> decode(Code f) const;

  Code constant(int v) const;
  Code top() const { return constant(n_); }
  Code bottom() const { return 0; }
  /// Characteristic function of the outcome set `mask`.
  Code chi(std::uint32_t mask) const;
  /// Outcomes where f takes value 1.
  std::uint32_t ones(Code f) const;

  Code neg(Code f) const { return top() - f; }
  Code meet(Code f, Code g) const;
  Code join(Code f, Code g) const;
  Code oplus(Code f, Code g) const;
  Code odot(Code f, Code g) const;
  Code implies(Code f, Code g) const { return oplus(neg(f), g); }
  Code tau_oplus(Code f) const { return oplus(f, f); }
  Code tau_odot(Code f) const { return odot(f, f); }
  Code tau_threshold(int i, Code f) const { return chi(at_least(i, f)); }
  /// Outcomes where f >= i.
  std::uint32_t at_least(int i, Code f) const;

  bool leq(Code f, Code g) const;
  bool is_idempotent(Code f) const;
  int min_value(Code f) const;
  int max_value(Code f) const;

  friend bool operator==(const FunctionSpace& a, const FunctionSpace& b) {
    return a.n_ == b.n_ && a.s_ == b.s_;
  }

 private:
  template <typename Op>
  Code pointwise(Code f, Code g, Op op) const;

  int n_;
  int s_;
  Code count_;
  std::vector<Code> pow_;
};

class EffFn {
 public:
  /// All-zero table.
  EffFn(Chain chain, int players, std::vector<std::string> outcomes);
  EffFn(Chain chain, int players, std::vector<std::string> outcomes, std::vector<std::uint8_t> table);

  const FunctionSpace& space() const noexcept { return space_; }
  Chain chain() const { return space_.chain(); }
  int n() const noexcept { return space_.n(); }
  int players() const noexcept { return players_; }
  int outcome_count() const noexcept { return space_.outcomes(); }
  const std::vector<std::string>& outcomes() const noexcept { return *outcomes_; }
  std::uint32_t coalitions() const noexcept { return 1u << players_; }
  std::uint32_t grand() const noexcept { return coalitions() - 1u; }
  std::size_t cells() const noexcept { return table_.size(); }

  int at(std::uint32_t c, Code f) const { return table_[static_cast<std::size_t>(c) * space_.count() + f]; }
  void set(std::uint32_t c, Code f, int v) {
    table_[static_cast<std::size_t>(c) * space_.count() + f] = static_cast<std::uint8_t>(v);
  }
  TruthValue value(const Coalition& c, std::span<const int> f) const;

  const std::vector<std::uint8_t>& table() const noexcept { return table_; }

  /// Same chain, players, outcome count and cells; outcome names are labels.
  friend bool operator==(const EffFn& a, const EffFn& b) {
    return a.players_ == b.players_ && a.space_ == b.space_ && a.table_ == b.table_;
  }

 private:
  FunctionSpace space_;
  int players_;
  std::shared_ptr<const std::vector<std::string>> outcomes_;
  std::vector<std::uint8_t> table_;
};

/// An L_1-valued effectivity function. With n = 1 a function code is the
/// bitmask of the outcome set it characterizes.
class BoolEffFn {
 public:
  explicit BoolEffFn(EffFn table);

  const EffFn& table() const noexcept { return table_; }
  int players() const noexcept { return table_.players(); }
  int outcome_count() const noexcept { return table_.outcome_count(); }
  bool effective(std::uint32_t c, std::uint32_t x) const { return table_.at(c, x) != 0; }
  void set(std::uint32_t c, std::uint32_t x, bool v) { table_.set(c, x, v ? 1 : 0); }

  friend bool operator==(const BoolEffFn&, const BoolEffFn&) = default;

 private:
  EffFn table_;
};

/// "a", "b", ... for small outcome counts, "s0", "s1", ... beyond 26.
std::vector<std::string> default_outcome_names(int count);

}  // namespace lukeff
