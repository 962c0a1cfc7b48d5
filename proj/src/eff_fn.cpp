#include "lukeff/eff_fn.hpp"

#include <algorithm>

namespace lukeff {

FunctionSpace::FunctionSpace(Chain chain, int outcomes) : n_(chain.n()), s_(outcomes), count_(1) {
  if (outcomes < 1 || outcomes > 30) fail(Errc::invalid_argument, "outcome count must lie in 1..30");
  pow_.resize(outcomes);
  std::uint64_t c = 1;
  for (int s = 0; s < outcomes; ++s) {
    pow_[s] = static_cast<Code>(c);
    c *= static_cast<std::uint64_t>(n_ + 1);
    if (c > kMaxTableCells)
      fail(Errc::budget_exceeded, "L_" + std::to_string(n_) + "^" + std::to_string(outcomes) + " is too large");
  }
  count_ = static_cast<Code>(c);
}

Code FunctionSpace::encode(std::span<const int> values) const {
  if (static_cast<int>(values.size()) != s_) fail(Errc::invalid_argument, "function has wrong arity");
  Code f = 0;
  for (int s = 0; s < s_; ++s) {
    if (values[s] < 0 || values[s] > n_) fail(Errc::index_out_of_range, "function value outside L_n");
    f += static_cast<Code>(values[s]) * pow_[s];
  }
  return f;
}

std::vector<int> FunctionSpace::decode(Code f) const {
  std::vector<int> out(s_);
  for (int s = 0; s < s_; ++s, f /= (n_ + 1)) out[s] = static_cast<int>(f % (n_ + 1));
  return out;
}

Code FunctionSpace::constant(int v) const {
  Code f = 0;
  for (int s = 0; s < s_; ++s) f += static_cast<Code>(v) * pow_[s];
  return f;
}

Code FunctionSpace::chi(std::uint32_t mask) const {
  Code f = 0;
  for (int s = 0; s < s_; ++s)
    if ((mask >> s) & 1u) f += static_cast<Code>(n_) * pow_[s];
  return f;
}

std::uint32_t FunctionSpace::ones(Code f) const { return at_least(n_, f); }

std::uint32_t FunctionSpace::at_least(int i, Code f) const {
  std::uint32_t mask = 0;
  for (int s = 0; s < s_; ++s, f /= (n_ + 1))
    if (static_cast<int>(f % (n_ + 1)) >= i) mask |= 1u << s;
  return mask;
}

template <typename Op>
Code FunctionSpace::pointwise(Code f, Code g, Op op) const {
  const Code base = n_ + 1;
  Code out = 0;
  for (int s = 0; s < s_; ++s, f /= base, g /= base)
    out += static_cast<Code>(op(n_, static_cast<int>(f % base), static_cast<int>(g % base))) * pow_[s];
  return out;
}

Code FunctionSpace::meet(Code f, Code g) const { return pointwise(f, g, mv::meet); }
Code FunctionSpace::join(Code f, Code g) const { return pointwise(f, g, mv::join); }
Code FunctionSpace::oplus(Code f, Code g) const { return pointwise(f, g, mv::oplus); }
Code FunctionSpace::odot(Code f, Code g) const { return pointwise(f, g, mv::odot); }

bool FunctionSpace::leq(Code f, Code g) const {
  const Code base = n_ + 1;
  for (int s = 0; s < s_; ++s, f /= base, g /= base)
    if (f % base > g % base) return false;
  return true;
}

bool FunctionSpace::is_idempotent(Code f) const {
  const Code base = n_ + 1;
  for (int s = 0; s < s_; ++s, f /= base)
    if (f % base != 0 && static_cast<int>(f % base) != n_) return false;
  return true;
}

int FunctionSpace::min_value(Code f) const {
  int m = n_;
  for (int s = 0; s < s_; ++s, f /= (n_ + 1)) m = std::min(m, static_cast<int>(f % (n_ + 1)));
  return m;
}

int FunctionSpace::max_value(Code f) const {
  int m = 0;
  for (int s = 0; s < s_; ++s, f /= (n_ + 1)) m = std::max(m, static_cast<int>(f % (n_ + 1)));
  return m;
}

namespace {
std::vector<std::string> checked_names(std::vector<std::string> names) {
  if (names.empty()) fail(Errc::invalid_argument, "outcome set is empty");
  std::vector<std::string> sorted = names;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(Errc::invalid_argument, "duplicate outcome name");
  return names;
}

void check_players(int players) {
  if (players < 1 || players > 16) fail(Errc::invalid_argument, "player count must lie in 1..16");
}
}  // namespace

EffFn::EffFn(Chain chain, int players, std::vector<std::string> outcomes)
    : space_(chain, static_cast<int>(outcomes.size())),
      players_(players),
      outcomes_(std::make_shared<const std::vector<std::string>>(checked_names(std::move(outcomes)))) {
  check_players(players);
  const std::uint64_t cells = (std::uint64_t{1} << players) * space_.count();
  if (cells > kMaxTableCells) fail(Errc::budget_exceeded, "effectivity table too large");
  table_.assign(cells, 0);
}

EffFn::EffFn(Chain chain, int players, std::vector<std::string> outcomes, std::vector<std::uint8_t> table)
    : EffFn(chain, players, std::move(outcomes)) {
  if (table.size() != table_.size()) fail(Errc::invalid_argument, "table has wrong number of cells");
  for (auto v : table)
    if (v > space_.n()) fail(Errc::index_out_of_range, "table value outside L_n");
  table_ = std::move(table);
}

TruthValue EffFn::value(const Coalition& c, std::span<const int> f) const {
  if (c.players() != players_) fail(Errc::unknown_player, "coalition over a different player set");
  return {at(c.bits(), space_.encode(f)), chain()};
}

BoolEffFn::BoolEffFn(EffFn table) : table_(std::move(table)) {
  if (table_.n() != 1) fail(Errc::chain_mismatch, "Boolean effectivity functions live on L_1");
}

std::vector<std::string> default_outcome_names(int count) {
  std::vector<std::string> out;
  for (int s = 0; s < count; ++s)
    out.push_back(count <= 26 ? std::string(1, static_cast<char>('a' + s)) : "s" + std::to_string(s));
  return out;
}

}  // namespace lukeff
