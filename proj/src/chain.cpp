#include "lukeff/chain.hpp"

#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

namespace lukeff {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::chain_mismatch: return "ChainMismatch";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::out_of_unit_interval: return "OutOfUnitInterval";
    case Errc::not_an_algebra: return "NotAnAlgebra";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::unknown_player: return "UnknownPlayer";
    case Errc::dialect_violation: return "DialectViolation";
    case Errc::unknown_proposition: return "UnknownProposition";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::empty_profile_set: return "EmptyProfileSet";
    case Errc::not_playable_input: return "NotPlayableInput";
    case Errc::not_homogeneous: return "NotHomogeneous";
    case Errc::not_truly_playable: return "NotTrulyPlayable";
    case Errc::synthesis_budget_exceeded: return "SynthesisBudgetExceeded";
    case Errc::not_playable: return "NotPlayable";
    case Errc::not_standard: return "NotStandard";
    case Errc::premise_violated: return "PremiseViolated";
    case Errc::bad_document: return "BadDocument";
  }
  return "Unknown";
}

std::string TruthValue::to_string() const {
  if (num_ == 0) return "0";
  if (num_ == n_) return "1";
  const int g = std::gcd(num_, n_);
  return std::to_string(num_ / g) + "/" + std::to_string(n_ / g);
}

void require_same_chain(TruthValue a, TruthValue b) {
  if (a.denominator() != b.denominator())
    fail(Errc::chain_mismatch, "values from L_" + std::to_string(a.denominator()) + " and L_" +
                                   std::to_string(b.denominator()));
}

std::strong_ordering operator<=>(TruthValue a, TruthValue b) {
  require_same_chain(a, b);
  return a.num_ <=> b.num_;
}

namespace {
template <typename Op>
TruthValue binary(TruthValue x, TruthValue y, Op op) {
  require_same_chain(x, y);
  const int n = x.denominator();
  return {op(n, x.num(), y.num()), Chain(n)};
}
}  // namespace

TruthValue oplus(TruthValue x, TruthValue y) { return binary(x, y, mv::oplus); }
TruthValue odot(TruthValue x, TruthValue y) { return binary(x, y, mv::odot); }
TruthValue implies(TruthValue x, TruthValue y) { return binary(x, y, mv::implies); }
TruthValue iff(TruthValue x, TruthValue y) { return binary(x, y, mv::iff); }
TruthValue meet(TruthValue x, TruthValue y) { return binary(x, y, mv::meet); }
TruthValue join(TruthValue x, TruthValue y) { return binary(x, y, mv::join); }
TruthValue neg(TruthValue x) { return {mv::neg(x.denominator(), x.num()), x.chain()}; }

TruthValue tau_threshold(int i, TruthValue x) {
  const int n = x.denominator();
  if (i < 1 || i > n)
    fail(Errc::index_out_of_range, "threshold index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  return {mv::tau_threshold(n, i, x.num()), x.chain()};
}

int TauTerm::apply(int n, int x) const {
  for (TauOp op : ops) x = op == TauOp::oplus ? mv::tau_oplus(n, x) : mv::tau_odot(n, x);
  return x;
}

TruthValue TauTerm::apply(TruthValue x) const { return {apply(x.denominator(), x.num()), x.chain()}; }

std::string TauTerm::to_string() const {
  if (ops.empty()) return "id";
  std::string out;
  for (std::size_t k = 0; k < ops.size(); ++k) {
    if (k) out += " ; ";
    out += ops[k] == TauOp::oplus ? "tau+" : "tau.";
  }
  return out;
}

TauTerm synthesize_tau_term(Chain chain, int i) {
  const int n = chain.n();
  if (i < 1 || i > n)
    fail(Errc::index_out_of_range, "threshold index " + std::to_string(i) + " outside 1.." + std::to_string(n));

  using Table = std::vector<int>;
  Table identity(n + 1), target(n + 1);
  for (int x = 0; x <= n; ++x) {
    identity[x] = x;
    target[x] = mv::tau_threshold(n, i, x);
  }

  // Parent links keyed by the composite table reached so far.
  std::map<Table, std::pair<Table, TauOp>> parent;
  std::deque<Table> frontier{identity};
  parent.emplace(identity, std::pair{Table{}, TauOp::oplus});

  while (!frontier.empty()) {
    Table current = std::move(frontier.front());
    frontier.pop_front();
    if (current == target) {
      TauTerm term;
      while (current != identity) {
        const auto& [prev, op] = parent.at(current);
        term.ops.push_back(op);
        current = prev;
      }
      std::reverse(term.ops.begin(), term.ops.end());
      return term;
    }
    for (TauOp op : {TauOp::oplus, TauOp::odot}) {
      Table next(current.size());
      for (int x = 0; x <= n; ++x)
        next[x] = op == TauOp::oplus ? mv::tau_oplus(n, current[x]) : mv::tau_odot(n, current[x]);
      if (parent.emplace(next, std::pair{current, op}).second) frontier.push_back(std::move(next));
    }
  }
  throw std::logic_error("no tau term reaches threshold " + std::to_string(i) + "/" + std::to_string(n));
}

TruthValue ceil_to_chain(boost::rational<std::int64_t> r, Chain chain) {
  if (r < 0 || r > 1) fail(Errc::out_of_unit_interval, "value outside [0,1]");
  // smallest k with k/n >= p/q, i.e. k = ceil(p*n/q)
  const std::int64_t p = r.numerator() * chain.n();
  const std::int64_t q = r.denominator();
  return {static_cast<int>((p + q - 1) / q), chain};
}

bool check_grigolia(Chain chain) {
  const int n = chain.n();
  for (int x = 0; x <= n; ++x) {
    if (mv::odot_power(n, x, n) != mv::odot_power(n, x, n + 1)) return false;
    for (int m = 2; m <= n - 1; ++m) {
      if (n % m == 0) continue;
      const int lhs = mv::oplus_multiple(n, mv::odot_power(n, x, m), n + 1);
      const int rhs = mv::odot_power(n, mv::oplus_multiple(n, mv::odot_power(n, x, m - 1), m), n + 1);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

}  // namespace lukeff
