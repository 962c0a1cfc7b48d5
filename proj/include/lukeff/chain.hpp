#pragma once

// Exact arithmetic on the finite Lukasiewicz chain L_n = {0, 1/n, ..., 1}.
// Values are stored as integer numerators over the chain denominator n.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "lukeff/error.hpp"

namespace lukeff {

/// Numerator-level MV operations of L_n. No range checks; callers pass
/// values in [0, n].
namespace mv {
constexpr int oplus(int n, int x, int y) { return std::min(x + y, n); }
constexpr int odot(int n, int x, int y) { return std::max(x + y - n, 0); }
constexpr int neg(int n, int x) { return n - x; }
constexpr int implies(int n, int x, int y) { return std::min(n, n - x + y); }
constexpr int iff(int n, int x, int y) { return n - (x > y ? x - y : y - x); }
constexpr int meet(int, int x, int y) { return std::min(x, y); }
constexpr int join(int, int x, int y) { return std::max(x, y); }
constexpr int tau_oplus(int n, int x) { return oplus(n, x, x); }
constexpr int tau_odot(int n, int x) { return odot(n, x, x); }
/// tau_{i/n}: 1 when x >= i/n, else 0.
constexpr int tau_threshold(int n, int i, int x) { return x >= i ? n : 0; }
/// x (.) x (.) ... (.) x, m copies (m >= 1).
constexpr int odot_power(int n, int x, int m) { return std::max(m * x - (m - 1) * n, 0); }
/// x (+) x (+) ... (+) x, m copies (m >= 1).
constexpr int oplus_multiple(int n, int x, int m) { return std::min(m * x, n); }
}  // namespace mv

class Chain {
 public:
  explicit Chain(int n) : n_(n) {
    if (n < 1) fail(Errc::invalid_argument, "chain index n must be positive, got " + std::to_string(n));
  }

  int n() const noexcept { return n_; }
  /// Number of elements, n + 1.
  int size() const noexcept { return n_ + 1; }

  friend bool operator==(Chain, Chain) = default;

 private:
  int n_;
};

class TruthValue {
 public:
  TruthValue(int num, Chain chain) : num_(num), n_(chain.n()) {
    if (num < 0 || num > n_)
      fail(Errc::index_out_of_range,
           "numerator " + std::to_string(num) + " outside [0," + std::to_string(n_) + "]");
  }

  static TruthValue top(Chain c) { return {c.n(), c}; }
  static TruthValue bottom(Chain c) { return {0, c}; }

  int num() const noexcept { return num_; }
  int denominator() const noexcept { return n_; }
  Chain chain() const { return Chain(n_); }
  bool is_top() const noexcept { return num_ == n_; }
  bool is_bottom() const noexcept { return num_ == 0; }

  /// "0", "1" or the reduced fraction, e.g. "1/2" for 2/4.
  std::string to_string() const;

  friend bool operator==(TruthValue, TruthValue) = default;
  /// Throws ChainMismatch when the chains differ.
  friend std::strong_ordering operator<=>(TruthValue a, TruthValue b);

 private:
  int num_;
  int n_;
};

void require_same_chain(TruthValue a, TruthValue b);

TruthValue oplus(TruthValue x, TruthValue y);
TruthValue odot(TruthValue x, TruthValue y);
TruthValue neg(TruthValue x);
TruthValue implies(TruthValue x, TruthValue y);
TruthValue iff(TruthValue x, TruthValue y);
TruthValue meet(TruthValue x, TruthValue y);
TruthValue join(TruthValue x, TruthValue y);

/// tau_{i/n}(x); i must lie in 1..n.
TruthValue tau_threshold(int i, TruthValue x);

enum class TauOp : std::uint8_t { oplus, odot };

/// A composite of the doubling maps x -> x(+)x and x -> x(.)x, applied
/// left to right. The empty term is the identity.
struct TauTerm {
  std::vector<TauOp> ops;

  int apply(int n, int x) const;
  TruthValue apply(TruthValue x) const;
  std::string to_string() const;

  friend bool operator==(const TauTerm&, const TauTerm&) = default;
};

/// Shortest TauTerm whose function table on L_n equals tau_{i/n}. Breadth
/// first over composite tables, so ties resolve towards TauOp::oplus first.
TauTerm synthesize_tau_term(Chain chain, int i);

/// min{a in L_n | a >= r}.
TruthValue ceil_to_chain(boost::rational<std::int64_t> r, Chain chain);

/// Both of Grigolia's identities hold at every x in L_n, for every
/// m in 2..n-1 not dividing n.
bool check_grigolia(Chain chain);

}  // namespace lukeff
