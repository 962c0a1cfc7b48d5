#pragma once

// Finite MV-algebras given by explicit operation tables, and their filters.

#include <cstddef>
#include <vector>

#include "lukeff/chain.hpp"

namespace lukeff {

class FiniteMVAlgebra {
 public:
  /// Validates closure of the tables and the MV axioms; throws NotAnAlgebra.
  /// `variety_index` is the n for which the algebra lies in MV_n; it fixes the
  /// exponent of principal filters.
  FiniteMVAlgebra(int variety_index, std::vector<int> oplus_table, std::vector<int> neg_table, int zero);

  /// L_n itself; element k stands for k/n.
  static FiniteMVAlgebra chain(Chain c);
  /// L_n^s with pointwise operations; elements are base-(n+1) codes with
  /// coordinate 0 least significant.
  static FiniteMVAlgebra power(Chain c, int s);

  int size() const noexcept { return size_; }
  int variety_index() const noexcept { return variety_index_; }
  int zero() const noexcept { return zero_; }
  int one() const { return neg(zero_); }

  int oplus(int a, int b) const { return oplus_[static_cast<std::size_t>(a) * size_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int odot(int a, int b) const { return neg(oplus(neg(a), neg(b))); }
  int implies(int a, int b) const { return oplus(neg(a), b); }
  int join(int a, int b) const { return oplus(neg(oplus(neg(a), b)), b); }
  int meet(int a, int b) const { return neg(join(neg(a), neg(b))); }
  bool leq(int a, int b) const { return implies(a, b) == one(); }
  /// a (.) a (.) ... (.) a with m copies, m >= 1.
  int odot_power(int a, int m) const;

 private:
  struct Trusted {};
  FiniteMVAlgebra(Trusted, int variety_index, std::vector<int> oplus_table, std::vector<int> neg_table, int zero);

  int size_;
  int variety_index_;
  std::vector<int> oplus_;
  std::vector<int> neg_;
  int zero_;
};

struct MVFilterView {
  FiniteMVAlgebra algebra;
  std::vector<bool> members;
};

/// 1 in F, F closed under (.), F upward closed.
bool is_mv_filter(const MVFilterView& view);

/// {y | y >= x^n} where n is the algebra's variety index.
MVFilterView principal_filter(const FiniteMVAlgebra& algebra, int x);

}  // namespace lukeff
