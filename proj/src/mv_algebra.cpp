#include "lukeff/mv_algebra.hpp"

#include <string>

namespace lukeff {

FiniteMVAlgebra::FiniteMVAlgebra(Trusted, int variety_index, std::vector<int> oplus_table,
                                 std::vector<int> neg_table, int zero)
    : size_(static_cast<int>(neg_table.size())),
      variety_index_(variety_index),
      oplus_(std::move(oplus_table)),
      neg_(std::move(neg_table)),
      zero_(zero) {}

FiniteMVAlgebra::FiniteMVAlgebra(int variety_index, std::vector<int> oplus_table, std::vector<int> neg_table,
                                 int zero)
    : size_(static_cast<int>(neg_table.size())),
      variety_index_(variety_index),
      oplus_(std::move(oplus_table)),
      neg_(std::move(neg_table)),
      zero_(zero) {
  const auto bad = [](const std::string& why) { fail(Errc::not_an_algebra, why); };
  if (variety_index_ < 1) bad("variety index must be positive");
  if (size_ == 0) bad("empty carrier");
  if (oplus_.size() != static_cast<std::size_t>(size_) * size_) bad("oplus table has wrong size");
  if (zero_ < 0 || zero_ >= size_) bad("zero outside carrier");
  for (int v : oplus_)
    if (v < 0 || v >= size_) bad("oplus table not closed");
  for (int v : neg_)
    if (v < 0 || v >= size_) bad("negation table not closed");

  const int top = neg(zero_);
  for (int x = 0; x < size_; ++x) {
    if (oplus(x, zero_) != x) bad("0 is not the oplus identity");
    if (neg(neg(x)) != x) bad("negation is not involutive");
    if (oplus(top, x) != top) bad("~0 (+) x != ~0");
    for (int y = 0; y < size_; ++y) {
      if (oplus(x, y) != oplus(y, x)) bad("oplus not commutative");
      if (oplus(neg(oplus(neg(x), y)), y) != oplus(neg(oplus(neg(y), x)), x)) bad("Lukasiewicz axiom fails");
      for (int z = 0; z < size_; ++z)
        if (oplus(oplus(x, y), z) != oplus(x, oplus(y, z))) bad("oplus not associative");
    }
  }
}

FiniteMVAlgebra FiniteMVAlgebra::chain(Chain c) { return power(c, 1); }

FiniteMVAlgebra FiniteMVAlgebra::power(Chain c, int s) {
  const int base = c.size();
  int size = 1;
  for (int j = 0; j < s; ++j) size *= base;
  std::vector<int> op(static_cast<std::size_t>(size) * size), ng(size);
  for (int a = 0; a < size; ++a) {
    int na = 0;
    for (int j = 0, ra = a, w = 1; j < s; ++j, ra /= base, w *= base) na += mv::neg(c.n(), ra % base) * w;
    ng[a] = na;
    for (int b = 0; b < size; ++b) {
      int r = 0;
      for (int j = 0, ra = a, rb = b, w = 1; j < s; ++j, ra /= base, rb /= base, w *= base)
        r += mv::oplus(c.n(), ra % base, rb % base) * w;
      op[static_cast<std::size_t>(a) * size + b] = r;
    }
  }
  return FiniteMVAlgebra(Trusted{}, c.n(), std::move(op), std::move(ng), 0);
}

int FiniteMVAlgebra::odot_power(int a, int m) const {
  int r = a;
  for (int k = 1; k < m; ++k) r = odot(r, a);
  return r;
}

bool is_mv_filter(const MVFilterView& view) {
  const auto& A = view.algebra;
  const auto& F = view.members;
  if (static_cast<int>(F.size()) != A.size()) fail(Errc::invalid_argument, "member set size mismatch");
  if (!F[A.one()]) return false;
  for (int x = 0; x < A.size(); ++x) {
    if (!F[x]) continue;
    for (int y = 0; y < A.size(); ++y) {
      if (F[y] && !F[A.odot(x, y)]) return false;
      if (A.leq(x, y) && !F[y]) return false;
    }
  }
  return true;
}

MVFilterView principal_filter(const FiniteMVAlgebra& algebra, int x) {
  if (x < 0 || x >= algebra.size()) fail(Errc::index_out_of_range, "element outside carrier");
  const int floor = algebra.odot_power(x, algebra.variety_index());
  std::vector<bool> members(algebra.size());
  for (int y = 0; y < algebra.size(); ++y) members[y] = algebra.leq(floor, y);
  return {algebra, std::move(members)};
}

}  // namespace lukeff
