#pragma once

// Brute-force reference implementations, written straight from the
// definitions and sharing no code paths with the library beyond plain table
// lookup. Slow on purpose.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include <boost/rational.hpp>

#include "lukeff/eff_fn.hpp"
#include "lukeff/game_form.hpp"
#include "lukeff/semantics.hpp"

namespace oracle {

using Q = boost::rational<int>;
using Vec = std::vector<int>;

inline Q one() { return Q(1); }
inline Q oplus(Q x, Q y) { return std::min(one(), x + y); }
inline Q neg(Q x) { return one() - x; }
inline Q odot(Q x, Q y) { return std::max(Q(0), x + y - one()); }
inline Q implies(Q x, Q y) { return std::min(one(), one() - x + y); }

inline std::vector<Q> chain(int n) {
  std::vector<Q> out;
  for (int k = 0; k <= n; ++k) out.emplace_back(k, n);
  return out;
}

// Every f : S -> {0..n}, in base-(n+1) order with outcome 0 fastest.
inline std::vector<Vec> all_vectors(int n, int s) {
  std::vector<Vec> out;
  Vec f(s, 0);
  for (;;) {
    out.push_back(f);
    int i = 0;
    while (i < s && f[i] == n) f[i++] = 0;
    if (i == s) return out;
    ++f[i];
  }
}

inline std::uint32_t index(int n, const Vec& f) {
  std::uint32_t code = 0;
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) code = code * (n + 1) + f[i];
  return code;
}

inline int E(const lukeff::EffFn& e, std::uint32_t c, const Vec& f) { return e.at(c, index(e.n(), f)); }

inline bool leq(const Vec& f, const Vec& g) {
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] > g[i]) return false;
  return true;
}

template <class Op>
Vec pointwise(const Vec& f, const Vec& g, Op op) {
  Vec out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = op(f[i], g[i]);
  return out;
}

struct Props {
  bool outcome_monotonic = true, n_maximal = true, regular = true, superadditive = true,
       coalition_monotonic = true, homogeneous = true, liveness = true, safety = true, principal = false,
       semi_playable = true;

  bool playable() const {
    return outcome_monotonic && n_maximal && superadditive && homogeneous && liveness && safety;
  }
  bool truly_playable() const { return playable() && principal; }
};

inline Props properties(const lukeff::EffFn& e) {
  const int n = e.n();
  const std::uint32_t grand = e.grand();
  const auto fs = all_vectors(n, e.outcome_count());
  auto nf = [&](const Vec& f) { return pointwise(f, f, [n](int x, int) { return n - x; }); };
  const Vec zero(e.outcome_count(), 0), top(e.outcome_count(), n);
  Props p;
  for (std::uint32_t c = 0; c <= grand; ++c) {
    const bool proper = c != grand;
    if (E(e, c, top) != n) p.liveness = false, p.semi_playable &= !proper;
    if (E(e, c, zero) != 0) p.safety = false, p.semi_playable &= !proper;
    for (const Vec& f : fs) {
      for (const Vec& g : fs)
        if (leq(g, f) && E(e, c, f) < E(e, c, g)) p.outcome_monotonic = false, p.semi_playable &= !proper;
      const int v = E(e, c, f);
      const Vec f2 = pointwise(f, f, [n](int x, int y) { return std::min(n, x + y); });
      const Vec f0 = pointwise(f, f, [n](int x, int y) { return std::max(0, x + y - n); });
      if (E(e, c, f2) != std::min(n, 2 * v) || E(e, c, f0) != std::max(0, 2 * v - n)) p.homogeneous = false;
      if (v > n - E(e, grand & ~c, nf(f))) p.regular = false;
      for (std::uint32_t d = 0; d <= grand; ++d)
        if ((c & d) == c && v > E(e, d, f)) p.coalition_monotonic = false;
    }
  }
  for (const Vec& f : fs)
    if (n - E(e, 0, nf(f)) > E(e, grand, f)) p.n_maximal = false;
  for (std::uint32_t c1 = 0; c1 <= grand; ++c1)
    for (std::uint32_t c2 = 0; c2 <= grand; ++c2) {
      if (c1 & c2) continue;
      for (const Vec& f : fs)
        for (const Vec& g : fs) {
          const Vec m = pointwise(f, g, [](int x, int y) { return std::min(x, y); });
          if (std::min(E(e, c1, f), E(e, c2, g)) > E(e, c1 | c2, m)) {
            p.superadditive = false;
            if ((c1 | c2) != grand) p.semi_playable = false;
          }
        }
    }
  for (const Vec& g : fs) {
    Vec power = g;  // g (.) g (.) ... n copies
    for (int k = 1; k < n; ++k) power = pointwise(power, g, [n](int x, int y) { return std::max(0, x + y - n); });
    bool same = true;
    for (const Vec& f : fs) same &= (E(e, 0, f) == n) == leq(power, f);
    if (same) {
      p.principal = true;
      break;
    }
  }
  return p;
}

inline std::vector<std::vector<int>> profiles(const lukeff::GameForm& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> sigma(g.players(), 0);
  for (;;) {
    out.push_back(sigma);
    int i = g.players() - 1;
    while (i >= 0 && sigma[i] == g.strategies()[i] - 1) sigma[i--] = 0;
    if (i < 0) return out;
    ++sigma[i];
  }
}

// max over sigma_C of min over the rest of f(o(sigma)).
inline int game_effectivity(const lukeff::GameForm& g, std::uint32_t c, const Vec& f) {
  std::map<std::vector<int>, int> worst;
  const auto all = profiles(g);
  for (std::size_t k = 0; k < all.size(); ++k) {
    std::vector<int> key;
    for (int i = 0; i < g.players(); ++i) key.push_back((c >> i) & 1u ? all[k][i] : -1);
    const int v = f[g.outcome(k)];
    auto [it, fresh] = worst.emplace(key, v);
    if (!fresh) it->second = std::min(it->second, v);
  }
  int best = 0;
  for (const auto& [key, v] : worst) best = std::max(best, v);
  return best;
}

inline int lift(const lukeff::BoolEffFn& h, int n, std::uint32_t c, const Vec& f) {
  int best = 0;
  for (int i = 1; i <= n; ++i) {
    std::uint32_t x = 0;
    for (std::size_t s = 0; s < f.size(); ++s)
      if (f[s] >= i) x |= 1u << s;
    if (h.effective(c, x)) best = i;
  }
  return best;
}

// Straight recursion over the formula tree, recomputing everything.
inline int value(const lukeff::Model& m, int u, const lukeff::Formula& f) {
  using lukeff::NodeKind;
  const int n = m.n();
  switch (f.kind()) {
    case NodeKind::top: return n;
    case NodeKind::prop: {
      const auto it = m.valuation().find(f.prop_id());
      return it == m.valuation().end() ? 0 : it->second[u];
    }
    case NodeKind::neg: return n - value(m, u, f.left());
    case NodeKind::implies: return std::min(n, n - value(m, u, f.left()) + value(m, u, f.right()));
    case NodeKind::box: {
      Vec v(m.size());
      for (int w = 0; w < m.size(); ++w) v[w] = value(m, w, f.left());
      return E(m.eff(u), f.coalition().bits(), v);
    }
    case NodeKind::box_o: {
      int lo = n;
      for (int w = 0; w < m.size(); ++w)
        if (m.relation()->contains(u, w)) lo = std::min(lo, value(m, w, f.left()));
      return lo;
    }
  }
  return -1;
}

}  // namespace oracle
