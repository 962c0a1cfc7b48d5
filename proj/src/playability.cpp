#include <vector>

#include "lukeff/effectivity.hpp"

namespace lukeff {

std::string_view to_string(Property p) {
  switch (p) {
    case Property::outcome_monotonic: return "outcome_monotonic";
    case Property::n_maximal: return "N_maximal";
    case Property::regular: return "regular";
    case Property::superadditive: return "superadditive";
    case Property::coalition_monotonic: return "coalition_monotonic";
    case Property::homogeneous: return "homogeneous";
    case Property::liveness: return "liveness";
    case Property::safety: return "safety";
    case Property::principal: return "principal";
    case Property::semi_playable: return "semi_playable";
    case Property::playable: return "playable";
    case Property::truly_playable: return "truly_playable";
  }
  return "unknown";
}

std::optional<Property> property_from_string(std::string_view name) {
  for (Property p : kAllProperties)
    if (to_string(p) == name) return p;
  return std::nullopt;
}

namespace {

using Result = std::optional<Witness>;

Witness cell(std::uint32_t c, Code f) { return {c, f, std::nullopt, std::nullopt}; }

// Monotone along covering pairs f < f + e_s, for coalitions accepted by `which`.
template <typename Pred>
Result monotone(const EffFn& e, Pred which) {
  const FunctionSpace& fs = e.space();
  for (std::uint32_t c = 0; c < e.coalitions(); ++c) {
    if (!which(c)) continue;
    for (Code f = 0; f < fs.count(); ++f)
      for (int s = 0; s < fs.outcomes(); ++s) {
        if (fs.digit(f, s) == fs.n()) continue;
        const Code up = f + fs.weight(s);
        if (e.at(c, f) > e.at(c, up)) return Witness{c, f, c, up};
      }
  }
  return std::nullopt;
}

Result n_maximal(const EffFn& e) {
  const FunctionSpace& fs = e.space();
  for (Code f = 0; f < fs.count(); ++f)
    if (e.n() - e.at(0, fs.neg(f)) > e.at(e.grand(), f)) return cell(e.grand(), f);
  return std::nullopt;
}

Result regular(const EffFn& e) {
  const FunctionSpace& fs = e.space();
  for (std::uint32_t c = 0; c < e.coalitions(); ++c)
    for (Code f = 0; f < fs.count(); ++f)
      if (e.at(c, f) > e.n() - e.at(e.grand() & ~c, fs.neg(f))) return cell(c, f);
  return std::nullopt;
}

template <typename Pred>
Result superadditive(const EffFn& e, Pred which) {
  const FunctionSpace& fs = e.space();
  for (std::uint32_t c1 = 0; c1 < e.coalitions(); ++c1)
    for (std::uint32_t c2 = c1; c2 < e.coalitions(); ++c2) {
      if ((c1 & c2) != 0 || !which(c1 | c2)) continue;
      const std::uint32_t u = c1 | c2;
      for (Code f = 0; f < fs.count(); ++f) {
        const int ef = e.at(c1, f);
        if (ef == 0) continue;
        for (Code g = 0; g < fs.count(); ++g) {
          const int lo = std::min(ef, e.at(c2, g));
          if (lo > 0 && lo > e.at(u, fs.meet(f, g))) return Witness{c1, f, c2, g};
        }
      }
    }
  return std::nullopt;
}

Result coalition_monotonic(const EffFn& e) {
  const FunctionSpace& fs = e.space();
  for (std::uint32_t c = 0; c < e.coalitions(); ++c)
    for (int i = 0; i < e.players(); ++i) {
      const std::uint32_t d = c | (1u << i);
      if (d == c) continue;
      for (Code f = 0; f < fs.count(); ++f)
        if (e.at(c, f) > e.at(d, f)) return Witness{c, f, d, f};
    }
  return std::nullopt;
}

Result homogeneous(const EffFn& e) {
  const FunctionSpace& fs = e.space();
  const int n = e.n();
  for (std::uint32_t c = 0; c < e.coalitions(); ++c)
    for (Code f = 0; f < fs.count(); ++f) {
      const int v = e.at(c, f);
      if (e.at(c, fs.tau_oplus(f)) != mv::tau_oplus(n, v)) return Witness{c, f, c, fs.tau_oplus(f)};
      if (e.at(c, fs.tau_odot(f)) != mv::tau_odot(n, v)) return Witness{c, f, c, fs.tau_odot(f)};
    }
  return std::nullopt;
}

template <typename Pred>
Result liveness(const EffFn& e, Pred which) {
  const Code one = e.space().top();
  for (std::uint32_t c = 0; c < e.coalitions(); ++c)
    if (which(c) && e.at(c, one) != e.n()) return cell(c, one);
  return std::nullopt;
}

template <typename Pred>
Result safety(const EffFn& e, Pred which) {
  for (std::uint32_t c = 0; c < e.coalitions(); ++c)
    if (which(c) && e.at(c, 0) != 0) return cell(c, 0);
  return std::nullopt;
}

// Some g has E(0,-)^{-1}(1) = {f | f >= g^n}. Every g is tried; g^n is
// idempotent, so distinct candidates are few and are checked once each.
Result principal(const EffFn& e) {
  const FunctionSpace& fs = e.space();
  const int n = e.n();
  std::vector<bool> in_filter(fs.count());
  for (Code f = 0; f < fs.count(); ++f) in_filter[f] = e.at(0, f) == n;

  std::vector<bool> tried(std::size_t{1} << fs.outcomes());
  for (Code g = 0; g < fs.count(); ++g) {
    Code floor = g;
    for (int k = 1; k < n; ++k) floor = fs.odot(floor, g);
    const std::uint32_t mask = fs.ones(floor);
    if (tried[mask]) continue;
    tried[mask] = true;
    bool match = true;
    for (Code f = 0; f < fs.count() && match; ++f) match = in_filter[f] == fs.leq(floor, f);
    if (match) return std::nullopt;
  }
  // Report the smallest filter member, if any, as the offending cell.
  for (Code f = 0; f < fs.count(); ++f)
    if (in_filter[f]) return cell(0, f);
  return cell(0, fs.top());
}

bool all(std::uint32_t) { return true; }

Result first_failure(std::initializer_list<std::function<Result()>> checks) {
  for (const auto& check : checks)
    if (auto w = check()) return w;
  return std::nullopt;
}

Result compute(const EffFn& e, Property p) {
  const std::uint32_t grand = e.grand();
  auto proper = [grand](std::uint32_t c) { return c != grand; };
  switch (p) {
    case Property::outcome_monotonic: return monotone(e, all);
    case Property::n_maximal: return n_maximal(e);
    case Property::regular: return regular(e);
    case Property::superadditive: return superadditive(e, all);
    case Property::coalition_monotonic: return coalition_monotonic(e);
    case Property::homogeneous: return homogeneous(e);
    case Property::liveness: return liveness(e, all);
    case Property::safety: return safety(e, all);
    case Property::principal: return principal(e);
    case Property::semi_playable:
      return first_failure({[&] { return monotone(e, proper); }, [&] { return liveness(e, proper); },
                            [&] { return safety(e, proper); }, [&] { return superadditive(e, proper); }});
    case Property::playable:
      return first_failure({[&] { return liveness(e, all); }, [&] { return safety(e, all); },
                            [&] { return monotone(e, all); }, [&] { return homogeneous(e); },
                            [&] { return n_maximal(e); }, [&] { return superadditive(e, all); }});
    case Property::truly_playable:
      return first_failure({[&] { return compute(e, Property::playable); }, [&] { return principal(e); }});
  }
  return std::nullopt;
}

}  // namespace

PropertyResult check_property(const EffFn& e, Property p) {
  Result w = compute(e, p);
  return {p, !w.has_value(), w};
}

PlayabilityReport check_playability(const EffFn& e) {
  PlayabilityReport report;
  for (std::size_t k = 0; k < kAllProperties.size(); ++k) report.results[k] = check_property(e, kAllProperties[k]);
  return report;
}

}  // namespace lukeff
