#include "lukeff/effectivity.hpp"

#include <stdexcept>

namespace lukeff {

BoolEffFn boolean_skeleton(const EffFn& e) {
  const FunctionSpace& fs = e.space();
  EffFn h(Chain(1), e.players(), e.outcomes());
  for (std::uint32_t c = 0; c < e.coalitions(); ++c)
    for (std::uint32_t x = 0; x < (1u << fs.outcomes()); ++x) {
      const int v = e.at(c, fs.chi(x));
      if (v != 0 && v != e.n())
        fail(Errc::not_homogeneous, "value " + TruthValue(v, e.chain()).to_string() +
                                        " on an idempotent function; the skeleton is not Boolean");
      h.set(c, x, v == e.n() ? 1 : 0);
    }
  return BoolEffFn(std::move(h));
}

EffFn lift_boolean(const BoolEffFn& h, Chain chain) {
  if (!is_playable(h.table())) fail(Errc::not_playable_input, "only playable Boolean tables are lifted");
  EffFn e(chain, h.players(), h.table().outcomes());
  const FunctionSpace& fs = e.space();
  for (std::uint32_t c = 0; c < e.coalitions(); ++c)
    for (Code f = 0; f < fs.count(); ++f) {
      int v = 0;
      for (int i = chain.n(); i >= 1 && v == 0; --i)
        if (h.effective(c, fs.at_least(i, f))) v = i;
      e.set(c, f, v);
    }

  if (!(boolean_skeleton(e) == h)) throw std::logic_error("lift does not restrict to its Boolean input");
  if (!is_playable(e)) throw std::logic_error("lift of a playable table is not playable");
  if (check_property(h.table(), Property::principal).holds && !check_property(e, Property::principal).holds)
    throw std::logic_error("lift of a truly playable table is not truly playable");
  return e;
}

bool equal_by_skeleton(const EffFn& a, const EffFn& b, bool debug) {
  if (a.n() != b.n()) fail(Errc::chain_mismatch, "tables over different chains");
  if (!check_property(a, Property::homogeneous).holds || !check_property(b, Property::homogeneous).holds)
    fail(Errc::not_homogeneous, "skeleton comparison needs homogeneous tables");
  if (a.players() != b.players() || a.outcome_count() != b.outcome_count()) return false;
  const bool same = boolean_skeleton(a) == boolean_skeleton(b);
  if (debug && same != (a == b)) throw std::logic_error("skeletons and full tables disagree");
  return same;
}

}  // namespace lukeff
