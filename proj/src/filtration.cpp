#include "lukeff/filtration.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "lukeff/effectivity.hpp"

namespace lukeff {

std::string_view to_string(Stage s) {
  switch (s) {
    case Stage::intermediate: return "intermediate";
    case Stage::playable: return "playable";
    case Stage::enriched: return "enriched";
  }
  return "?";
}

Quotient quotient(const Model& m, const Formula& mu) {
  const std::vector<Code> values = Evaluator(mu).run(m);
  const FunctionSpace& fs = m.space();
  Quotient q;
  std::map<std::vector<int>, int> index;
  for (int u = 0; u < m.size(); ++u) {
    std::vector<int> signature;
    for (Code v : values) signature.push_back(fs.digit(v, u));
    auto [it, fresh] = index.emplace(std::move(signature), q.size());
    if (fresh) q.representative.push_back(u);
    q.class_of.push_back(it->second);
  }
  return q;
}

namespace {

struct Context {
  const Model& m;
  Formula mu;
  Quotient q;
  FunctionSpace classes;
  std::vector<Code> definable;
  std::vector<Code> lifted;  // definable[k] as a vector over the states
  std::vector<Code> sub_values;

  Context(const Model& model, const Formula& f)
      : m(model), mu(f), q(quotient(model, f)), classes(model.chain(), q.size()) {
    definable = definable_closure(model, f, q);
    for (Code d : definable) lifted.push_back(lift(d));
    sub_values = Evaluator(f).run(model);
  }

  Code lift(Code d) const {
    const FunctionSpace& fs = m.space();
    Code out = 0;
    for (int u = 0; u < m.size(); ++u) out += static_cast<Code>(classes.digit(d, q.class_of[u])) * fs.weight(u);
    return out;
  }

  std::vector<std::string> class_names() const {
    std::vector<std::string> out;
    for (int r : q.representative) out.push_back("|" + m.states()[r] + "|");
    return out;
  }

  Valuation filtered_valuation() const {
    const auto mine = propositions(mu);
    Valuation out;
    for (const auto& [p, values] : m.valuation()) {
      std::vector<int> column(q.size(), 0);
      if (mine.count(p))
        for (int c = 0; c < q.size(); ++c) column[c] = values[q.representative[c]];
      out[p] = std::move(column);
    }
    return out;
  }
};

[[noreturn]] void broken(const std::string& what) { throw std::logic_error("filtration invariant: " + what); }

EffFn star_table(const Context& cx, int cls) {
  const EffFn& e = cx.m.eff(cx.q.representative[cls]);
  EffFn star(cx.m.chain(), cx.m.players(), cx.class_names());
  const FunctionSpace& fs = cx.classes;
  for (std::uint32_t c = 0; c < star.coalitions(); ++c) {
    if (c == star.grand()) continue;
    for (Code f = 0; f < fs.count(); ++f) {
      int best = 0;  // empty max
      for (std::size_t k = 0; k < cx.definable.size(); ++k)
        if (fs.leq(cx.definable[k], f)) best = std::max(best, e.at(c, cx.lifted[k]));
      star.set(c, f, best);
    }
  }
  for (Code f = 0; f < fs.count(); ++f) star.set(star.grand(), f, fs.n() - star.at(0, fs.neg(f)));
  return star;
}

// E' agrees with E(rep) on every definable vector.
void check_agreement(const Context& cx, const std::vector<EffFn>& tables) {
  for (int cls = 0; cls < cx.q.size(); ++cls) {
    const EffFn& e = cx.m.eff(cx.q.representative[cls]);
    for (std::uint32_t c = 0; c < e.coalitions(); ++c)
      for (std::size_t k = 0; k < cx.definable.size(); ++k)
        if (tables[cls].at(c, cx.definable[k]) != e.at(c, cx.lifted[k]))
          broken("filtered table disagrees with the source on a definable vector");
  }
}

void check_truth_lemma(const Context& cx, const Model& filtered) {
  const std::vector<Code> after = Evaluator(cx.mu).run(filtered);
  for (std::size_t k = 0; k < after.size(); ++k)
    for (int u = 0; u < cx.m.size(); ++u)
      if (cx.m.space().digit(cx.sub_values[k], u) != cx.classes.digit(after[k], cx.q.class_of[u]))
        broken("value of a subformula changed at state " + cx.m.states()[u]);
}

void require_playable(const Model& m) {
  if (!is_playable(m)) fail(Errc::not_playable, "filtrations are defined for playable models");
}

std::vector<EffFn> plus_tables(const Context& cx) {
  std::vector<EffFn> out;
  for (int cls = 0; cls < cx.q.size(); ++cls) {
    const EffFn star = star_table(cx, cls);
    const BoolEffFn skeleton = boolean_skeleton(star);
    if (!is_playable(skeleton.table())) broken("skeleton of E* is not playable");
    out.push_back(lift_boolean(skeleton, cx.m.chain()));
  }
  return out;
}

}  // namespace

std::vector<Code> definable_closure(const Model& m, const Formula& mu, const Quotient& q) {
  const FunctionSpace classes(m.chain(), q.size());
  std::vector<bool> member(classes.count(), false);
  std::vector<Code> found;
  auto add = [&](Code d) {
    if (member[d]) return;
    member[d] = true;
    found.push_back(d);
  };
  for (Code v : Evaluator(mu).run(m)) {
    Code d = 0;
    for (int c = 0; c < q.size(); ++c) d += static_cast<Code>(m.space().digit(v, q.representative[c])) * classes.weight(c);
    add(d);
  }
  for (std::size_t next = 0; next < found.size(); ++next) {
    const Code d = found[next];
    add(classes.neg(d));
    add(classes.tau_oplus(d));
    add(classes.tau_odot(d));
    for (std::size_t k = 0; k <= next; ++k) {
      add(classes.implies(d, found[k]));
      add(classes.implies(found[k], d));
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

FiltrationResult intermediate_filtration(const Model& m, const Formula& mu) {
  require_playable(m);
  const Context cx(m, mu);
  std::vector<EffFn> tables;
  for (int cls = 0; cls < cx.q.size(); ++cls) {
    tables.push_back(star_table(cx, cls));
    if (!is_playable(boolean_skeleton(tables.back()).table())) broken("skeleton of E* is not playable");
  }
  check_agreement(cx, tables);
  Model filtered(m.chain(), m.players(), cx.class_names(), std::move(tables), cx.filtered_valuation());
  return {cx.q, std::move(filtered), Stage::intermediate};
}

FiltrationResult playable_filtration(const Model& m, const Formula& mu) {
  if (mu.uses_box_o()) fail(Errc::dialect_violation, "formulas with [O] need the enriched filtration");
  require_playable(m);
  const Context cx(m, mu);
  std::vector<EffFn> tables = plus_tables(cx);
  check_agreement(cx, tables);
  Model filtered(m.chain(), m.players(), cx.class_names(), std::move(tables), cx.filtered_valuation());
  if (!is_playable(filtered)) broken("E+ is not playable");
  check_truth_lemma(cx, filtered);
  return {cx.q, std::move(filtered), Stage::playable};
}

FiltrationResult enriched_filtration(const Model& m, const Formula& mu) {
  if (!m.enriched() || !is_standard(m)) fail(Errc::not_standard, "the enriched filtration needs a standard model");
  require_playable(m);
  const Context cx(m, mu);
  const FunctionSpace& fs = m.space();
  const Relation& r = *m.relation();

  auto box_o = [&](int u, Code f) {
    int lo = fs.n();
    for (int v = 0; v < m.size(); ++v)
      if (r.contains(u, v)) lo = std::min(lo, fs.digit(f, v));
    return lo;
  };
  for (Code d : cx.lifted)
    for (int u = 0; u < m.size(); ++u) {
      const int v = box_o(u, d);
      if (box_o(u, fs.tau_oplus(d)) != mv::tau_oplus(fs.n(), v) || box_o(u, fs.tau_odot(d)) != mv::tau_odot(fs.n(), v))
        fail(Errc::premise_violated, "[O] does not commute with the doubling maps");
    }

  std::vector<EffFn> tables = plus_tables(cx);
  check_agreement(cx, tables);

  Relation star{std::vector<std::uint32_t>(cx.q.size(), 0)};
  for (int a = 0; a < cx.q.size(); ++a)
    for (int b = 0; b < cx.q.size(); ++b) {
      bool ok = true;
      for (std::size_t k = 0; k < cx.definable.size() && ok; ++k)
        if (box_o(cx.q.representative[a], cx.lifted[k]) == fs.n() && cx.classes.digit(cx.definable[k], b) != fs.n())
          ok = false;
      if (ok) star.succ[a] |= 1u << b;
    }

  for (int u : cx.q.representative)
    for (int v = 0; v < m.size(); ++v)
      if (r.contains(u, v) && !star.contains(cx.q.class_of[u], cx.q.class_of[v])) broken("R-edge lost in R*");

  const Evaluator ev(mu);
  for (std::size_t k = 0; k < ev.closure().members.size(); ++k) {
    const Formula& g = ev.closure().members[k];
    if (g.kind() != NodeKind::box_o) continue;
    const Code inner = cx.sub_values[ev.index_of(g.left())];
    for (int u = 0; u < m.size(); ++u) {
      if (fs.digit(cx.sub_values[k], u) != fs.n()) continue;
      for (int b = 0; b < cx.q.size(); ++b)
        if (star.contains(cx.q.class_of[u], b) && fs.digit(inner, cx.q.representative[b]) != fs.n())
          broken("R* reaches a class where a boxed subformula fails");
    }
  }

  Model filtered(m.chain(), m.players(), cx.class_names(), std::move(tables), cx.filtered_valuation(), star);
  if (!is_playable(filtered)) broken("E+ is not playable");
  if (!is_standard(filtered)) broken("filtered model is not standard");
  check_truth_lemma(cx, filtered);
  return {cx.q, std::move(filtered), Stage::enriched};
}

}  // namespace lukeff
