#include "lukeff/semantics.hpp"

#include <algorithm>

#include "lukeff/effectivity.hpp"

namespace lukeff {

Model::Model(Chain chain, int players, std::vector<std::string> states, std::vector<EffFn> eff, Valuation val,
             std::optional<Relation> relation)
    : states_(std::move(states)), eff_(std::move(eff)), val_(std::move(val)), relation_(std::move(relation)) {
  if (states_.empty()) fail(Errc::invalid_argument, "a model needs at least one state");
  if (eff_.size() != states_.size()) fail(Errc::invalid_argument, "one effectivity function per state required");
  for (const EffFn& e : eff_) {
    if (e.n() != chain.n()) fail(Errc::chain_mismatch, "effectivity function over a different chain");
    if (e.players() != players) fail(Errc::unknown_player, "effectivity function over a different player set");
    if (e.outcome_count() != size()) fail(Errc::invalid_argument, "effectivity functions must range over the states");
  }
  for (const auto& [p, values] : val_) {
    if (p < 0) fail(Errc::invalid_argument, "negative proposition id");
    if (static_cast<int>(values.size()) != size()) fail(Errc::invalid_argument, "valuation must cover every state");
    for (int v : values)
      if (v < 0 || v > chain.n()) fail(Errc::index_out_of_range, "valuation value outside L_n");
  }
  if (relation_) {
    if (static_cast<int>(relation_->succ.size()) != size()) fail(Errc::invalid_argument, "relation has wrong size");
    for (std::uint32_t s : relation_->succ)
      if (size() < 32 && (s >> size()) != 0u) fail(Errc::index_out_of_range, "relation leaves the state set");
  }
}

int Model::state_index(std::string_view name) const {
  for (int u = 0; u < size(); ++u)
    if (states_[u] == name) return u;
  fail(Errc::invalid_argument, "no state named '" + std::string(name) + "'");
}

Model Model::with_valuation(Valuation val) const {
  return Model(chain(), players(), states_, eff_, std::move(val), relation_);
}

Model Model::with_relation(std::optional<Relation> relation) const {
  return Model(chain(), players(), states_, eff_, val_, std::move(relation));
}

Evaluator::Evaluator(const Formula& f) : closure_(subformulas(f)) {
  for (const Formula& g : closure_.members)
    if (g.kind() == NodeKind::prop) props_.push_back(g.prop_id());
  std::sort(props_.begin(), props_.end());
  props_.erase(std::unique(props_.begin(), props_.end()), props_.end());

  for (const Formula& g : closure_.members) {
    Step s{g.kind()};
    switch (g.kind()) {
      case NodeKind::top: break;
      case NodeKind::prop:
        s.prop_slot = static_cast<int>(std::lower_bound(props_.begin(), props_.end(), g.prop_id()) - props_.begin());
        break;
      case NodeKind::implies:
        s.a = static_cast<int>(index_of(g.left()));
        s.b = static_cast<int>(index_of(g.right()));
        break;
      case NodeKind::neg:
      case NodeKind::box_o: s.a = static_cast<int>(index_of(g.left())); break;
      case NodeKind::box:
        s.a = static_cast<int>(index_of(g.left()));
        s.coalition = g.coalition().bits();
        s.coalition_players = g.coalition().players();
        break;
    }
    steps_.push_back(s);
  }
  uses_box_o_ = f.uses_box_o();
}

std::size_t Evaluator::index_of(const Formula& g) const {
  for (std::size_t k = 0; k < closure_.members.size(); ++k)
    if (closure_.members[k].node() == g.node()) return k;
  for (std::size_t k = 0; k < closure_.members.size(); ++k)
    if (closure_.members[k] == g) return k;
  fail(Errc::invalid_argument, "not a subformula: " + print(g));
}

void Evaluator::run(const Model& m, std::span<const Code> props, std::vector<Code>& out) const {
  if (props.size() != props_.size()) fail(Errc::invalid_argument, "one value vector per proposition required");
  if (uses_box_o_ && !m.enriched()) fail(Errc::dialect_violation, "[O] needs a model with a relation");
  const FunctionSpace& fs = m.space();
  const int size = m.size();
  out.resize(steps_.size());
  for (std::size_t k = 0; k < steps_.size(); ++k) {
    const Step& s = steps_[k];
    switch (s.kind) {
      case NodeKind::top: out[k] = fs.top(); break;
      case NodeKind::prop: out[k] = props[s.prop_slot]; break;
      case NodeKind::implies: out[k] = fs.implies(out[s.a], out[s.b]); break;
      case NodeKind::neg: out[k] = fs.neg(out[s.a]); break;
      case NodeKind::box: {
        if (s.coalition_players != m.players())
          fail(Errc::unknown_player, "formula coalitions range over " + std::to_string(s.coalition_players) +
                                         " players, the model has " + std::to_string(m.players()));
        Code v = 0;
        for (int u = 0; u < size; ++u) v += static_cast<Code>(m.eff(u).at(s.coalition, out[s.a])) * fs.weight(u);
        out[k] = v;
        break;
      }
      case NodeKind::box_o: {
        const Relation& r = *m.relation();
        Code v = 0;
        for (int u = 0; u < size; ++u) {
          int lo = fs.n();  // min over no successors is 1
          for (int w = 0; w < size; ++w)
            if (r.contains(u, w)) lo = std::min(lo, fs.digit(out[s.a], w));
          v += static_cast<Code>(lo) * fs.weight(u);
        }
        out[k] = v;
        break;
      }
    }
  }
}

Code proposition_vector(const Model& m, int prop) {
  auto it = m.valuation().find(prop);
  if (it == m.valuation().end()) fail(Errc::unknown_proposition, "p" + std::to_string(prop) + " has no valuation");
  return m.space().encode(it->second);
}

std::vector<Code> Evaluator::run(const Model& m) const {
  std::vector<Code> props;
  for (int p : props_) props.push_back(proposition_vector(m, p));
  std::vector<Code> out;
  run(m, props, out);
  return out;
}

std::vector<TruthValue> evaluate(const Model& m, const Formula& f) {
  const Code root = Evaluator(f).run(m).back();
  std::vector<TruthValue> out;
  for (int u = 0; u < m.size(); ++u) out.emplace_back(m.space().digit(root, u), m.chain());
  return out;
}

TruthValue eval(const Model& m, int state, const Formula& f) {
  if (state < 0 || state >= m.size()) fail(Errc::index_out_of_range, "no such state");
  return evaluate(m, f)[state];
}

bool is_true(const Model& m, const Formula& f) {
  return Evaluator(f).run(m).back() == m.space().top();
}

ValidityResult is_valid(const Model& frame, const Formula& f, const std::vector<int>& support, std::uint64_t budget) {
  const Evaluator ev(f);
  const FunctionSpace& fs = frame.space();
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < support.size(); ++k) {
    total *= fs.count();
    if (total > budget) fail(Errc::budget_exceeded, "too many valuations to check validity");
  }

  // Slots of run() that the support controls; the rest are fixed.
  std::vector<Code> props(ev.propositions().size());
  std::vector<int> free_slot;
  for (std::size_t k = 0; k < ev.propositions().size(); ++k) {
    const int p = ev.propositions()[k];
    if (std::find(support.begin(), support.end(), p) != support.end())
      free_slot.push_back(static_cast<int>(k));
    else
      props[k] = proposition_vector(frame, p);
  }

  ValidityResult result;
  std::vector<Code> out;
  std::vector<Code> choice(support.size(), 0);
  for (std::uint64_t t = 0; t < total; ++t) {
    std::uint64_t rest = t;
    for (std::size_t j = 0; j < support.size(); ++j) {
      choice[j] = static_cast<Code>(rest % fs.count());
      rest /= fs.count();
    }
    for (int slot : free_slot) {
      const int p = ev.propositions()[slot];
      props[slot] = choice[std::find(support.begin(), support.end(), p) - support.begin()];
    }
    ev.run(frame, props, out);
    ++result.valuations_checked;
    if (out.back() != fs.top()) {
      result.valid = false;
      Valuation val;
      for (std::size_t j = 0; j < support.size(); ++j) val[support[j]] = fs.decode(choice[j]);
      result.valuation = std::move(val);
      for (int u = 0; u < frame.size(); ++u)
        if (fs.digit(out.back(), u) != fs.n()) {
          result.state = u;
          break;
        }
      return result;
    }
  }
  return result;
}

bool is_playable(const Model& m) {
  return std::all_of(m.effs().begin(), m.effs().end(), [](const EffFn& e) { return lukeff::is_playable(e); });
}

Relation standard_relation(const Model& m) {
  const FunctionSpace& fs = m.space();
  Relation r{std::vector<std::uint32_t>(m.size(), 0)};
  for (int u = 0; u < m.size(); ++u)
    for (int v = 0; v < m.size(); ++v)
      if (m.eff(u).at(0, fs.neg(fs.chi(1u << v))) == 0) r.succ[u] |= 1u << v;
  return r;
}

bool is_standard(const Model& m) { return m.enriched() && *m.relation() == standard_relation(m); }

Model standardize(const Model& m) { return m.with_relation(standard_relation(m)); }

std::string_view to_string(Schema s) {
  switch (s) {
    case Schema::p1: return "P1";
    case Schema::p2: return "P2";
    case Schema::p3: return "P3";
    case Schema::p4: return "P4";
    case Schema::p5: return "P5";
    case Schema::tp6: return "TP6";
    case Schema::tp7: return "TP7";
    case Schema::tp8: return "TP8";
    case Schema::b_family: return "B";
  }
  return "?";
}

std::vector<Formula> schema_instances(Schema s, int players, Chain chain) {
  const Formula p = Formula::prop(1);
  const Formula q = Formula::prop(2);
  const std::uint32_t all = (1u << players) - 1u;
  auto box = [players](std::uint32_t c, Formula f) { return Formula::box(Coalition(c, players), std::move(f)); };
  const Formula none = box(0, p);

  std::vector<Formula> out;
  switch (s) {
    case Schema::p1:
      for (std::uint32_t c = 0; c <= all; ++c)
        out.push_back(Formula::iff(box(c, Formula::odot(p, p)), Formula::odot(box(c, p), box(c, p))));
      break;
    case Schema::p2:
      for (std::uint32_t c = 0; c <= all; ++c)
        out.push_back(Formula::iff(box(c, Formula::oplus(p, p)), Formula::oplus(box(c, p), box(c, p))));
      break;
    case Schema::p3:
      for (std::uint32_t c = 0; c <= all; ++c) out.push_back(Formula::neg(box(c, Formula::bottom())));
      break;
    case Schema::p4:
      for (std::uint32_t c = 0; c <= all; ++c)
        for (std::uint32_t d = 0; d <= all; ++d)
          if ((c & d) == 0)
            out.push_back(
                Formula::implies(Formula::meet(box(c, p), box(d, q)), box(c | d, Formula::meet(p, q))));
      break;
    case Schema::p5: out.push_back(Formula::implies(none, Formula::neg(box(all, Formula::neg(p))))); break;
    case Schema::tp6: out.push_back(Formula::box_o(Formula::top())); break;
    case Schema::tp7: out.push_back(Formula::iff(Formula::box_o(p), none)); break;
    case Schema::tp8:
      out.push_back(Formula::implies(box(0, Formula::implies(p, q)), Formula::implies(none, box(0, q))));
      break;
    case Schema::b_family:
      for (std::uint32_t c = 0; c <= all; ++c)
        for (int i = 1; i <= chain.n(); ++i)
          out.push_back(Formula::iff(box(c, Formula::tau(chain, i, p)), Formula::tau(chain, i, box(c, p))));
      break;
  }
  return out;
}

SchemaResult check_axiom_schema(const Model& m, Schema s, std::uint64_t budget) {
  SchemaResult result;
  for (const Formula& f : schema_instances(s, m.players(), m.chain())) {
    ++result.instances;
    const auto props = propositions(f);
    ValidityResult v = is_valid(m, f, std::vector<int>(props.begin(), props.end()), budget);
    if (!v.valid) {
      result.holds = false;
      result.instance = f;
      result.failure = std::move(v);
      return result;
    }
  }
  return result;
}

}  // namespace lukeff
