#include "lukeff/decision.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <boost/dynamic_bitset.hpp>

#include "lukeff/effectivity.hpp"
#include "lukeff/generators.hpp"

namespace lukeff {

std::string_view to_string(Logic l) { return l == Logic::Pn ? "Pn" : "TPn"; }

std::string_view to_string(SearchStrategy s) {
  switch (s) {
    case SearchStrategy::exhaustive: return "exhaustive";
    case SearchStrategy::enumerate: return "enumerate";
    case SearchStrategy::randomized: return "randomized";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::countermodel_found: return "CountermodelFound";
    case Verdict::no_countermodel_up_to_bound: return "NoCountermodelUpToBound";
    case Verdict::theorem_by_filtration_bound: return "TheoremByFiltrationBound";
  }
  return "?";
}

std::uint64_t filtration_bound(const Formula& f, Chain chain) {
  const std::size_t subs = subformulas(f).members.size();
  std::uint64_t bound = 1;
  for (std::size_t k = 0; k < subs; ++k) {
    if (bound > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(chain.size()))
      return std::numeric_limits<std::uint64_t>::max();
    bound *= static_cast<std::uint64_t>(chain.size());
  }
  return bound;
}

namespace {

using Bits = boost::dynamic_bitset<>;

// On standard playable frames R(u) is the range set Z of E(u)(0, -), and
// both [O]psi and [0]psi evaluate to the minimum of psi over it.
Formula box_o_as_empty_box(const Formula& f, int players) {
  std::map<const FormulaNode*, Formula> memo;
  std::function<Formula(const Formula&)> go = [&](const Formula& g) -> Formula {
    if (auto it = memo.find(g.node()); it != memo.end()) return it->second;
    Formula r = g;
    switch (g.kind()) {
      case NodeKind::top:
      case NodeKind::prop: break;
      case NodeKind::neg: r = Formula::neg(go(g.left())); break;
      case NodeKind::implies: r = Formula::implies(go(g.left()), go(g.right())); break;
      case NodeKind::box: r = Formula::box(g.coalition(), go(g.left())); break;
      case NodeKind::box_o: r = Formula::box(Coalition::empty(players), go(g.left())); break;
    }
    memo.emplace(g.node(), r);
    return r;
  };
  return go(f);
}

void check_players(const Formula& f, int players) {
  for (const Formula& g : subformulas(f).members)
    if (g.kind() == NodeKind::box && g.coalition().players() != players)
      fail(Errc::unknown_player, "formula coalitions range over " + std::to_string(g.coalition().players()) +
                                     " players, the search over " + std::to_string(players));
}

// Positive and negative Boolean requirements H(C, X) = 1 / 0 for one state.
struct Requirements {
  std::vector<std::vector<Bits>> pos;
  std::vector<std::vector<Bits>> neg;
};

// The least playable Boolean table meeting the positive requirements, given
// as the forced set Z of the empty coalition and generators of the proper rows.
struct BooleanWitness {
  Bits z;
  std::vector<std::set<Bits>> gens;
};

constexpr std::size_t kMaxGenerators = 4096;

std::optional<BooleanWitness> solve(const Requirements& req, int players, std::size_t states) {
  const std::uint32_t grand = (1u << players) - 1u;
  Bits z(states);
  z.set();
  for (const Bits& x : req.pos[0]) z &= x;
  for (const Bits& x : req.neg[grand]) z &= ~x;
  if (z.none()) return std::nullopt;
  for (const Bits& x : req.neg[0])
    if (z.is_subset_of(x)) return std::nullopt;
  for (const Bits& x : req.pos[grand])
    if (!x.intersects(z)) return std::nullopt;

  BooleanWitness w{z, std::vector<std::set<Bits>>(grand + 1)};
  for (std::uint32_t c = 1; c < grand; ++c) {
    w.gens[c].insert(z);
    for (const Bits& x : req.pos[c]) w.gens[c].insert(x & z);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::uint32_t c1 = 1; c1 < grand; ++c1)
      for (std::uint32_t c2 = c1 + 1; c2 < grand; ++c2) {
        const std::uint32_t u = c1 | c2;
        if ((c1 & c2) != 0 || u == grand) continue;
        std::vector<Bits> fresh;
        for (const Bits& a : w.gens[c1])
          for (const Bits& b : w.gens[c2])
            if (!w.gens[u].count(a & b)) fresh.push_back(a & b);
        for (Bits& b : fresh) changed |= w.gens[u].insert(std::move(b)).second;
        if (w.gens[u].size() > kMaxGenerators) fail(Errc::budget_exceeded, "too many generators in a row");
      }
  }
  for (std::uint32_t c = 1; c < grand; ++c)
    for (const Bits& g : w.gens[c]) {
      if (g.none()) return std::nullopt;
      for (const Bits& x : req.neg[c])
        if (g.is_subset_of(x)) return std::nullopt;
    }
  for (std::uint32_t c1 = 1; c1 < grand; ++c1) {
    const std::uint32_t c2 = grand & ~c1;
    if (c1 > c2) continue;
    for (const Bits& a : w.gens[c1])
      for (const Bits& b : w.gens[c2])
        if (!a.intersects(b)) return std::nullopt;
  }
  return w;
}

BoolEffFn witness_table(const BooleanWitness& w, int players, const std::vector<std::string>& names) {
  const std::uint32_t grand = (1u << players) - 1u;
  const std::size_t m = names.size();
  EffFn h(Chain(1), players, names);
  for (std::uint32_t x = 0; x < (1u << m); ++x) {
    Bits bx(m, x);
    h.set(0, x, w.z.is_subset_of(bx) ? 1 : 0);
    h.set(grand, x, w.z.intersects(bx) ? 1 : 0);
    for (std::uint32_t c = 1; c < grand; ++c) {
      bool eff = false;
      for (const Bits& g : w.gens[c])
        if (g.is_subset_of(bx)) {
          eff = true;
          break;
        }
      h.set(c, x, eff ? 1 : 0);
    }
  }
  return BoolEffFn(std::move(h));
}

// A type fixes a value for every atom (propositions and [C]-subformulas)
// and hence for every subformula.
class TypeSpace {
 public:
  TypeSpace(const Formula& f, Chain chain, int players, std::uint64_t max_types)
      : n_(chain.n()), players_(players), closure_(subformulas(f)) {
    const auto& mem = closure_.members;
    child_.assign(mem.size(), {-1, -1});
    for (std::size_t k = 0; k < mem.size(); ++k) {
      const Formula& g = mem[k];
      auto index = [&](const Formula& h) {
        for (std::size_t j = 0; j < k; ++j)
          if (mem[j] == h) return static_cast<int>(j);
        throw std::logic_error("closure is not children-first");
      };
      if (g.kind() == NodeKind::prop || g.kind() == NodeKind::box) atoms_.push_back(static_cast<int>(k));
      if (g.kind() == NodeKind::neg || g.kind() == NodeKind::box) child_[k].first = index(g.left());
      if (g.kind() == NodeKind::implies) child_[k] = {index(g.left()), index(g.right())};
    }
    std::uint64_t count = 1;
    for (std::size_t a = 0; a < atoms_.size(); ++a) {
      count *= static_cast<std::uint64_t>(n_ + 1);
      if (count > max_types)
        fail(Errc::budget_exceeded, std::to_string(atoms_.size()) + " atoms give more than " +
                                        std::to_string(max_types) + " state types");
    }
    values_.resize(count);
    for (std::uint64_t t = 0; t < count; ++t) {
      std::vector<int>& v = values_[t];
      v.assign(mem.size(), 0);
      std::uint64_t rest = t;
      std::size_t next_atom = 0;
      for (std::size_t k = 0; k < mem.size(); ++k) {
        switch (mem[k].kind()) {
          case NodeKind::top: v[k] = n_; break;
          case NodeKind::prop:
          case NodeKind::box:
            v[k] = static_cast<int>(rest % (n_ + 1));
            rest /= (n_ + 1);
            ++next_atom;
            break;
          case NodeKind::neg: v[k] = n_ - v[child_[k].first]; break;
          case NodeKind::implies: v[k] = mv::implies(n_, v[child_[k].first], v[child_[k].second]); break;
          case NodeKind::box_o: throw std::logic_error("[O] must be translated before the type search");
        }
      }
    }
  }

  std::size_t count() const { return values_.size(); }
  int root_value(std::size_t t) const { return values_[t].back(); }
  const ClosureSet& closure() const { return closure_; }
  int value(std::size_t t, std::size_t k) const { return values_[t][k]; }

  Requirements requirements(std::size_t t, const std::vector<std::size_t>& states) const {
    const std::uint32_t coalitions = 1u << players_;
    Requirements req{std::vector<std::vector<Bits>>(coalitions), std::vector<std::vector<Bits>>(coalitions)};
    for (int k : atoms_) {
      const Formula& g = closure_.members[k];
      if (g.kind() != NodeKind::box) continue;
      const std::uint32_t c = g.coalition().bits();
      const int inner = child_[k].first;
      const int v = values_[t][k];
      // E(C, f) = v  iff  H(C, f >= i) = 1 for i <= v and H(C, f >= v+1) = 0.
      for (int i = 1; i <= std::min(v + 1, n_); ++i) {
        Bits x(states.size());
        for (std::size_t s = 0; s < states.size(); ++s)
          if (values_[states[s]][inner] >= i) x.set(s);
        (i <= v ? req.pos : req.neg)[c].push_back(std::move(x));
      }
    }
    return req;
  }

  std::optional<BooleanWitness> support(std::size_t t, const std::vector<std::size_t>& states) const {
    return solve(requirements(t, states), players_, states.size());
  }

  // Greatest subset of `states` in which every member is supported.
  std::vector<std::size_t> prune(std::vector<std::size_t> states, SearchStats& stats) const {
    for (;;) {
      ++stats.rounds;
      std::vector<std::size_t> kept;
      for (std::size_t t : states)
        if (support(t, states)) kept.push_back(t);
      if (kept.size() == states.size()) return states;
      states = std::move(kept);
    }
  }

  int players() const { return players_; }
  int n() const { return n_; }

 private:
  int n_;
  int players_;
  ClosureSet closure_;
  std::vector<int> atoms_;
  std::vector<std::pair<int, int>> child_;
  std::vector<std::vector<int>> values_;
};

std::vector<std::string> state_names(int m) {
  std::vector<std::string> out;
  for (int u = 0; u < m; ++u) out.push_back("w" + std::to_string(u));
  return out;
}

Model build_model(const TypeSpace& ts, const std::vector<std::size_t>& states, Chain chain) {
  const auto names = state_names(static_cast<int>(states.size()));
  std::vector<EffFn> eff;
  for (std::size_t t : states) {
    auto w = ts.support(t, states);
    if (!w) throw std::logic_error("unsupported type in a countermodel candidate");
    eff.push_back(lift_boolean(witness_table(*w, ts.players(), names), chain));
  }
  Valuation val;
  const auto& mem = ts.closure().members;
  for (std::size_t k = 0; k < mem.size(); ++k) {
    if (mem[k].kind() != NodeKind::prop) continue;
    std::vector<int> column;
    for (std::size_t t : states) column.push_back(ts.value(t, k));
    val[mem[k].prop_id()] = std::move(column);
  }
  return Model(chain, ts.players(), names, std::move(eff), std::move(val));
}

// The refuting state, or -1.
int refuting_state(const Model& m, const Formula& f) {
  const Code root = Evaluator(f).run(m).back();
  for (int u = 0; u < m.size(); ++u)
    if (m.space().digit(root, u) != m.n()) return u;
  return -1;
}

void certify(const DecisionVerdict& v, const Formula& f, Logic logic) {
  const Model& m = *v.countermodel;
  if (!is_playable(m)) throw std::logic_error("countermodel is not playable");
  if (logic == Logic::TPn && !is_standard(m)) throw std::logic_error("countermodel is not standard");
  if (eval(m, v.state, f).is_top()) throw std::logic_error("countermodel does not refute the formula");
}

bool combinations(std::vector<std::size_t>& idx, std::size_t total) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0 && idx[i - 1] == total - k + i - 1) --i;
  if (i == 0) return false;
  ++idx[i - 1];
  for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

constexpr std::uint64_t kMaxModelCells = std::uint64_t{1} << 22;

bool buildable(std::size_t states, const SearchOptions& o) {
  std::uint64_t cells = std::uint64_t{1} << o.players;
  for (std::size_t s = 0; s < states; ++s) {
    cells *= static_cast<std::uint64_t>(o.chain.size());
    if (cells > kMaxModelCells) return false;
  }
  return states <= 20;
}

DecisionVerdict exhaustive(const Formula& f, const Formula& g, Logic logic, const SearchOptions& o,
                           DecisionVerdict v) {
  const TypeSpace ts(g, o.chain, o.players, o.max_types);
  v.stats.types = ts.count();
  std::vector<std::size_t> all(ts.count());
  for (std::size_t t = 0; t < all.size(); ++t) all[t] = t;
  const std::vector<std::size_t> alive = ts.prune(all, v.stats);
  v.stats.surviving = alive.size();

  const bool refutable =
      std::any_of(alive.begin(), alive.end(), [&](std::size_t t) { return ts.root_value(t) != ts.n(); });
  if (!refutable) {
    v.status = static_cast<std::uint64_t>(o.max_states) >= v.bound ? Verdict::theorem_by_filtration_bound
                                                                   : Verdict::no_countermodel_up_to_bound;
    return v;
  }

  auto accept = [&](const std::vector<std::size_t>& states) {
    Model m = build_model(ts, states, o.chain);
    if (logic == Logic::TPn) m = standardize(m);
    v.state = refuting_state(m, f);
    if (v.state < 0) throw std::logic_error("refuting type lost its value in the built model");
    v.countermodel = std::move(m);
    v.status = Verdict::countermodel_found;
    certify(v, f, logic);
    return v;
  };

  const std::size_t limit = std::min<std::size_t>(static_cast<std::size_t>(o.max_states), alive.size());
  for (std::size_t size = 1; size <= limit; ++size) {
    if (!buildable(size, o)) break;
    std::vector<std::size_t> idx(size);
    for (std::size_t j = 0; j < size; ++j) idx[j] = j;
    do {
      if (++v.stats.candidates > o.max_candidates) {
        if (alive.size() <= limit && buildable(alive.size(), o)) return accept(alive);
        fail(Errc::budget_exceeded, "countermodel exists but the subset search ran out of candidates");
      }
      std::vector<std::size_t> states;
      bool has_refuter = false;
      for (std::size_t j : idx) {
        states.push_back(alive[j]);
        has_refuter |= ts.root_value(alive[j]) != ts.n();
      }
      if (!has_refuter) continue;
      SearchStats scratch;
      const auto core = ts.prune(states, scratch);
      if (std::any_of(core.begin(), core.end(), [&](std::size_t t) { return ts.root_value(t) != ts.n(); }))
        return accept(core);
    } while (combinations(idx, alive.size()));
  }
  v.status = Verdict::no_countermodel_up_to_bound;
  return v;
}

DecisionVerdict enumerate(const Formula& f, Logic logic, const SearchOptions& o, DecisionVerdict v) {
  const Evaluator ev(f);
  const auto& props = ev.propositions();
  for (int m = 1; m <= o.max_states; ++m) {
    if (m > 4) fail(Errc::budget_exceeded, "enumeration covers at most 4 states");
    const auto tables = enumerate_playable(o.chain, o.players, m);
    const auto names = state_names(m);
    const FunctionSpace fs(o.chain, m);
    std::vector<std::size_t> pick(m, 0);
    for (;;) {
      std::vector<EffFn> eff;
      for (std::size_t i : pick) {
        EffFn e = tables[i];
        eff.push_back(EffFn(e.chain(), e.players(), names, e.table()));
      }
      Model frame(o.chain, o.players, names, std::move(eff));
      if (logic == Logic::TPn) frame = standardize(frame);
      std::vector<Code> vals(props.size(), 0), out;
      for (;;) {
        if (++v.stats.candidates > o.max_candidates) fail(Errc::budget_exceeded, "enumeration budget exhausted");
        ev.run(frame, vals, out);
        if (out.back() != fs.top()) {
          Valuation val;
          for (std::size_t k = 0; k < props.size(); ++k) val[props[k]] = fs.decode(vals[k]);
          Model model = frame.with_valuation(std::move(val));
          v.state = refuting_state(model, f);
          v.countermodel = std::move(model);
          v.status = Verdict::countermodel_found;
          certify(v, f, logic);
          return v;
        }
        std::size_t k = 0;
        while (k < vals.size() && vals[k] == fs.count() - 1) vals[k++] = 0;
        if (k == vals.size()) break;
        ++vals[k];
      }
      std::size_t i = 0;
      while (i < pick.size() && pick[i] == tables.size() - 1) pick[i++] = 0;
      if (i == pick.size()) break;
      ++pick[i];
    }
  }
  v.status = static_cast<std::uint64_t>(o.max_states) >= v.bound ? Verdict::theorem_by_filtration_bound
                                                                 : Verdict::no_countermodel_up_to_bound;
  return v;
}

DecisionVerdict randomized(const Formula& f, Logic logic, const SearchOptions& o, DecisionVerdict v) {
  Rng rng(o.seed);
  const auto props = propositions(f);
  std::uniform_int_distribution<int> size(1, o.max_states);
  for (std::uint64_t s = 0; s < o.samples; ++s) {
    ++v.stats.candidates;
    RandomModelOptions mo{size(rng), std::vector<int>(props.begin(), props.end()), logic == Logic::TPn};
    Model m = random_model(rng, o.chain, o.players, mo);
    const int u = refuting_state(m, f);
    if (u >= 0) {
      v.state = u;
      v.countermodel = std::move(m);
      v.status = Verdict::countermodel_found;
      certify(v, f, logic);
      return v;
    }
  }
  v.status = Verdict::no_countermodel_up_to_bound;
  return v;
}

}  // namespace

DecisionVerdict search_countermodel(const Formula& f, Logic logic, const SearchOptions& options) {
  if (options.max_states < 1) fail(Errc::invalid_argument, "max_states must be positive");
  if (logic == Logic::Pn && f.uses_box_o()) fail(Errc::dialect_violation, "[O] is not part of the language of Pn");
  check_players(f, options.players);

  DecisionVerdict v;
  v.bound = filtration_bound(f, options.chain);
  v.max_states = options.max_states;
  switch (options.strategy) {
    case SearchStrategy::exhaustive:
      return exhaustive(f, box_o_as_empty_box(f, options.players), logic, options, v);
    case SearchStrategy::enumerate: return enumerate(f, logic, options, v);
    case SearchStrategy::randomized: return randomized(f, logic, options, v);
  }
  return v;
}

bool SoundnessReport::passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const SoundnessEntry& e) { return e.violations == 0; });
}

std::string SoundnessReport::to_string() const {
  std::ostringstream out;
  out << lukeff::to_string(logic) << "\n";
  for (const SoundnessEntry& e : entries) {
    out << e.name << " checks=" << e.checks << " violations=" << e.violations;
    if (!e.witness.empty()) out << " witness=" << e.witness;
    out << "\n";
  }
  return out.str();
}

SoundnessReport soundness_suite(Logic logic, const std::vector<Model>& corpus, std::uint64_t seed) {
  SoundnessReport report;
  report.logic = logic;
  Rng rng(seed);

  std::vector<Schema> schemas(std::begin(kPnSchemas), std::end(kPnSchemas));
  if (logic == Logic::TPn) schemas.insert(schemas.end(), std::begin(kTPnSchemas), std::end(kTPnSchemas));
  schemas.push_back(Schema::b_family);

  auto entry = [](std::string name) {
    SoundnessEntry e;
    e.name = std::move(name);
    return e;
  };
  SoundnessEntry frames = entry("frame_class");
  std::vector<SoundnessEntry> axioms;
  for (Schema s : schemas) axioms.push_back(entry(std::string(to_string(s))));
  SoundnessEntry mp = entry("modus_ponens"), us = entry("uniform_substitution"), mono = entry("monotonicity"),
                 nec = entry("necessitation");

  auto note = [](SoundnessEntry& e, bool ok, std::size_t model, const std::string& what) {
    ++e.checks;
    if (ok) return;
    if (e.violations++ == 0) e.witness = "model#" + std::to_string(model) + " " + what;
  };

  const Dialect dialect = logic == Logic::TPn ? Dialect::LPlus : Dialect::L;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Model& m = corpus[i];
    const bool in_class = is_playable(m) && (logic == Logic::Pn || is_standard(m));
    note(frames, in_class, i, "outside the frame class");
    if (!in_class) continue;

    std::vector<Formula> theorems;
    for (std::size_t k = 0; k < schemas.size(); ++k) {
      const SchemaResult r = check_axiom_schema(m, schemas[k], std::uint64_t{1} << 24);
      axioms[k].checks += r.instances - (r.holds ? 0 : 1);
      note(axioms[k], r.holds, i, r.instance ? print(*r.instance) : "");
      for (const Formula& f : schema_instances(schemas[k], m.players(), m.chain())) theorems.push_back(f);
    }

    const Coalition coal(std::uniform_int_distribution<std::uint32_t>(0, (1u << m.players()) - 1u)(rng), m.players());
    const Formula thm = theorems[std::uniform_int_distribution<std::size_t>(0, theorems.size() - 1)(rng)];
    const Formula chi = random_formula(rng, 3, {1, 2}, m.players(), m.chain(), dialect);
    const Formula phi = random_formula(rng, 3, {1, 2}, m.players(), m.chain(), dialect);

    // Modus Ponens: thm and thm -> (thm | chi) are true, so is thm | chi.
    const Formula concl = Formula::join(thm, chi);
    if (is_true(m, thm) && is_true(m, Formula::implies(thm, concl))) note(mp, is_true(m, concl), i, print(concl));

    // Uniform Substitution: p1 := chi in a theorem.
    const Formula subst = substitute(thm, 1, chi);
    note(us, is_true(m, subst), i, print(subst));

    // Monotonicity: phi -> (phi | chi) is true, so is [C]phi -> [C](phi | chi).
    const Formula wider = Formula::join(phi, chi);
    if (is_true(m, Formula::implies(phi, wider)))
      note(mono, is_true(m, Formula::implies(Formula::box(coal, phi), Formula::box(coal, wider))), i,
           print(Formula::box(coal, phi)));

    if (logic == Logic::TPn) {
      const Formula boxed = Formula::box(Coalition::empty(m.players()), subst);
      note(nec, is_true(m, boxed), i, print(boxed));
    }
  }

  report.entries.push_back(frames);
  for (auto& e : axioms) report.entries.push_back(std::move(e));
  report.entries.push_back(mp);
  report.entries.push_back(us);
  report.entries.push_back(mono);
  if (logic == Logic::TPn) report.entries.push_back(nec);
  return report;
}

}  // namespace lukeff
