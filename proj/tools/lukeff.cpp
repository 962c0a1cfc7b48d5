// Command-line front end: lukeff <command> [options]. Exit codes: 0 success
// or true, 1 property false or countermodel found, 2 error or budget.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lukeff/decision.hpp"
#include "lukeff/effectivity.hpp"
#include "lukeff/filtration.hpp"
#include "lukeff/game_form.hpp"
#include "lukeff/io.hpp"
#include "lukeff/semantics.hpp"

using namespace lukeff;

namespace {

struct Config {
  int n = 1;
  std::uint64_t budget_cells = kDefaultBudgetCells;
  int budget_strategies = 3;
  int max_states = 2;
  std::uint64_t seed = 1;
  std::string format = "json";
};

void emit(const Config& cfg, const Json& doc, const std::string& text) {
  if (cfg.format == "json")
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

std::string values_text(const FunctionSpace& fs, const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += TruthValue(v[i], Chain(fs.n())).to_string();
  }
  return out + ")";
}

int cmd_effectivity(const Config& cfg, const std::string& file) {
  const GameForm g = game_form_from_json(read_document(file));
  const EffFn e = effectivity_table(g, Chain(cfg.n), cfg.budget_cells);
  std::string text;
  for (std::uint32_t c = 0; c < e.coalitions(); ++c) {
    text += format_coalition(c) + ":";
    for (Code f = 0; f < e.space().count(); ++f) text += " " + std::to_string(e.at(c, f));
    text += "\n";
  }
  emit(cfg, to_json(e), text);
  return 0;
}

std::vector<Property> requested(const std::vector<std::string>& names) {
  std::vector<Property> out;
  for (const std::string& s : names) {
    const auto p = property_from_string(s);
    if (!p) fail(Errc::invalid_argument, "unknown property '" + s + "'");
    out.push_back(*p);
  }
  if (out.empty()) out = {Property::playable, Property::truly_playable};
  return out;
}

int cmd_check(const Config& cfg, const std::string& file, const std::vector<std::string>& names) {
  const Json doc = read_document(file);
  const auto props = requested(names);
  bool all = true;
  std::string text;
  auto report = [&](const EffFn& e, const std::string& prefix) {
    const PlayabilityReport r = check_playability(e);
    for (Property p : props) {
      all &= r.holds(p);
      text += prefix + std::string(to_string(p)) + " " + (r.holds(p) ? "true" : "false") + "\n";
    }
    return to_json(r, e);
  };
  Json out;
  if (kind_of(doc) == "model") {
    const Model m = model_from_json(doc);
    Json states = Json::object();
    for (int u = 0; u < m.size(); ++u) states[m.states()[u]] = report(m.eff(u), m.states()[u] + " ");
    out = {{"kind", "model_report"}, {"states", states}};
    if (m.enriched()) {
      const bool standard = is_standard(m);
      all &= standard;
      out["standard"] = standard;
      text += std::string("standard ") + (standard ? "true" : "false") + "\n";
    }
  } else {
    out = report(effectivity_from_json(doc), "");
  }
  out["requested"] = Json::array();
  for (Property p : props) out["requested"].push_back(std::string(to_string(p)));
  out["holds"] = all;
  emit(cfg, out, text);
  return all ? 0 : 1;
}

ParseOptions parse_options(const Model& m) { return {m.players(), m.chain(), Dialect::LPlus}; }

int cmd_eval(const Config& cfg, const std::string& file, const std::string& formula, const std::string& state) {
  const Model m = model_from_json(read_document(file));
  const Formula f = parse(formula, parse_options(m));
  const std::vector<TruthValue> values = evaluate(m, f);
  Json vals = Json::object();
  std::string text;
  bool all = true;
  for (int u = 0; u < m.size(); ++u) {
    if (!state.empty() && m.states()[u] != state) continue;
    vals[m.states()[u]] = values[u].num();
    text += m.states()[u] + " " + values[u].to_string() + "\n";
    all &= values[u].is_top();
  }
  if (!state.empty()) m.state_index(state);
  emit(cfg, {{"kind", "values"}, {"formula", print(f)}, {"n", m.n()}, {"values", vals}, {"true", all}}, text);
  return all ? 0 : 1;
}

int cmd_filter(const Config& cfg, const std::string& file, const std::string& formula, std::string stage) {
  const Model m = model_from_json(read_document(file));
  const Formula mu = parse(formula, parse_options(m));
  if (stage.empty()) stage = m.enriched() ? "enriched" : "playable";
  std::optional<FiltrationResult> r;
  if (stage == "intermediate")
    r = intermediate_filtration(m, mu);
  else if (stage == "playable")
    r = playable_filtration(m, mu);
  else if (stage == "enriched")
    r = enriched_filtration(m, mu);
  else
    fail(Errc::invalid_argument, "stage must be intermediate, playable or enriched");
  std::string text = std::string(to_string(r->stage)) + " filtration, " + std::to_string(r->model.size()) +
                     " classes\n";
  for (int u = 0; u < m.size(); ++u) text += m.states()[u] + " -> " + r->model.states()[r->quotient.class_of[u]] + "\n";
  emit(cfg, to_json(*r, m), text);
  return 0;
}

int cmd_synthesize(const Config& cfg, const std::string& file, std::uint64_t candidates) {
  const EffFn e = effectivity_from_json(read_document(file));
  SynthesisOptions opt;
  opt.max_strategies = cfg.budget_strategies;
  opt.max_candidates = candidates;
  const GameForm g = synthesize_game_form(e, opt);
  std::string text = "strategies";
  for (int s : g.strategies()) text += " " + std::to_string(s);
  text += "\no";
  for (int x : g.outcome_map()) text += " " + g.outcomes()[x];
  emit(cfg, to_json(g), text + "\n");
  return 0;
}

int cmd_decide(const Config& cfg, const std::string& formula, const std::string& logic_name, int players,
               const std::string& strategy, std::uint64_t samples) {
  const Logic logic = logic_name == "TPn" ? Logic::TPn : Logic::Pn;
  if (logic_name != "Pn" && logic_name != "TPn") fail(Errc::invalid_argument, "logic must be Pn or TPn");
  SearchOptions opt;
  opt.chain = Chain(cfg.n);
  opt.players = players;
  opt.max_states = cfg.max_states;
  opt.seed = cfg.seed;
  opt.samples = samples;
  if (strategy == "exhaustive")
    opt.strategy = SearchStrategy::exhaustive;
  else if (strategy == "enumerate")
    opt.strategy = SearchStrategy::enumerate;
  else if (strategy == "randomized")
    opt.strategy = SearchStrategy::randomized;
  else
    fail(Errc::invalid_argument, "strategy must be exhaustive, enumerate or randomized");
  const Formula f =
      parse(formula, {players, opt.chain, logic == Logic::TPn ? Dialect::LPlus : Dialect::L});
  const DecisionVerdict v = search_countermodel(f, logic, opt);
  std::string text = std::string(to_string(v.status));
  if (v.status == Verdict::no_countermodel_up_to_bound) text += " (states <= " + std::to_string(v.max_states) + ")";
  text += "\nbound " + std::to_string(v.bound) + "\n";
  if (v.countermodel) {
    const Model& m = *v.countermodel;
    text += "refuted at " + m.states()[v.state] + " in a " + std::to_string(m.size()) + "-state model\n";
    for (const auto& [p, column] : m.valuation())
      text += "p" + std::to_string(p) + " = " + values_text(m.space(), column) + "\n";
  }
  emit(cfg, to_json(v, f, logic), text);
  return v.status == Verdict::countermodel_found ? 1 : 0;
}

int cmd_lift(const Config& cfg, const std::string& file) {
  const EffFn h = effectivity_from_json(read_document(file));
  const EffFn e = lift_boolean(BoolEffFn(h), Chain(cfg.n));
  emit(cfg, to_json(e), "lifted to n=" + std::to_string(cfg.n) + ", " + std::to_string(e.cells()) + " cells\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite Lukasiewicz effectivity functions, game forms and coalition logics"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--n", cfg.n, "Chain L_n denominator")->check(CLI::PositiveNumber);
  app.add_option("--budget-cells", cfg.budget_cells, "Table cell cap")->check(CLI::PositiveNumber);
  app.add_option("--budget-strategies", cfg.budget_strategies, "Synthesis strategy cap per player")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-states", cfg.max_states, "Countermodel size bound")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string file, formula, state, stage, logic = "Pn", strategy = "exhaustive";
  std::vector<std::string> properties;
  int players = 2;
  std::uint64_t samples = 5000, candidates = std::uint64_t{1} << 26;

  auto* eff = app.add_subcommand("effectivity", "Effectivity table of a game form");
  eff->add_option("file", file, "Game-form document, - for stdin")->required();

  auto* check = app.add_subcommand("check", "Playability of a table, or of every state of a model");
  check->add_option("file", file, "Effectivity or model document")->required();
  check->add_option("--property", properties, "Properties to decide (default playable, truly_playable)");

  auto* ev = app.add_subcommand("eval", "Values of a formula in a model");
  ev->add_option("file", file, "Model document")->required();
  ev->add_option("formula", formula, "Formula")->required();
  ev->add_option("--state", state, "Only this state");

  auto* filter = app.add_subcommand("filter", "Filtration of a model through a formula");
  filter->add_option("file", file, "Model document")->required();
  filter->add_option("formula", formula, "Formula")->required();
  filter->add_option("--stage", stage, "intermediate, playable or enriched");

  auto* synth = app.add_subcommand("synthesize", "Game form realizing a truly playable table");
  synth->add_option("file", file, "Effectivity document")->required();
  synth->add_option("--budget-candidates", candidates, "Outcome maps to try")->check(CLI::PositiveNumber);

  auto* decide = app.add_subcommand("decide", "Countermodel search for Pn or TPn");
  decide->add_option("formula", formula, "Formula")->required();
  decide->add_option("--logic", logic, "Pn or TPn");
  decide->add_option("--players", players, "Number of players")->check(CLI::Range(1, 8));
  decide->add_option("--strategy", strategy, "exhaustive, enumerate or randomized");
  decide->add_option("--samples", samples, "Random models for the randomized strategy");

  auto* lift = app.add_subcommand("lift", "Lift a Boolean table to L_n");
  lift->add_option("file", file, "Boolean effectivity document (n = 1)")->required();

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*eff) return cmd_effectivity(cfg, file);
    if (*check) return cmd_check(cfg, file, properties);
    if (*ev) return cmd_eval(cfg, file, formula, state);
    if (*filter) return cmd_filter(cfg, file, formula, stage);
    if (*synth) return cmd_synthesize(cfg, file, candidates);
    if (*decide) return cmd_decide(cfg, formula, logic, players, strategy, samples);
    if (*lift) return cmd_lift(cfg, file);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
