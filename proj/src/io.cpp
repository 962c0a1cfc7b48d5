#include "lukeff/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace lukeff {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(Errc::bad_document, what); }

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

int integer(const Json& v, const char* what) {
  if (!v.is_number_integer()) bad(std::string(what) + " must be an integer");
  return v.get<int>();
}

std::vector<std::string> strings(const Json& v, const char* what) {
  if (!v.is_array()) bad(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const Json& s : v) {
    if (!s.is_string()) bad(std::string(what) + " must be an array of strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

void expect_kind(const Json& doc, const char* kind) {
  if (doc.is_object() && doc.contains("kind") && doc.at("kind") != kind)
    bad("expected a " + std::string(kind) + " document, got " + kind_of(doc));
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    bad(e.what());
  } catch (const Error& e) {
    if (e.code() == Errc::bad_document) throw;
    bad(e.what());
  }
}

Json vector_json(const FunctionSpace& fs, Code f) { return fs.decode(f); }

int prop_from_key(const std::string& key) {
  if (key.size() < 2 || key[0] != 'p') bad("proposition keys look like \"p1\", got \"" + key + "\"");
  int id = 0;
  for (std::size_t i = 1; i < key.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(key[i])) || i > 6) bad("bad proposition key \"" + key + "\"");
    id = id * 10 + (key[i] - '0');
  }
  if (id < 1) bad("proposition ids start at 1");
  return id;
}

}  // namespace

Json read_document(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) bad("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    bad(path + ": " + e.what());
  }
}

std::string kind_of(const Json& doc) {
  if (!doc.is_object() || !doc.contains("kind") || !doc.at("kind").is_string()) return "unknown";
  return doc.at("kind").get<std::string>();
}

Json to_json(const GameForm& g) {
  Json o = Json::array();
  for (int x : g.outcome_map()) o.push_back(g.outcomes()[x]);
  return {{"kind", "game_form"}, {"players", g.players()}, {"strategies", g.strategies()},
          {"outcomes", g.outcomes()}, {"o", o}};
}

GameForm game_form_from_json(const Json& doc) {
  expect_kind(doc, "game_form");
  return guarded([&] {
    const int players = integer(field(doc, "players"), "players");
    std::vector<int> strategies;
    const Json& s = field(doc, "strategies");
    if (!s.is_array()) bad("strategies must be an array");
    for (const Json& x : s) strategies.push_back(integer(x, "strategy count"));
    const auto outcomes = strings(field(doc, "outcomes"), "outcomes");
    std::vector<int> map;
    for (const std::string& name : strings(field(doc, "o"), "o")) {
      const auto it = std::find(outcomes.begin(), outcomes.end(), name);
      if (it == outcomes.end()) bad("unknown outcome \"" + name + "\" in o");
      map.push_back(static_cast<int>(it - outcomes.begin()));
    }
    return GameForm(players, std::move(strategies), outcomes, std::move(map));
  });
}

Json to_json(const EffFn& e) {
  Json table = Json::object();
  for (std::uint32_t c = 0; c < e.coalitions(); ++c) {
    Json row = Json::array();
    for (Code f = 0; f < e.space().count(); ++f) row.push_back(e.at(c, f));
    table[format_coalition(c)] = std::move(row);
  }
  return {{"kind", "effectivity"}, {"n", e.n()}, {"players", e.players()}, {"outcomes", e.outcomes()},
          {"table", std::move(table)}};
}

EffFn effectivity_from_json(const Json& doc) {
  expect_kind(doc, "effectivity");
  return guarded([&] {
    const int n = integer(field(doc, "n"), "n");
    if (n < 1) bad("n must be positive");
    const int players = integer(field(doc, "players"), "players");
    if (players < 1 || players > 16) bad("players must lie in 1..16");
    EffFn e(Chain(n), players, strings(field(doc, "outcomes"), "outcomes"));
    const Json& table = field(doc, "table");
    if (!table.is_object()) bad("table must be an object");
    std::vector<bool> seen(e.coalitions(), false);
    for (const auto& [key, row] : table.items()) {
      const std::uint32_t c = parse_coalition(key, players).bits();
      if (seen[c]) bad("coalition " + key + " listed twice");
      seen[c] = true;
      if (!row.is_array() || row.size() != e.space().count())
        bad("row " + key + " must list " + std::to_string(e.space().count()) + " numerators");
      for (Code f = 0; f < e.space().count(); ++f) {
        const int v = integer(row[f], "table entry");
        if (v < 0 || v > n) bad("table entry out of 0.." + std::to_string(n));
        e.set(c, f, v);
      }
    }
    for (std::uint32_t c = 0; c < e.coalitions(); ++c)
      if (!seen[c]) bad("table misses coalition " + format_coalition(c));
    return e;
  });
}

Json to_json(const Model& m) {
  Json doc = {{"kind", "model"}, {"n", m.n()}, {"players", m.players()}, {"states", m.states()}};
  Json eff = Json::object();
  for (int u = 0; u < m.size(); ++u) eff[m.states()[u]] = to_json(m.eff(u));
  doc["E"] = std::move(eff);
  if (m.relation()) {
    Json r = Json::array();
    for (int u = 0; u < m.size(); ++u)
      for (int v = 0; v < m.size(); ++v)
        if (m.relation()->contains(u, v)) r.push_back({m.states()[u], m.states()[v]});
    doc["R"] = std::move(r);
  }
  Json val = Json::object();
  for (int u = 0; u < m.size(); ++u) {
    Json row = Json::object();
    for (const auto& [p, column] : m.valuation()) row["p" + std::to_string(p)] = column[u];
    val[m.states()[u]] = std::move(row);
  }
  doc["val"] = std::move(val);
  return doc;
}

Model model_from_json(const Json& doc) {
  expect_kind(doc, "model");
  return guarded([&] {
    const int n = integer(field(doc, "n"), "n");
    const int players = integer(field(doc, "players"), "players");
    const auto states = strings(field(doc, "states"), "states");
    if (states.empty()) bad("a model needs at least one state");
    auto index = [&](const Json& name) {
      if (!name.is_string()) bad("state names must be strings");
      const auto it = std::find(states.begin(), states.end(), name.get<std::string>());
      if (it == states.end()) bad("unknown state \"" + name.get<std::string>() + "\"");
      return static_cast<int>(it - states.begin());
    };
    const Json& e = field(doc, "E");
    std::vector<EffFn> eff;
    for (const std::string& s : states) {
      if (!e.is_object() || !e.contains(s)) bad("E misses state \"" + s + "\"");
      EffFn t = effectivity_from_json(e.at(s));
      if (t.n() != n || t.players() != players) bad("E(" + s + ") disagrees with the model's n or players");
      if (t.outcomes() != states) bad("E(" + s + ") must range over the model's states");
      eff.push_back(std::move(t));
    }
    std::optional<Relation> relation;
    if (doc.contains("R")) {
      const Json& r = doc.at("R");
      if (!r.is_array()) bad("R must be an array of pairs");
      relation = Relation{std::vector<std::uint32_t>(states.size(), 0)};
      for (const Json& edge : r) {
        if (!edge.is_array() || edge.size() != 2) bad("R must be an array of pairs");
        relation->succ[index(edge[0])] |= 1u << index(edge[1]);
      }
    }
    Valuation val;
    const Json& v = field(doc, "val");
    if (!v.is_object()) bad("val must be an object");
    for (const auto& [state, row] : v.items()) {
      const int u = index(Json(state));
      if (!row.is_object()) bad("val rows must be objects");
      for (const auto& [key, x] : row.items()) {
        const int value = integer(x, "valuation entry");
        if (value < 0 || value > n) bad("valuation entry out of 0.." + std::to_string(n));
        auto [it, fresh] = val.try_emplace(prop_from_key(key), std::vector<int>(states.size(), 0));
        (void)fresh;
        it->second[u] = value;
      }
    }
    return Model(Chain(n), players, states, std::move(eff), std::move(val), std::move(relation));
  });
}

Json to_json(const FiltrationResult& r, const Model& source) {
  Json doc = to_json(r.model);
  doc["stage"] = std::string(to_string(r.stage));
  Json classes = Json::object();
  for (int u = 0; u < source.size(); ++u) classes[source.states()[u]] = r.model.states()[r.quotient.class_of[u]];
  doc["class_map"] = std::move(classes);
  return doc;
}

Json to_json(const PlayabilityReport& r, const EffFn& e) {
  Json props = Json::object();
  for (const PropertyResult& p : r.results) {
    Json entry = {{"holds", p.holds}};
    if (p.witness) {
      Json w = {{"C", format_coalition(p.witness->c)}, {"f", vector_json(e.space(), p.witness->f)}};
      if (p.witness->c2) w["C2"] = format_coalition(*p.witness->c2);
      if (p.witness->g) w["g"] = vector_json(e.space(), *p.witness->g);
      entry["witness"] = std::move(w);
    }
    props[std::string(to_string(p.property))] = std::move(entry);
  }
  return {{"kind", "playability_report"}, {"n", e.n()}, {"outcomes", e.outcomes()}, {"properties", props}};
}

Json to_json(const DecisionVerdict& v, const Formula& f, Logic logic) {
  Json doc = {{"kind", "verdict"},
              {"formula", print(f)},
              {"logic", std::string(to_string(logic))},
              {"status", std::string(to_string(v.status))},
              {"bound", v.bound},
              {"max_states", v.max_states}};
  doc["stats"] = {{"types", v.stats.types},
                  {"surviving", v.stats.surviving},
                  {"rounds", v.stats.rounds},
                  {"candidates", v.stats.candidates}};
  if (v.countermodel) {
    doc["state"] = v.countermodel->states()[v.state];
    doc["countermodel"] = to_json(*v.countermodel);
  }
  return doc;
}

Json to_json(const SoundnessReport& r) {
  Json entries = Json::array();
  for (const SoundnessEntry& e : r.entries) {
    Json j = {{"name", e.name}, {"checks", e.checks}, {"violations", e.violations}};
    if (!e.witness.empty()) j["witness"] = e.witness;
    entries.push_back(std::move(j));
  }
  return {{"kind", "soundness_report"}, {"logic", std::string(to_string(r.logic))}, {"passed", r.passed()},
          {"entries", std::move(entries)}};
}

}  // namespace lukeff
