#pragma once

// JSON documents for game forms, tables, models and reports. Every document
// carries a "kind" field; readers throw BadDocument on anything malformed.

#include <string>

#include <json.hpp>

#include "lukeff/decision.hpp"
#include "lukeff/effectivity.hpp"
#include "lukeff/filtration.hpp"
#include "lukeff/game_form.hpp"
#include "lukeff/semantics.hpp"

namespace lukeff {

using Json = nlohmann::ordered_json;

/// Reads a file, or stdin for "-".
Json read_document(const std::string& path);
std::string kind_of(const Json& doc);

Json to_json(const GameForm& g);
GameForm game_form_from_json(const Json& doc);

/// {"n", "players", "outcomes", "table": {"{1,2}": [numerators in code order]}}
Json to_json(const EffFn& e);
EffFn effectivity_from_json(const Json& doc);

/// Propositions are keyed "p<id>".
Json to_json(const Model& m);
Model model_from_json(const Json& doc);

/// The filtered model document plus "stage" and "class_map" (source state ->
/// class name).
Json to_json(const FiltrationResult& r, const Model& source);

Json to_json(const PlayabilityReport& r, const EffFn& e);
Json to_json(const DecisionVerdict& v, const Formula& f, Logic logic);
Json to_json(const SoundnessReport& r);

}  // namespace lukeff
