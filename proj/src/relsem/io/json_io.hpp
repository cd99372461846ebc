#pragma once

#include <string>

#include "relsem/cq/structure.hpp"
#include "relsem/diagram/lexicon.hpp"
#include "relsem/pregroup/diagram.hpp"
#include "relsem/pregroup/grammar.hpp"
#include "relsem/qa/pipeline.hpp"

namespace relsem {

// All readers throw InvalidInputError on malformed input; all writers emit
// deterministic, round-trippable JSON text.

Grammar grammar_from_json(const std::string& text);
std::string grammar_to_json(const Grammar& g);

/// When `g` is given, the entries and basic arities are validated against it.
Lexicon lexicon_from_json(const std::string& text, const Grammar* g = nullptr);
std::string lexicon_to_json(const Lexicon& lex);

RelStructure structure_from_json(const std::string& text);
std::string structure_to_json(const RelStructure& k);

CompiledDatabase database_from_json(const std::string& text);
std::string database_to_json(const CompiledDatabase& db);

EntityLinking linking_from_json(const std::string& text);
std::string linking_to_json(const EntityLinking& mu);

ParseDiagram diagram_from_json(const std::string& text, const Grammar& g);
std::string diagram_to_json(const ParseDiagram& d);
std::string diagram_to_text(const ParseDiagram& d);

}  // namespace relsem
