#pragma once

#include "relsem/cq/engine.hpp"
#include "relsem/diagram/lexicon.hpp"
#include "relsem/diagram/translate.hpp"
#include "relsem/pregroup/diagram.hpp"

namespace relsem {

/// Entailment between two parses under a free model: r entails r' exactly
/// when the translated query of r is contained in that of r'. Both parses
/// must target the same type.
bool entails(const ParseDiagram& r, const ParseDiagram& r_prime, const Lexicon& lex);

}  // namespace relsem
