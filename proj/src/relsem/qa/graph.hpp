#pragma once

#include <string>
#include <vector>

#include "relsem/cq/structure.hpp"
#include "relsem/diagram/lexicon.hpp"
#include "relsem/pregroup/grammar.hpp"
#include "relsem/qa/pipeline.hpp"

namespace relsem {

/// A graph encoded as corpus + entity linking over a fixed micro-grammar, so
/// that compiling it and asking pattern questions reproduces graph
/// homomorphism. One subject-verb-object sentence per edge (node words carry
/// a bare wire, so the compiled database is exactly the input graph); nodes
/// with no incident edge get an existence sentence.
struct GraphEncoding {
    Grammar grammar;
    Lexicon lexicon;
    std::vector<std::string> corpus_lines;
    EntityLinking linking;
};

/// `g` must interpret exactly one symbol, of arity 2; its name becomes the
/// verb of the micro-language. With `symmetric` every edge is emitted in both
/// directions. Node names may not collide with the reserved words
/// who/whoever/that/any/back/exists or contain whitespace.
GraphEncoding encode_graph(const RelStructure& g, bool symmetric);

/// Question utterance whose translated query is a directed cycle pattern of
/// the given length (>= 2) with one free variable, phrased in the
/// micro-language: "whoever VERB any that VERB ... back".
std::string cycle_question(const std::string& verb, std::size_t length);

/// Question utterance for a directed path of the given length (>= 1):
/// "who VERB any that VERB ... any".
std::string path_question(const std::string& verb, std::size_t length);

}  // namespace relsem
