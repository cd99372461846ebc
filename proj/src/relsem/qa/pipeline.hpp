#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "relsem/cq/engine.hpp"
#include "relsem/diagram/lexicon.hpp"
#include "relsem/pregroup/diagram.hpp"
#include "relsem/pregroup/grammar.hpp"

namespace relsem {

struct CorpusSentence {
    std::string text;
    ParseDiagram parse;
};

/// Parsed corpus: every sentence carries a reduction diagram targeting the
/// same sentence type.
struct Corpus {
    std::vector<CorpusSentence> sentences;
};

/// Parses each line against the grammar at `target`. Lines that do not parse
/// are an error (InvalidInputError, with the offending line).
Corpus corpus_from_lines(const Grammar& g, const std::vector<std::string>& lines,
                         const PregroupType& target);

/// Entity linking: designated entities plus links keyed by (sentence index,
/// variable of that sentence's translated query). Variables the linking does
/// not cover are auto-assigned fresh blank entities at compile time, so the
/// substitution is total.
struct EntityLinking {
    std::vector<std::string> entities;
    std::map<std::pair<std::size_t, std::string>, std::string> links;
};

struct CompiledDatabase {
    RelStructure structure;
    /// (symbol, tuple) -> originating sentence indices; every tuple traces to
    /// at least one sentence.
    std::map<std::pair<std::string, Tuple>, std::set<std::size_t>> provenance;
};

/// Conjunction of the per-sentence translated queries after renaming each
/// sentence's variables apart (sentence i's xk becomes s{i}_xk). Throws
/// NonClosedSentenceError if some sentence's query has free variables.
Query corpus_query(const Corpus& c, const Lexicon& lex);

/// The corpus-to-database construction: translate every sentence, substitute
/// the entity linking into the conjunction, and take the canonical structure.
/// The universe is exactly the image of the (totalised) linking. Throws
/// UnknownEntityError when a link names an entity outside `mu.entities` and
/// InvalidInputError for out-of-range sentence indices.
CompiledDatabase compile(const Corpus& c, const Lexicon& lex, const EntityLinking& mu);

/// Evaluates the translated question against the compiled database; rows are
/// entity tuples in the question's free-variable order.
std::set<Tuple> answer(const CompiledDatabase& db, const ParseDiagram& question,
                       const Lexicon& lex);

}  // namespace relsem
