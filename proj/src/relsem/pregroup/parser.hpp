#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "relsem/pregroup/diagram.hpp"
#include "relsem/pregroup/grammar.hpp"

namespace relsem {

/// Decides whether some choice of dictionary entries for `words` concatenates
/// to a type reducing to `target` (contractions plus induced steps only, per
/// the switching lemma). Cubic-time span dynamic programming; lexical
/// ambiguity is explored through a lattice over per-word entry candidates.
/// Throws UnknownWordError for out-of-vocabulary tokens.
bool grammatical(const Grammar& g, const std::vector<std::string>& words,
                 const PregroupType& target);

/// Returns the canonically least parse, or nullopt when none exists. The
/// canonical order is lexicographic on the per-word dictionary-entry indices
/// (left to right), then on the matching pairs sorted by left endpoint.
/// Deterministic: identical inputs yield identical diagrams.
std::optional<ParseDiagram> parse(const Grammar& g, const std::vector<std::string>& words,
                                  const PregroupType& target);

/// All distinct parses in canonical order, at most `limit` (which must be at
/// least 1).
std::vector<ParseDiagram> enumerate_parses(const Grammar& g,
                                           const std::vector<std::string>& words,
                                           const PregroupType& target, std::size_t limit);

/// Whitespace tokenization of an utterance.
std::vector<std::string> tokenize(const std::string& sentence);

}  // namespace relsem
