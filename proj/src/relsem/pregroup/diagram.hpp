#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "relsem/pregroup/grammar.hpp"
#include "relsem/pregroup/types.hpp"

namespace relsem {

/// A reduction diagram: a type assignment per word plus a non-crossing cup
/// matching over the concatenated token positions. Positions not under any
/// cup are the output and reduce to the target by induced steps only.
struct ParseDiagram {
    std::vector<std::string> words;
    std::vector<std::size_t> entry_indices;  // into Grammar::dictionary, one per word
    std::vector<PregroupType> entry_types;   // copies of the assigned types
    std::vector<std::pair<std::size_t, std::size_t>> matching;  // sorted by left endpoint
    std::vector<std::size_t> output;                            // ascending positions
    PregroupType target;

    bool operator==(const ParseDiagram&) const = default;

    /// Concatenated token sequence of the assigned types.
    std::vector<SimpleType> tokens() const;
};

/// Standalone validator for all four diagram invariants: non-crossing
/// matching, poset-legal cups, exact position partition (with no output
/// position under a cup), and output reducing to the target by induced
/// steps. Returns an explanation for the first violation found.
struct DiagramCheck {
    bool ok = true;
    std::string reason;
};
DiagramCheck validate_diagram(const Grammar& g, const ParseDiagram& d);

}  // namespace relsem
