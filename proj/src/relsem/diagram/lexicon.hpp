#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "relsem/diagram/wiring.hpp"
#include "relsem/pregroup/diagram.hpp"
#include "relsem/pregroup/types.hpp"

namespace relsem {

/// Template instantiated once per word occurrence: a wiring with empty domain
/// whose codomain covers the tokens of the entry's type, each token
/// contributing basic_arity(b) consecutive positions.
struct WiringTemplate {
    std::size_t wire_count = 0;
    std::vector<WiringBox> boxes;
    std::vector<Wire> codomain;

    bool operator==(const WiringTemplate&) const = default;
};

struct LexiconEntry {
    std::string word;
    PregroupType type;
    WiringTemplate tmpl;

    bool operator==(const LexiconEntry&) const = default;
};

/// The free model on generators: how many wires each basic type carries
/// (default 1) and one template per dictionary entry. Lexical words get a
/// single fresh symbol box over all their wires; functional words get
/// explicit spider wirings.
class Lexicon {
public:
    Lexicon() = default;
    Lexicon(std::map<std::string, std::size_t> basic_arity, std::vector<LexiconEntry> entries);

    std::size_t basic_arity(const std::string& basic) const;
    std::size_t type_wires(const PregroupType& t) const;

    const LexiconEntry* find(const std::string& word, const PregroupType& type) const;
    const std::vector<LexiconEntry>& entries() const { return entries_; }
    const std::map<std::string, std::size_t>& declared_arities() const { return basic_arity_; }
    /// Signature inferred from the templates' boxes.
    const std::map<std::string, std::size_t>& symbol_arities() const { return symbol_arity_; }

    /// Single box of the given symbol over `wires` fresh wires, all on the
    /// codomain in order.
    static WiringTemplate symbol_template(const std::string& symbol, std::size_t wires);

    bool operator==(const Lexicon& o) const {
        return basic_arity_ == o.basic_arity_ && entries_ == o.entries_;
    }

private:
    std::map<std::string, std::size_t> basic_arity_;
    std::vector<LexiconEntry> entries_;
    std::map<std::string, std::size_t> symbol_arity_;
};

/// Applies the free model to a parse: instantiates each word's template with
/// fresh wires, merges wire bundles along the cup matching (bundles matched
/// in reversed order on the higher-exponent side), and exposes the output
/// positions' wires as the codomain. Throws MissingEntryError when a
/// dictionary entry has no template and ArityMismatchError when a cup joins
/// bundles of different widths.
Wiring apply_L(const Lexicon& lex, const ParseDiagram& r);

}  // namespace relsem
