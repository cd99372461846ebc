#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "relsem/pregroup/poset.hpp"
#include "relsem/pregroup/types.hpp"

namespace relsem {

struct DictEntry {
    std::string word;
    PregroupType type;

    bool operator==(const DictEntry&) const = default;
};

/// A pregroup grammar: vocabulary, basic-type poset and dictionary. The
/// dictionary order is significant: entry indices define the canonical parse
/// order. Immutable after construction.
class Grammar {
public:
    Grammar(std::set<std::string> vocabulary, BasicTypePoset basics,
            std::vector<DictEntry> dictionary);

    const std::set<std::string>& vocabulary() const { return vocabulary_; }
    const BasicTypePoset& basics() const { return basics_; }
    const std::vector<DictEntry>& dictionary() const { return dictionary_; }

    bool in_vocabulary(const std::string& word) const { return vocabulary_.count(word) > 0; }

    /// Indices of dictionary entries for `word`, in dictionary order.
    const std::vector<std::size_t>& entries_for(const std::string& word) const;

private:
    std::set<std::string> vocabulary_;
    BasicTypePoset basics_;
    std::vector<DictEntry> dictionary_;
    std::map<std::string, std::vector<std::size_t>> by_word_;
    std::vector<std::size_t> no_entries_;
};

/// Contraction check: positions i < j carrying (b, z+1) then (b', z) cancel
/// when b' ≤ b for even z and b ≤ b' for odd z.
bool contractible(const BasicTypePoset& poset, const SimpleType& left, const SimpleType& right);

/// Induced step at matching exponent: (b, z) ≤ (c, z) iff b ≤ c for even z
/// and c ≤ b for odd z.
bool induced_leq(const BasicTypePoset& poset, const SimpleType& from, const SimpleType& to);

/// Equivalent grammar over a discrete poset: every dictionary entry is closed
/// upward under per-token induced steps. Original entries come first, in
/// order.
Grammar expand_induced_steps(const Grammar& g);

}  // namespace relsem
