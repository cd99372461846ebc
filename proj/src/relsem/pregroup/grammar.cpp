#include "relsem/pregroup/grammar.hpp"

#include <algorithm>

#include "relsem/errors.hpp"

namespace relsem {

Grammar::Grammar(std::set<std::string> vocabulary, BasicTypePoset basics,
                 std::vector<DictEntry> dictionary)
    : vocabulary_(std::move(vocabulary)),
      basics_(std::move(basics)),
      dictionary_(std::move(dictionary)) {
    for (std::size_t i = 0; i < dictionary_.size(); ++i) {
        const auto& e = dictionary_[i];
        if (!vocabulary_.count(e.word))
            throw InvalidInputError("dictionary word not in vocabulary: " + e.word);
        for (const auto& tok : e.type)
            if (!basics_.contains(tok.basic))
                throw InvalidInputError("dictionary type uses unknown basic type: " + tok.basic);
        for (std::size_t j = 0; j < i; ++j)
            if (dictionary_[j] == e)
                throw InvalidInputError("duplicate dictionary entry: (" + e.word + ", " +
                                        print_type(e.type) + ")");
        by_word_[e.word].push_back(i);
    }
}

const std::vector<std::size_t>& Grammar::entries_for(const std::string& word) const {
    auto it = by_word_.find(word);
    return it == by_word_.end() ? no_entries_ : it->second;
}

bool contractible(const BasicTypePoset& poset, const SimpleType& left, const SimpleType& right) {
    if (left.z != right.z + 1) return false;
    auto il = poset.index_of(left.basic);
    auto ir = poset.index_of(right.basic);
    if (!il || !ir) return false;
    const bool even = right.z % 2 == 0;
    return even ? poset.leq(*ir, *il) : poset.leq(*il, *ir);
}

bool induced_leq(const BasicTypePoset& poset, const SimpleType& from, const SimpleType& to) {
    if (from.z != to.z) return false;
    auto ia = poset.index_of(from.basic);
    auto ib = poset.index_of(to.basic);
    if (!ia || !ib) return false;
    const bool even = from.z % 2 == 0;
    return even ? poset.leq(*ia, *ib) : poset.leq(*ib, *ia);
}

Grammar expand_induced_steps(const Grammar& g) {
    const auto& poset = g.basics();
    std::vector<DictEntry> out = g.dictionary();
    std::set<std::pair<std::string, PregroupType>> seen;
    for (const auto& e : out) seen.insert({e.word, e.type});

    // Close each entry under single-token raises, breadth-first so the output
    // order is deterministic.
    std::vector<DictEntry> frontier = g.dictionary();
    while (!frontier.empty()) {
        std::vector<DictEntry> next;
        for (const auto& e : frontier) {
            for (std::size_t pos = 0; pos < e.type.size(); ++pos) {
                for (const auto& name : poset.names()) {
                    if (name == e.type[pos].basic) continue;
                    SimpleType raised{name, e.type[pos].z};
                    if (!induced_leq(poset, e.type[pos], raised)) continue;
                    DictEntry candidate = e;
                    candidate.type[pos] = raised;
                    if (seen.insert({candidate.word, candidate.type}).second) {
                        out.push_back(candidate);
                        next.push_back(candidate);
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    return Grammar(g.vocabulary(), poset.discrete(), std::move(out));
}

}  // namespace relsem
