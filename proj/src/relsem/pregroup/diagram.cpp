#include "relsem/pregroup/diagram.hpp"

#include <algorithm>

namespace relsem {

std::vector<SimpleType> ParseDiagram::tokens() const {
    std::vector<SimpleType> out;
    for (const auto& t : entry_types) out.insert(out.end(), t.begin(), t.end());
    return out;
}

static DiagramCheck fail(std::string why) {
    return DiagramCheck{false, std::move(why)};
}

DiagramCheck validate_diagram(const Grammar& g, const ParseDiagram& d) {
    if (d.words.size() != d.entry_indices.size() || d.words.size() != d.entry_types.size())
        return fail("assignment length does not match word count");
    for (std::size_t i = 0; i < d.words.size(); ++i) {
        std::size_t idx = d.entry_indices[i];
        if (idx >= g.dictionary().size()) return fail("entry index out of range");
        const auto& entry = g.dictionary()[idx];
        if (entry.word != d.words[i] || entry.type != d.entry_types[i])
            return fail("assignment for word " + d.words[i] +
                        " does not match the dictionary entry");
    }

    const auto toks = d.tokens();
    const std::size_t n = toks.size();
    std::vector<int> role(n, 0);  // 0 unseen, 1 cupped, 2 output
    for (const auto& [i, j] : d.matching) {
        if (i >= j || j >= n) return fail("malformed matching pair");
        if (role[i] || role[j]) return fail("position occurs in two matching pairs");
        role[i] = role[j] = 1;
        if (!contractible(g.basics(), toks[i], toks[j]))
            return fail("cup (" + std::to_string(i) + ", " + std::to_string(j) +
                        ") joins tokens " + print_simple(toks[i]) + ", " + print_simple(toks[j]) +
                        " that do not contract");
    }
    for (const auto& a : d.matching)
        for (const auto& b : d.matching)
            if (a.first < b.first && b.first < a.second && a.second < b.second)
                return fail("matching pairs cross");
    for (std::size_t p : d.output) {
        if (p >= n || role[p] != 0) return fail("output position missing or already cupped");
        role[p] = 2;
    }
    if (!std::is_sorted(d.output.begin(), d.output.end())) return fail("output not ascending");
    for (std::size_t p = 0; p < n; ++p)
        if (role[p] == 0) return fail("position " + std::to_string(p) + " neither cupped nor output");
    // no output wire may sit under a cup, else the cup cannot contract
    for (const auto& [i, j] : d.matching)
        for (std::size_t p : d.output)
            if (i < p && p < j) return fail("output position under a cup");

    if (d.output.size() != d.target.size())
        return fail("output length does not match the target type");
    for (std::size_t k = 0; k < d.output.size(); ++k)
        if (!induced_leq(g.basics(), toks[d.output[k]], d.target[k]))
            return fail("output token " + print_simple(toks[d.output[k]]) +
                        " does not reduce to " + print_simple(d.target[k]));
    return DiagramCheck{};
}

}  // namespace relsem
