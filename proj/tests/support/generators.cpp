#include "support/generators.hpp"

#include <algorithm>
#include <set>

namespace testsupport {

using namespace relsem;

Grammar random_grammar(Rng& rng) {
    static const std::vector<std::string> kBasics = {"a", "b", "c", "d", "e"};
    const std::size_t nb = 1 + rng.below(kBasics.size());
    std::vector<std::string> basics(kBasics.begin(), kBasics.begin() + nb);

    // pairs only point up the index order, so the closure is always a poset
    std::vector<std::pair<std::string, std::string>> order;
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = i + 1; j < nb; ++j)
            if (rng.chance(25)) order.push_back({basics[i], basics[j]});
    auto poset = BasicTypePoset::closure(basics, order);

    const std::size_t nwords = 1 + rng.below(4);
    std::vector<std::string> words;
    std::set<std::string> vocab;
    for (std::size_t i = 0; i < nwords; ++i) {
        words.push_back("w" + std::to_string(i));
        vocab.insert(words.back());
    }

    const std::size_t nentries = 1 + rng.below(8);
    std::vector<DictEntry> dict;
    for (std::size_t i = 0; i < nentries; ++i) {
        DictEntry e;
        e.word = rng.pick(words);
        const std::size_t len = 1 + rng.below(3);
        for (std::size_t k = 0; k < len; ++k)
            e.type.push_back({rng.pick(basics), rng.range(-2, 2)});
        bool dup = false;
        for (const auto& prev : dict) dup = dup || prev == e;
        if (!dup) dict.push_back(std::move(e));
    }
    return Grammar(std::move(vocab), std::move(poset), std::move(dict));
}

std::vector<std::string> random_utterance(Rng& rng, const Grammar& g, std::size_t max_words) {
    std::vector<std::string> usable;
    std::vector<std::size_t> longest;
    for (const auto& w : g.vocabulary()) {
        std::size_t worst = 0;
        for (std::size_t e : g.entries_for(w))
            worst = std::max(worst, g.dictionary()[e].type.size());
        if (!g.entries_for(w).empty()) {
            usable.push_back(w);
            longest.push_back(worst);
        }
    }
    std::vector<std::string> out;
    if (usable.empty()) return out;
    const std::size_t want = rng.below(max_words + 1);
    std::size_t budget = 16;
    for (std::size_t i = 0; i < want; ++i) {
        const std::size_t pick = rng.below(usable.size());
        if (longest[pick] > budget) break;
        out.push_back(usable[pick]);
        budget -= longest[pick];
    }
    return out;
}

PregroupType random_target(Rng& rng, const Grammar& g) {
    PregroupType t;
    const std::size_t len = rng.below(3);
    for (std::size_t i = 0; i < len; ++i)
        t.push_back({rng.pick(g.basics().names()), rng.range(-1, 1)});
    return t;
}

Query random_query(Rng& rng, std::size_t max_vars, std::size_t max_atoms) {
    const std::size_t nv = 1 + rng.below(max_vars);
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < nv; ++i) vars.push_back("x" + std::to_string(i));

    std::vector<Atom> atoms;
    const std::size_t na = rng.below(max_atoms + 1);
    for (std::size_t i = 0; i < na; ++i) {
        if (rng.chance(60))
            atoms.push_back({"R", {rng.pick(vars), rng.pick(vars)}});
        else
            atoms.push_back({"S", {rng.pick(vars)}});
    }

    std::vector<std::string> free_names, free_vars;
    for (const auto& v : vars)
        if (rng.chance(40)) {
            free_names.push_back(v);
            free_vars.push_back(v);
        }
    // keep free variables first so the declared order matches construction
    std::vector<std::string> ordered = free_vars;
    for (const auto& v : vars)
        if (std::find(ordered.begin(), ordered.end(), v) == ordered.end())
            ordered.push_back(v);
    return Query(std::move(ordered), std::move(free_names), std::move(free_vars),
                 std::move(atoms));
}

RelStructure random_structure(Rng& rng, std::size_t max_universe) {
    const std::size_t n = 1 + rng.below(max_universe);
    std::vector<std::string> universe;
    for (std::size_t i = 0; i < n; ++i) universe.push_back("e" + std::to_string(i));
    std::map<std::string, std::set<Tuple>> tables;
    for (const auto& x : universe) {
        for (const auto& y : universe)
            if (rng.chance(35)) tables["R"].insert({x, y});
        if (rng.chance(45)) tables["S"].insert({x});
    }
    return RelStructure(std::move(universe), std::move(tables));
}

Wiring random_wiring(Rng& rng, std::size_t dom, std::size_t cod) {
    Wiring w;
    const std::size_t nw = std::max<std::size_t>(1, rng.below(5));
    for (Wire i = 0; i < nw; ++i) w.wires.insert(i);
    auto any_wire = [&] { return static_cast<Wire>(rng.below(nw)); };
    const std::size_t nb = rng.below(4);
    for (std::size_t i = 0; i < nb; ++i) {
        if (rng.chance(60))
            w.boxes.push_back({"R", {any_wire(), any_wire()}});
        else
            w.boxes.push_back({"S", {any_wire()}});
    }
    for (std::size_t i = 0; i < dom; ++i) w.domain.push_back(any_wire());
    for (std::size_t i = 0; i < cod; ++i) w.codomain.push_back(any_wire());
    return w;
}

Lexicon random_lexicon(Rng& rng, const Grammar& g) {
    std::map<std::string, std::size_t> arity;  // all defaulted to 1
    std::vector<LexiconEntry> entries;
    std::size_t fresh = 0;
    for (const auto& d : g.dictionary()) {
        LexiconEntry e{d.word, d.type, {}};
        const std::size_t wires = d.type.size();
        const int kind = rng.range(0, 2);
        if (kind == 0) {
            e.tmpl = Lexicon::symbol_template("R" + std::to_string(fresh++), wires);
        } else if (kind == 1 && wires > 0) {
            e.tmpl.wire_count = 1;  // one spider across every token
            e.tmpl.codomain.assign(wires, 0);
            if (rng.chance(50)) e.tmpl.boxes.push_back({"P" + std::to_string(fresh++), {0}});
        } else {
            e.tmpl.wire_count = wires;  // bare wires, no box
            for (Wire x = 0; x < wires; ++x) e.tmpl.codomain.push_back(x);
        }
        entries.push_back(std::move(e));
    }
    return Lexicon(std::move(arity), std::move(entries));
}

RelStructure random_interpretation(Rng& rng, const Lexicon& lex, std::size_t max_universe) {
    const std::size_t n = 1 + rng.below(max_universe);
    std::vector<std::string> universe;
    for (std::size_t i = 0; i < n; ++i) universe.push_back("e" + std::to_string(i));
    std::map<std::string, std::set<Tuple>> tables;
    for (const auto& [symbol, ar] : lex.symbol_arities()) {
        auto& table = tables[symbol];
        std::vector<std::size_t> idx(ar, 0);
        while (true) {
            Tuple t;
            for (std::size_t i : idx) t.push_back(universe[i]);
            if (rng.chance(40)) table.insert(std::move(t));
            std::size_t i = 0;
            for (; i < idx.size(); ++i) {
                if (++idx[i] < n) break;
                idx[i] = 0;
            }
            if (i == idx.size()) break;
        }
    }
    return RelStructure(std::move(universe), std::move(tables));
}

}  // namespace testsupport
