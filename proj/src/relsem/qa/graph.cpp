#include "relsem/qa/graph.hpp"

#include <algorithm>
#include <cctype>

#include "relsem/errors.hpp"
#include "relsem/pregroup/parser.hpp"

namespace relsem {

namespace {

const std::vector<std::string> kReserved = {"who", "whoever", "that", "any", "back", "exists"};

PregroupType T(const std::string& text) {
    return parse_type(text);
}

WiringTemplate spider(std::size_t legs) {
    WiringTemplate t;
    t.wire_count = 1;
    t.codomain.assign(legs, 0);
    return t;
}

}  // namespace

std::string cycle_question(const std::string& verb, std::size_t length) {
    if (length < 2) throw PreconditionError("cycle questions need length >= 2");
    std::string q = "whoever " + verb;
    for (std::size_t i = 1; i < length; ++i) q += " any that " + verb;
    q += " back";
    return q;
}

std::string path_question(const std::string& verb, std::size_t length) {
    if (length < 1) throw PreconditionError("path questions need length >= 1");
    std::string q = "who " + verb;
    for (std::size_t i = 1; i < length; ++i) q += " any that " + verb;
    q += " any";
    return q;
}

GraphEncoding encode_graph(const RelStructure& g, bool symmetric) {
    if (g.tables().size() > 1)
        throw InvalidInputError("graph structure must interpret exactly one symbol, got " +
                                std::to_string(g.tables().size()));
    const std::string verb = g.tables().empty() ? "rel" : g.tables().begin()->first;
    const std::set<Tuple> edges = g.tables().empty() ? std::set<Tuple>{} : g.table(verb);
    if (auto ar = g.arity(verb); ar && *ar != 2)
        throw InvalidInputError("graph symbol must be binary");

    auto reserved = [&](const std::string& w) {
        return std::find(kReserved.begin(), kReserved.end(), w) != kReserved.end() || w == verb;
    };
    for (const auto& node : g.universe()) {
        if (reserved(node))
            throw InvalidInputError("graph node collides with a reserved word: " + node);
        for (char ch : node)
            if (std::isspace(static_cast<unsigned char>(ch)))
                throw InvalidInputError("graph node contains whitespace: " + node);
    }

    // micro-grammar: s sentences, q questions, n nouns, c the cycle carrier
    auto basics = BasicTypePoset::closure({"s", "q", "n", "c"}, {});
    std::set<std::string> vocab(kReserved.begin(), kReserved.end());
    vocab.insert(verb);
    for (const auto& node : g.universe()) vocab.insert(node);

    std::vector<DictEntry> dict = {
        {verb, T("*n s n*")},       {"exists", T("*n s")},
        {"who", T("q s* n")},       {"whoever", T("q c* s* n")},
        {"that", T("*n n s* n")},   {"any", T("n")},
        {"back", T("n c")},
    };
    for (const auto& node : g.universe()) dict.push_back({node, T("n")});
    Grammar grammar(std::move(vocab), basics, std::move(dict));

    std::map<std::string, std::size_t> arity{{"s", 0}, {"q", 1}, {"n", 1}, {"c", 1}};
    std::vector<LexiconEntry> lex = {
        {verb, T("*n s n*"), Lexicon::symbol_template(verb, 2)},
        {"exists", T("*n s"), spider(1)},
        {"who", T("q s* n"), spider(2)},
        {"whoever", T("q c* s* n"), spider(3)},
        {"that", T("*n n s* n"), spider(3)},
        {"any", T("n"), spider(1)},
        {"back", T("n c"), spider(2)},
    };
    for (const auto& node : g.universe()) lex.push_back({node, T("n"), spider(1)});
    Lexicon lexicon(std::move(arity), std::move(lex));

    std::set<Tuple> edge_set = edges;
    if (symmetric)
        for (const auto& e : edges) edge_set.insert({e[1], e[0]});

    GraphEncoding out{std::move(grammar), std::move(lexicon), {}, {}};
    out.linking.entities = g.universe();
    std::set<std::string> incident;
    for (const auto& e : edge_set) incident.insert(e.begin(), e.end());
    std::size_t idx = 0;
    for (const auto& e : edge_set) {
        out.corpus_lines.push_back(e[0] + " " + verb + " " + e[1]);
        out.linking.links[{idx, "x0"}] = e[0];
        out.linking.links[{idx, "x1"}] = e[1];
        ++idx;
    }
    for (const auto& node : g.universe()) {
        if (incident.count(node)) continue;
        out.corpus_lines.push_back(node + " exists");
        out.linking.links[{idx, "x0"}] = node;
        ++idx;
    }
    return out;
}

}  // namespace relsem
