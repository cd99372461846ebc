#include "relsem/qa/pipeline.hpp"

#include <algorithm>

#include "relsem/cq/hom.hpp"
#include "relsem/diagram/translate.hpp"
#include "relsem/errors.hpp"
#include "relsem/pregroup/parser.hpp"

namespace relsem {

Corpus corpus_from_lines(const Grammar& g, const std::vector<std::string>& lines,
                         const PregroupType& target) {
    Corpus c;
    for (const auto& line : lines) {
        auto words = tokenize(line);
        if (words.empty()) continue;
        auto r = parse(g, words, target);
        if (!r)
            throw InvalidInputError("corpus sentence does not parse at type " +
                                    print_type(target) + ": " + line);
        c.sentences.push_back({line, std::move(*r)});
    }
    return c;
}

namespace {

struct TranslatedSentence {
    Query query;                                   // variables renamed apart
    std::map<std::string, std::string> original;   // renamed var -> per-sentence name
};

std::vector<TranslatedSentence> translate_sentences(const Corpus& c, const Lexicon& lex) {
    std::vector<TranslatedSentence> out;
    for (std::size_t i = 0; i < c.sentences.size(); ++i) {
        Query q = lambda_translate(apply_L(lex, c.sentences[i].parse));
        if (q.free_arity() > 0)
            throw NonClosedSentenceError("sentence " + std::to_string(i) +
                                         " translates to an open query: " +
                                         c.sentences[i].text);
        std::map<std::string, std::string> rename, original;
        for (const auto& v : q.vars()) {
            std::string fresh = "s" + std::to_string(i) + "_" + v;
            rename[v] = fresh;
            original[fresh] = v;
        }
        out.push_back({q.renamed(rename), std::move(original)});
    }
    return out;
}

}  // namespace

Query corpus_query(const Corpus& c, const Lexicon& lex) {
    std::vector<std::string> vars;
    std::vector<Atom> atoms;
    for (const auto& ts : translate_sentences(c, lex)) {
        vars.insert(vars.end(), ts.query.vars().begin(), ts.query.vars().end());
        atoms.insert(atoms.end(), ts.query.atoms().begin(), ts.query.atoms().end());
    }
    return Query(std::move(vars), {}, {}, std::move(atoms));
}

CompiledDatabase compile(const Corpus& c, const Lexicon& lex, const EntityLinking& mu) {
    std::set<std::string> known(mu.entities.begin(), mu.entities.end());
    for (const auto& [key, entity] : mu.links) {
        if (key.first >= c.sentences.size())
            throw InvalidInputError("link references sentence " + std::to_string(key.first) +
                                    " but the corpus has " +
                                    std::to_string(c.sentences.size()) + " sentences");
        if (!known.count(entity))
            throw UnknownEntityError("link target is not a declared entity: " + entity);
    }

    auto sentences = translate_sentences(c, lex);
    std::vector<std::string> universe;
    std::set<std::string> in_universe;
    auto add_entity = [&](const std::string& e) {
        if (in_universe.insert(e).second) universe.push_back(e);
    };

    // totalise the linking: unlinked variables get fresh blank entities
    std::map<std::string, std::string> entity_of;  // renamed var -> entity
    for (std::size_t i = 0; i < sentences.size(); ++i) {
        for (const auto& v : sentences[i].query.vars()) {
            auto it = mu.links.find({i, sentences[i].original.at(v)});
            std::string e =
                it != mu.links.end() ? it->second : "_:" + std::to_string(i) + ":" +
                                                        sentences[i].original.at(v);
            entity_of[v] = e;
            add_entity(e);
        }
    }

    std::map<std::string, std::set<Tuple>> tables;
    CompiledDatabase db;
    for (std::size_t i = 0; i < sentences.size(); ++i) {
        for (const auto& a : sentences[i].query.atoms()) {
            Tuple t;
            for (const auto& v : a.args) t.push_back(entity_of.at(v));
            tables[a.symbol].insert(t);
            db.provenance[{a.symbol, t}].insert(i);
        }
    }
    db.structure = RelStructure(std::move(universe), std::move(tables));
    return db;
}

std::set<Tuple> answer(const CompiledDatabase& db, const ParseDiagram& question,
                       const Lexicon& lex) {
    Query q = lambda_translate(apply_L(lex, question));
    return eval_rows(q, db.structure);
}

}  // namespace relsem
