#include "relsem/io/json_io.hpp"

#include <json.hpp>

#include "relsem/errors.hpp"

namespace relsem {

using nlohmann::json;

namespace {

json parse_json(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidInputError(std::string("malformed ") + what + ": " + e.what());
    }
}

template <typename F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw InvalidInputError(std::string("malformed ") + what + ": " + e.what());
    }
}

std::string dump(const json& j) {
    return j.dump(2) + "\n";
}

}  // namespace

// ---------------------------------------------------------------------------
// grammar

Grammar grammar_from_json(const std::string& text) {
    json j = parse_json(text, "grammar file");
    return guarded("grammar file", [&] {
        std::vector<std::string> basics = j.at("basics").get<std::vector<std::string>>();
        std::vector<std::pair<std::string, std::string>> order;
        for (const auto& p : j.value("order", json::array()))
            order.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
        auto poset = BasicTypePoset::closure(basics, order);
        std::set<std::string> vocab;
        std::vector<DictEntry> dict;
        for (const auto& e : j.at("dictionary")) {
            DictEntry d{e.at("word").get<std::string>(),
                        parse_type(e.at("type").get<std::string>())};
            vocab.insert(d.word);
            dict.push_back(std::move(d));
        }
        for (const auto& w : j.value("vocabulary", json::array()))
            vocab.insert(w.get<std::string>());
        return Grammar(std::move(vocab), std::move(poset), std::move(dict));
    });
}

std::string grammar_to_json(const Grammar& g) {
    json j;
    j["basics"] = g.basics().names();
    j["order"] = json::array();
    for (const auto& [a, b] : g.basics().generating_pairs()) j["order"].push_back({a, b});
    j["dictionary"] = json::array();
    for (const auto& e : g.dictionary())
        j["dictionary"].push_back({{"word", e.word}, {"type", print_type(e.type)}});
    // words with no dictionary entry would otherwise be lost
    json extra = json::array();
    for (const auto& w : g.vocabulary())
        if (g.entries_for(w).empty()) extra.push_back(w);
    if (!extra.empty()) j["vocabulary"] = extra;
    return dump(j);
}

// ---------------------------------------------------------------------------
// lexicon

Lexicon lexicon_from_json(const std::string& text, const Grammar* g) {
    json j = parse_json(text, "lexicon file");
    return guarded("lexicon file", [&] {
        std::map<std::string, std::size_t> arity;
        for (const auto& [name, n] : j.value("basic_arity", json::object()).items()) {
            if (g && !g->basics().contains(name))
                throw InvalidInputError("basic_arity names unknown basic type: " + name);
            arity[name] = n.get<std::size_t>();
        }
        std::vector<LexiconEntry> entries;
        Lexicon probe(arity, {});  // for type_wires before entries exist
        for (const auto& e : j.at("entries")) {
            LexiconEntry entry;
            entry.word = e.at("word").get<std::string>();
            entry.type = parse_type(e.at("type").get<std::string>());
            if (g) {
                DictEntry want{entry.word, entry.type};
                bool known = false;
                for (const auto& d : g->dictionary()) known = known || d == want;
                if (!known)
                    throw InvalidInputError("lexicon entry (" + entry.word + ", " +
                                            print_type(entry.type) +
                                            ") is not a dictionary entry");
            }
            const auto& t = e.at("template");
            std::string kind = t.at("kind").get<std::string>();
            if (kind == "symbol") {
                entry.tmpl = Lexicon::symbol_template(t.at("name").get<std::string>(),
                                                      probe.type_wires(entry.type));
            } else if (kind == "wiring") {
                entry.tmpl.wire_count = t.at("wires").get<std::size_t>();
                for (const auto& b : t.value("boxes", json::array())) {
                    WiringBox box{b.at("symbol").get<std::string>(),
                                  b.at("ports").get<std::vector<Wire>>()};
                    entry.tmpl.boxes.push_back(std::move(box));
                }
                entry.tmpl.codomain = t.at("codomain").get<std::vector<Wire>>();
            } else {
                throw InvalidInputError("unknown template kind: " + kind);
            }
            entries.push_back(std::move(entry));
        }
        return Lexicon(std::move(arity), std::move(entries));
    });
}

std::string lexicon_to_json(const Lexicon& lex) {
    json j;
    j["basic_arity"] = json::object();
    for (const auto& [b, n] : lex.declared_arities()) j["basic_arity"][b] = n;
    j["entries"] = json::array();
    for (const auto& e : lex.entries()) {
        json t;
        const WiringTemplate plain =
            e.tmpl.boxes.size() == 1
                ? Lexicon::symbol_template(e.tmpl.boxes[0].symbol, e.tmpl.codomain.size())
                : WiringTemplate{};
        if (!e.tmpl.boxes.empty() && e.tmpl == plain) {
            t = {{"kind", "symbol"}, {"name", e.tmpl.boxes[0].symbol}};
        } else {
            t["kind"] = "wiring";
            t["wires"] = e.tmpl.wire_count;
            t["boxes"] = json::array();
            for (const auto& b : e.tmpl.boxes)
                t["boxes"].push_back({{"symbol", b.symbol}, {"ports", b.ports}});
            t["codomain"] = e.tmpl.codomain;
        }
        j["entries"].push_back(
            {{"word", e.word}, {"type", print_type(e.type)}, {"template", t}});
    }
    return dump(j);
}

// ---------------------------------------------------------------------------
// structures and databases

static RelStructure structure_from(const json& j) {
    std::vector<std::string> universe = j.at("universe").get<std::vector<std::string>>();
    std::map<std::string, std::set<Tuple>> tables;
    for (const auto& [symbol, rows] : j.value("tables", json::object()).items()) {
        auto& table = tables[symbol];
        for (const auto& row : rows) table.insert(row.get<Tuple>());
    }
    return RelStructure(std::move(universe), std::move(tables));
}

static json structure_to(const RelStructure& k) {
    json j;
    j["universe"] = k.universe();
    j["tables"] = json::object();
    for (const auto& [symbol, rows] : k.tables()) {
        json arr = json::array();
        for (const auto& row : rows) arr.push_back(row);
        j["tables"][symbol] = arr;
    }
    return j;
}

RelStructure structure_from_json(const std::string& text) {
    json j = parse_json(text, "database file");
    return guarded("database file", [&] { return structure_from(j); });
}

std::string structure_to_json(const RelStructure& k) {
    return dump(structure_to(k));
}

CompiledDatabase database_from_json(const std::string& text) {
    json j = parse_json(text, "database file");
    return guarded("database file", [&] {
        CompiledDatabase db;
        db.structure = structure_from(j);
        for (const auto& p : j.value("provenance", json::array())) {
            auto key = std::make_pair(p.at("symbol").get<std::string>(),
                                      p.at("tuple").get<Tuple>());
            for (const auto& s : p.at("sentences"))
                db.provenance[key].insert(s.get<std::size_t>());
        }
        return db;
    });
}

std::string database_to_json(const CompiledDatabase& db) {
    json j = structure_to(db.structure);
    if (!db.provenance.empty()) {
        json arr = json::array();
        for (const auto& [key, sentences] : db.provenance)
            arr.push_back({{"symbol", key.first},
                           {"tuple", key.second},
                           {"sentences", std::vector<std::size_t>(sentences.begin(),
                                                                  sentences.end())}});
        j["provenance"] = arr;
    }
    return dump(j);
}

// ---------------------------------------------------------------------------
// entity linking

EntityLinking linking_from_json(const std::string& text) {
    json j = parse_json(text, "linking file");
    return guarded("linking file", [&] {
        EntityLinking mu;
        mu.entities = j.at("entities").get<std::vector<std::string>>();
        for (const auto& l : j.value("links", json::array())) {
            auto key = std::make_pair(l.at("sentence").get<std::size_t>(),
                                      l.at("variable").get<std::string>());
            auto [it, fresh] = mu.links.emplace(key, l.at("entity").get<std::string>());
            if (!fresh && it->second != l.at("entity").get<std::string>())
                throw InvalidInputError("conflicting links for sentence " +
                                        std::to_string(key.first) + " variable " + key.second);
        }
        return mu;
    });
}

std::string linking_to_json(const EntityLinking& mu) {
    json j;
    j["entities"] = mu.entities;
    j["links"] = json::array();
    for (const auto& [key, entity] : mu.links)
        j["links"].push_back(
            {{"sentence", key.first}, {"variable", key.second}, {"entity", entity}});
    return dump(j);
}

// ---------------------------------------------------------------------------
// parse diagrams

ParseDiagram diagram_from_json(const std::string& text, const Grammar& g) {
    json j = parse_json(text, "diagram");
    auto d = guarded("diagram", [&] {
        ParseDiagram d;
        for (const auto& a : j.at("assignment")) {
            d.words.push_back(a.at("word").get<std::string>());
            d.entry_indices.push_back(a.at("entry").get<std::size_t>());
            d.entry_types.push_back(parse_type(a.at("type").get<std::string>()));
        }
        for (const auto& p : j.at("matching"))
            d.matching.emplace_back(p.at(0).get<std::size_t>(), p.at(1).get<std::size_t>());
        d.output = j.at("output").get<std::vector<std::size_t>>();
        d.target = parse_type(j.at("target").get<std::string>());
        return d;
    });
    auto check = validate_diagram(g, d);
    if (!check.ok) throw InvalidInputError("invalid diagram: " + check.reason);
    return d;
}

std::string diagram_to_json(const ParseDiagram& d) {
    json j;
    j["words"] = d.words;
    j["assignment"] = json::array();
    for (std::size_t i = 0; i < d.words.size(); ++i)
        j["assignment"].push_back({{"word", d.words[i]},
                                   {"type", print_type(d.entry_types[i])},
                                   {"entry", d.entry_indices[i]}});
    j["matching"] = json::array();
    for (const auto& [a, b] : d.matching) j["matching"].push_back({a, b});
    j["output"] = d.output;
    j["target"] = print_type(d.target);
    return dump(j);
}

std::string diagram_to_text(const ParseDiagram& d) {
    std::string out = "words:";
    for (const auto& w : d.words) out += " " + w;
    out += "\ntypes: ";
    for (std::size_t i = 0; i < d.entry_types.size(); ++i) {
        if (i) out += " | ";
        out += print_type(d.entry_types[i]);
    }
    out += "\ncups:";
    for (const auto& [a, b] : d.matching)
        out += " (" + std::to_string(a) + "," + std::to_string(b) + ")";
    out += "\noutput:";
    const auto toks = d.tokens();
    for (std::size_t p : d.output)
        out += " " + std::to_string(p) + ":" + print_simple(toks[p]);
    out += "\ntarget: " + print_type(d.target) + "\n";
    return out;
}

}  // namespace relsem
