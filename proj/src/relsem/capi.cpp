#include "relsem.h"

#include <cstring>
#include <string>

#include <json.hpp>

#include "relsem/cq/engine.hpp"
#include "relsem/cq/entail.hpp"
#include "relsem/diagram/translate.hpp"
#include "relsem/errors.hpp"
#include "relsem/io/json_io.hpp"
#include "relsem/pregroup/parser.hpp"
#include "relsem/qa/graph.hpp"
#include "relsem/qa/pipeline.hpp"

using namespace relsem;

struct relsem_grammar {
    Grammar impl;
};
struct relsem_lexicon {
    Lexicon impl;
};
struct relsem_database {
    CompiledDatabase impl;
};
struct relsem_diagram {
    ParseDiagram impl;
};
struct relsem_parse_list {
    std::vector<relsem_diagram> items;
};

namespace {

thread_local std::string g_last_error;

relsem_status to_status(ErrorCode code) {
    switch (code) {
        case ErrorCode::invalid_input: return RELSEM_ERR_INVALID_INPUT;
        case ErrorCode::cycle: return RELSEM_ERR_CYCLE;
        case ErrorCode::unknown_word: return RELSEM_ERR_UNKNOWN_WORD;
        case ErrorCode::scale: return RELSEM_ERR_SCALE;
        case ErrorCode::boundary_mismatch: return RELSEM_ERR_BOUNDARY_MISMATCH;
        case ErrorCode::missing_entry: return RELSEM_ERR_MISSING_ENTRY;
        case ErrorCode::arity_mismatch: return RELSEM_ERR_ARITY_MISMATCH;
        case ErrorCode::signature_mismatch: return RELSEM_ERR_SIGNATURE_MISMATCH;
        case ErrorCode::free_arity_mismatch: return RELSEM_ERR_FREE_ARITY_MISMATCH;
        case ErrorCode::non_closed_sentence: return RELSEM_ERR_NON_CLOSED_SENTENCE;
        case ErrorCode::unknown_entity: return RELSEM_ERR_UNKNOWN_ENTITY;
        case ErrorCode::precondition: return RELSEM_ERR_PRECONDITION;
        case ErrorCode::internal: return RELSEM_ERR_INTERNAL;
    }
    return RELSEM_ERR_INTERNAL;
}

template <typename F>
relsem_status wrap(F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return RELSEM_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

relsem_status require(bool ok, const char* what) {
    if (!ok) {
        g_last_error = std::string("null argument: ") + what;
        return RELSEM_ERR_PRECONDITION;
    }
    return RELSEM_OK;
}

std::string rows_json(const std::vector<std::string>& free_names, const std::set<Tuple>& rows) {
    nlohmann::json j;
    j["free"] = free_names;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : rows) j["rows"].push_back(row);
    return j.dump(2) + "\n";
}

}  // namespace

extern "C" {

const char* relsem_version(void) {
    return "0.1.0";
}

const char* relsem_last_error(void) {
    return g_last_error.c_str();
}

void relsem_string_free(char* s) {
    delete[] s;
}

relsem_status relsem_grammar_load(const char* json_text, relsem_grammar** out) {
    if (auto st = require(json_text && out, "relsem_grammar_load")) return st;
    return wrap([&] {
        *out = new relsem_grammar{grammar_from_json(json_text)};
        return RELSEM_OK;
    });
}

relsem_status relsem_grammar_to_json(const relsem_grammar* g, char** out) {
    if (auto st = require(g && out, "relsem_grammar_to_json")) return st;
    return wrap([&] {
        *out = dup_string(grammar_to_json(g->impl));
        return RELSEM_OK;
    });
}

void relsem_grammar_free(relsem_grammar* g) {
    delete g;
}

relsem_status relsem_lexicon_load(const char* json_text, const relsem_grammar* g,
                                  relsem_lexicon** out) {
    if (auto st = require(json_text && out, "relsem_lexicon_load")) return st;
    return wrap([&] {
        *out = new relsem_lexicon{lexicon_from_json(json_text, g ? &g->impl : nullptr)};
        return RELSEM_OK;
    });
}

relsem_status relsem_lexicon_to_json(const relsem_lexicon* lex, char** out) {
    if (auto st = require(lex && out, "relsem_lexicon_to_json")) return st;
    return wrap([&] {
        *out = dup_string(lexicon_to_json(lex->impl));
        return RELSEM_OK;
    });
}

void relsem_lexicon_free(relsem_lexicon* lex) {
    delete lex;
}

relsem_status relsem_grammatical(const relsem_grammar* g, const char* sentence,
                                 const char* target_type) {
    if (auto st = require(g && sentence && target_type, "relsem_grammatical")) return st;
    return wrap([&] {
        return grammatical(g->impl, tokenize(sentence), parse_type(target_type)) ? RELSEM_OK
                                                                                 : RELSEM_NO;
    });
}

relsem_status relsem_parse(const relsem_grammar* g, const char* sentence,
                           const char* target_type, relsem_diagram** out) {
    if (auto st = require(g && sentence && target_type && out, "relsem_parse")) return st;
    return wrap([&] {
        auto d = parse(g->impl, tokenize(sentence), parse_type(target_type));
        if (!d) {
            *out = nullptr;
            return RELSEM_NO;
        }
        *out = new relsem_diagram{std::move(*d)};
        return RELSEM_OK;
    });
}

relsem_status relsem_enumerate_parses(const relsem_grammar* g, const char* sentence,
                                      const char* target_type, size_t limit,
                                      relsem_parse_list** out) {
    if (auto st = require(g && sentence && target_type && out, "relsem_enumerate_parses"))
        return st;
    return wrap([&] {
        auto found = enumerate_parses(g->impl, tokenize(sentence), parse_type(target_type),
                                      limit);
        auto* list = new relsem_parse_list;
        for (auto& d : found) list->items.push_back({std::move(d)});
        *out = list;
        return RELSEM_OK;
    });
}

size_t relsem_parse_list_size(const relsem_parse_list* list) {
    return list ? list->items.size() : 0;
}

const relsem_diagram* relsem_parse_list_get(const relsem_parse_list* list, size_t i) {
    if (!list || i >= list->items.size()) return nullptr;
    return &list->items[i];
}

void relsem_parse_list_free(relsem_parse_list* list) {
    delete list;
}

relsem_status relsem_diagram_to_json(const relsem_diagram* d, char** out) {
    if (auto st = require(d && out, "relsem_diagram_to_json")) return st;
    return wrap([&] {
        *out = dup_string(diagram_to_json(d->impl));
        return RELSEM_OK;
    });
}

relsem_status relsem_diagram_to_text(const relsem_diagram* d, char** out) {
    if (auto st = require(d && out, "relsem_diagram_to_text")) return st;
    return wrap([&] {
        *out = dup_string(diagram_to_text(d->impl));
        return RELSEM_OK;
    });
}

relsem_status relsem_diagram_from_json(const relsem_grammar* g, const char* json_text,
                                       relsem_diagram** out) {
    if (auto st = require(g && json_text && out, "relsem_diagram_from_json")) return st;
    return wrap([&] {
        *out = new relsem_diagram{diagram_from_json(json_text, g->impl)};
        return RELSEM_OK;
    });
}

relsem_status relsem_diagram_validate(const relsem_grammar* g, const relsem_diagram* d) {
    if (auto st = require(g && d, "relsem_diagram_validate")) return st;
    return wrap([&] {
        auto check = validate_diagram(g->impl, d->impl);
        if (check.ok) return RELSEM_OK;
        g_last_error = check.reason;
        return RELSEM_NO;
    });
}

void relsem_diagram_free(relsem_diagram* d) {
    delete d;
}

relsem_status relsem_translate(const relsem_grammar* g, const relsem_lexicon* lex,
                               const char* sentence, const char* target_type, char** out) {
    if (auto st = require(g && lex && sentence && target_type && out, "relsem_translate"))
        return st;
    return wrap([&] {
        auto d = parse(g->impl, tokenize(sentence), parse_type(target_type));
        if (!d) {
            g_last_error = "sentence does not parse";
            return RELSEM_NO;
        }
        *out = dup_string(lambda_translate(apply_L(lex->impl, *d)).to_text());
        return RELSEM_OK;
    });
}

relsem_status relsem_eval(const relsem_database* db, const char* query_text, char** out) {
    if (auto st = require(db && query_text && out, "relsem_eval")) return st;
    return wrap([&] {
        Query q = Query::parse(query_text);
        *out = dup_string(rows_json(q.free_names(), eval_rows(q, db->impl.structure)));
        return RELSEM_OK;
    });
}

relsem_status relsem_contains(const char* query1, const char* query2) {
    if (auto st = require(query1 && query2, "relsem_contains")) return st;
    return wrap([&] {
        return contains(Query::parse(query1), Query::parse(query2)) ? RELSEM_OK : RELSEM_NO;
    });
}

relsem_status relsem_entails(const relsem_grammar* g, const relsem_lexicon* lex,
                             const char* sentence1, const char* sentence2,
                             const char* target_type) {
    if (auto st = require(g && lex && sentence1 && sentence2 && target_type, "relsem_entails"))
        return st;
    return wrap([&] {
        auto target = parse_type(target_type);
        auto r1 = parse(g->impl, tokenize(sentence1), target);
        auto r2 = parse(g->impl, tokenize(sentence2), target);
        if (!r1 || !r2) {
            g_last_error = std::string("sentence does not parse: ") +
                           (!r1 ? sentence1 : sentence2);
            return RELSEM_ERR_PRECONDITION;
        }
        return entails(*r1, *r2, lex->impl) ? RELSEM_OK : RELSEM_NO;
    });
}

relsem_status relsem_database_load(const char* json_text, relsem_database** out) {
    if (auto st = require(json_text && out, "relsem_database_load")) return st;
    return wrap([&] {
        *out = new relsem_database{database_from_json(json_text)};
        return RELSEM_OK;
    });
}

relsem_status relsem_database_to_json(const relsem_database* db, char** out) {
    if (auto st = require(db && out, "relsem_database_to_json")) return st;
    return wrap([&] {
        *out = dup_string(database_to_json(db->impl));
        return RELSEM_OK;
    });
}

void relsem_database_free(relsem_database* db) {
    delete db;
}

relsem_status relsem_build_db(const relsem_grammar* g, const relsem_lexicon* lex,
                              const char* corpus_text, const char* linking_json,
                              const char* sentence_type, relsem_database** out) {
    if (auto st = require(g && lex && corpus_text && linking_json && sentence_type && out,
                          "relsem_build_db"))
        return st;
    return wrap([&] {
        std::vector<std::string> lines;
        std::string text(corpus_text), line;
        for (std::size_t pos = 0; pos <= text.size(); ++pos) {
            if (pos == text.size() || text[pos] == '\n') {
                lines.push_back(line);
                line.clear();
            } else {
                line += text[pos];
            }
        }
        Corpus c = corpus_from_lines(g->impl, lines, parse_type(sentence_type));
        EntityLinking mu = linking_from_json(linking_json);
        *out = new relsem_database{compile(c, lex->impl, mu)};
        return RELSEM_OK;
    });
}

relsem_status relsem_ask(const relsem_grammar* g, const relsem_lexicon* lex,
                         const relsem_database* db, const char* question,
                         const char* question_type, char** out) {
    if (auto st = require(g && lex && db && question && question_type && out, "relsem_ask"))
        return st;
    return wrap([&] {
        auto d = parse(g->impl, tokenize(question), parse_type(question_type));
        if (!d) {
            g_last_error = "question does not parse";
            return RELSEM_ERR_PRECONDITION;
        }
        Query q = lambda_translate(apply_L(lex->impl, *d));
        auto rows = eval_rows(q, db->impl.structure);
        *out = dup_string(rows_json(q.free_names(), rows));
        return rows.empty() ? RELSEM_NO : RELSEM_OK;
    });
}

relsem_status relsem_encode_graph(const char* graph_json, int symmetric, char** grammar_json,
                                  char** lexicon_json, char** corpus_text,
                                  char** linking_json) {
    if (auto st = require(graph_json != nullptr, "relsem_encode_graph")) return st;
    return wrap([&] {
        GraphEncoding enc = encode_graph(structure_from_json(graph_json), symmetric != 0);
        if (grammar_json) *grammar_json = dup_string(grammar_to_json(enc.grammar));
        if (lexicon_json) *lexicon_json = dup_string(lexicon_to_json(enc.lexicon));
        if (corpus_text) {
            std::string corpus;
            for (const auto& l : enc.corpus_lines) corpus += l + "\n";
            *corpus_text = dup_string(corpus);
        }
        if (linking_json) *linking_json = dup_string(linking_to_json(enc.linking));
        return RELSEM_OK;
    });
}

}  // extern "C"
