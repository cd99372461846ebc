// relsem command line: parse, translate, evaluate, compile and ask, all
// through the shared library's C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "relsem.h"

namespace {

constexpr int kExitNo = 1;
constexpr int kExitError = 2;

struct Options {
    std::string format = "text";
    unsigned long seed = 0;  // reserved for randomized utilities
};

[[noreturn]] void die(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    std::exit(kExitError);
}

[[noreturn]] void die_status() {
    die(relsem_last_error());
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) die("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) die("cannot write file: " + path);
    out << content;
}

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { relsem_string_free(ptr); }
    std::string str() const { return ptr ? ptr : ""; }
};

struct GrammarHandle {
    relsem_grammar* ptr = nullptr;
    ~GrammarHandle() { relsem_grammar_free(ptr); }
};
struct LexiconHandle {
    relsem_lexicon* ptr = nullptr;
    ~LexiconHandle() { relsem_lexicon_free(ptr); }
};
struct DatabaseHandle {
    relsem_database* ptr = nullptr;
    ~DatabaseHandle() { relsem_database_free(ptr); }
};

GrammarHandle load_grammar(const std::string& path) {
    GrammarHandle g;
    if (relsem_grammar_load(read_file(path).c_str(), &g.ptr) != RELSEM_OK) die_status();
    return g;
}

LexiconHandle load_lexicon(const std::string& path, const GrammarHandle& g) {
    LexiconHandle lex;
    if (relsem_lexicon_load(read_file(path).c_str(), g.ptr, &lex.ptr) != RELSEM_OK)
        die_status();
    return lex;
}

DatabaseHandle load_database(const std::string& path) {
    DatabaseHandle db;
    if (relsem_database_load(read_file(path).c_str(), &db.ptr) != RELSEM_OK) die_status();
    return db;
}

// {"free": [...], "rows": [[...], ...]} -> one line per row
void print_rows(const Options& opt, const std::string& rows_json, bool named) {
    if (opt.format == "json") {
        std::cout << rows_json;
        return;
    }
    auto j = nlohmann::json::parse(rows_json);
    const auto& free = j["free"];
    for (const auto& row : j["rows"]) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) line += named ? ", " : ",";
            if (named) line += free[i].get<std::string>() + "=";
            line += row[i].get<std::string>();
        }
        if (row.empty()) line = "()";
        std::cout << line << "\n";
    }
}

void print_diagram(const Options& opt, const relsem_diagram* d) {
    OwnedString text;
    relsem_status st = opt.format == "json" ? relsem_diagram_to_json(d, &text.ptr)
                                            : relsem_diagram_to_text(d, &text.ptr);
    if (st != RELSEM_OK) die_status();
    std::cout << text.str();
}

int exit_code(relsem_status st) {
    if (st == RELSEM_OK) return 0;
    if (st == RELSEM_NO) return kExitNo;
    die_status();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"relational semantics for pregroup grammars"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "seed for randomized utilities (reserved)");

    std::string grammar_path, lexicon_path, database_path, corpus_path, linking_path;
    std::string sentence, sentence2, query1, query2, target, out_path, graph_path;
    bool all = false;
    std::size_t limit = 64;
    bool symmetric = false;

    auto* cmd_parse = app.add_subcommand("parse", "parse a sentence into a reduction diagram");
    cmd_parse->add_option("grammar", grammar_path)->required();
    cmd_parse->add_option("sentence", sentence)->required();
    cmd_parse->add_option("--type", target, "target type")->default_val("s");
    cmd_parse->add_flag("--all", all, "print all parses");
    cmd_parse->add_option("--limit", limit, "parse enumeration limit")->capture_default_str();

    auto* cmd_grammatical = app.add_subcommand("grammatical", "decide grammaticality");
    cmd_grammatical->add_option("grammar", grammar_path)->required();
    cmd_grammatical->add_option("sentence", sentence)->required();
    cmd_grammatical->add_option("--type", target)->default_val("s");

    auto* cmd_translate =
        app.add_subcommand("translate", "translate a sentence into a conjunctive query");
    cmd_translate->add_option("grammar", grammar_path)->required();
    cmd_translate->add_option("lexicon", lexicon_path)->required();
    cmd_translate->add_option("sentence", sentence)->required();
    cmd_translate->add_option("--type", target)->default_val("s");

    auto* cmd_eval = app.add_subcommand("eval", "evaluate a query against a database");
    cmd_eval->add_option("database", database_path)->required();
    cmd_eval->add_option("query", query1)->required();

    auto* cmd_contain = app.add_subcommand("contain", "decide query containment (q1 in q2)");
    cmd_contain->add_option("query1", query1)->required();
    cmd_contain->add_option("query2", query2)->required();

    auto* cmd_entail = app.add_subcommand("entail", "decide entailment between two sentences");
    cmd_entail->add_option("grammar", grammar_path)->required();
    cmd_entail->add_option("lexicon", lexicon_path)->required();
    cmd_entail->add_option("sentence1", sentence)->required();
    cmd_entail->add_option("sentence2", sentence2)->required();
    cmd_entail->add_option("--type", target)->default_val("s");

    auto* cmd_build = app.add_subcommand("build-db", "compile a corpus into a database");
    cmd_build->add_option("grammar", grammar_path)->required();
    cmd_build->add_option("lexicon", lexicon_path)->required();
    cmd_build->add_option("corpus", corpus_path)->required();
    cmd_build->add_option("linking", linking_path)->required();
    cmd_build->add_option("--out", out_path)->required();
    cmd_build->add_option("--type", target, "sentence type")->default_val("s");

    auto* cmd_ask = app.add_subcommand("ask", "answer a question against a database");
    cmd_ask->add_option("grammar", grammar_path)->required();
    cmd_ask->add_option("lexicon", lexicon_path)->required();
    cmd_ask->add_option("database", database_path)->required();
    cmd_ask->add_option("question", sentence)->required();
    cmd_ask->add_option("--type", target, "question type")->default_val("q");

    auto* cmd_encode = app.add_subcommand("encode-graph", "encode a graph as a corpus");
    cmd_encode->add_option("graph", graph_path)->required();
    cmd_encode->add_option("--grammar", grammar_path)->required();
    cmd_encode->add_option("--lexicon", lexicon_path)->required();
    cmd_encode->add_option("--corpus", corpus_path)->required();
    cmd_encode->add_option("--linking", linking_path)->required();
    cmd_encode->add_flag("--symmetric", symmetric, "emit each edge in both directions");

    CLI11_PARSE(app, argc, argv);

    if (cmd_parse->parsed()) {
        auto g = load_grammar(grammar_path);
        if (!all) {
            relsem_diagram* d = nullptr;
            relsem_status st = relsem_parse(g.ptr, sentence.c_str(), target.c_str(), &d);
            int code = exit_code(st);
            if (code == 0) {
                print_diagram(opt, d);
                relsem_diagram_free(d);
            } else {
                std::cout << "no parse\n";
            }
            return code;
        }
        relsem_parse_list* list = nullptr;
        if (relsem_enumerate_parses(g.ptr, sentence.c_str(), target.c_str(), limit, &list) !=
            RELSEM_OK)
            die_status();
        const std::size_t n = relsem_parse_list_size(list);
        for (std::size_t i = 0; i < n; ++i) {
            if (i && opt.format == "text") std::cout << "--\n";
            print_diagram(opt, relsem_parse_list_get(list, i));
        }
        relsem_parse_list_free(list);
        if (n == 0) std::cout << "no parse\n";
        return n > 0 ? 0 : kExitNo;
    }

    if (cmd_grammatical->parsed()) {
        auto g = load_grammar(grammar_path);
        relsem_status st = relsem_grammatical(g.ptr, sentence.c_str(), target.c_str());
        int code = exit_code(st);
        std::cout << (code == 0 ? "yes" : "no") << "\n";
        return code;
    }

    if (cmd_translate->parsed()) {
        auto g = load_grammar(grammar_path);
        auto lex = load_lexicon(lexicon_path, g);
        OwnedString text;
        relsem_status st =
            relsem_translate(g.ptr, lex.ptr, sentence.c_str(), target.c_str(), &text.ptr);
        int code = exit_code(st);
        if (code == 0)
            std::cout << text.str() << "\n";
        else
            std::cout << "no parse\n";
        return code;
    }

    if (cmd_eval->parsed()) {
        auto db = load_database(database_path);
        OwnedString rows;
        if (relsem_eval(db.ptr, query1.c_str(), &rows.ptr) != RELSEM_OK) die_status();
        print_rows(opt, rows.str(), /*named=*/true);
        return 0;
    }

    if (cmd_contain->parsed()) {
        int code = exit_code(relsem_contains(query1.c_str(), query2.c_str()));
        std::cout << (code == 0 ? "yes" : "no") << "\n";
        return code;
    }

    if (cmd_entail->parsed()) {
        auto g = load_grammar(grammar_path);
        auto lex = load_lexicon(lexicon_path, g);
        int code = exit_code(relsem_entails(g.ptr, lex.ptr, sentence.c_str(),
                                            sentence2.c_str(), target.c_str()));
        std::cout << (code == 0 ? "yes" : "no") << "\n";
        return code;
    }

    if (cmd_build->parsed()) {
        auto g = load_grammar(grammar_path);
        auto lex = load_lexicon(lexicon_path, g);
        DatabaseHandle db;
        if (relsem_build_db(g.ptr, lex.ptr, read_file(corpus_path).c_str(),
                            read_file(linking_path).c_str(), target.c_str(),
                            &db.ptr) != RELSEM_OK)
            die_status();
        OwnedString text;
        if (relsem_database_to_json(db.ptr, &text.ptr) != RELSEM_OK) die_status();
        write_file(out_path, text.str());
        return 0;
    }

    if (cmd_ask->parsed()) {
        auto g = load_grammar(grammar_path);
        auto lex = load_lexicon(lexicon_path, g);
        auto db = load_database(database_path);
        OwnedString rows;
        relsem_status st =
            relsem_ask(g.ptr, lex.ptr, db.ptr, sentence.c_str(), target.c_str(), &rows.ptr);
        int code = exit_code(st);
        print_rows(opt, rows.str(), /*named=*/false);
        return code;
    }

    if (cmd_encode->parsed()) {
        OwnedString grammar_json, lexicon_json, corpus_text, linking_json;
        if (relsem_encode_graph(read_file(graph_path).c_str(), symmetric ? 1 : 0,
                                &grammar_json.ptr, &lexicon_json.ptr, &corpus_text.ptr,
                                &linking_json.ptr) != RELSEM_OK)
            die_status();
        write_file(grammar_path, grammar_json.str());
        write_file(lexicon_path, lexicon_json.str());
        write_file(corpus_path, corpus_text.str());
        write_file(linking_path, linking_json.str());
        return 0;
    }

    return kExitError;
}
