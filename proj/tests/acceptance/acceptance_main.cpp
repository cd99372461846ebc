// Acceptance suite: one criterion per function, one PASS/FAIL line each,
// nonzero exit when anything fails. Oracles come from tests/support and are
// independent of the implementation paths they check.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "relsem/cq/engine.hpp"
#include "relsem/cq/hom.hpp"
#include "relsem/cq/query.hpp"
#include "relsem/diagram/lexicon.hpp"
#include "relsem/diagram/translate.hpp"
#include "relsem/io/json_io.hpp"
#include "relsem/pregroup/parser.hpp"
#include "relsem/qa/graph.hpp"
#include "relsem/qa/pipeline.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "support/subprocess.hpp"

using namespace relsem;
using testsupport::cli_path;
using testsupport::demo_dir;
using testsupport::run;

namespace {

struct Criterion {
    std::string name;
    double time_budget_s;
    std::function<void(std::ostream&)> body;  // throws on failure
};

struct Failure {
    std::string what;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

// --- 1. paper example end to end through the CLI ---------------------------

void criterion_paper_example(std::ostream& log) {
    const std::string question = "Who influenced the philosopher who discovered calculus?";

    auto parse_run = run({cli_path(), "parse", demo_dir() + "/grammar.json", question,
                          "--type", "q"});
    require(parse_run.exit_code == 0, "parse of the question exited " +
                                          std::to_string(parse_run.exit_code));

    auto translate_run = run({cli_path(), "translate", demo_dir() + "/grammar.json",
                              demo_dir() + "/lexicon.json", question, "--type", "q"});
    const std::string want =
        "exists x1 x2 . infl(x0,x1) & phil(x1) & disc(x1,x2) & calc(x2)\n";
    require(translate_run.exit_code == 0, "translate failed");
    require(translate_run.out == want,
            "translate emitted \"" + translate_run.out + "\" instead of \"" + want + "\"");

    std::string dir = testsupport::make_temp_dir();
    auto build_run = run({cli_path(), "build-db", demo_dir() + "/grammar.json",
                          demo_dir() + "/lexicon.json", demo_dir() + "/corpus.txt",
                          demo_dir() + "/linking.json", "--out", dir + "/db.json"});
    require(build_run.exit_code == 0, "build-db failed");

    auto ask_run = run({cli_path(), "ask", demo_dir() + "/grammar.json",
                        demo_dir() + "/lexicon.json", dir + "/db.json", question, "--type",
                        "q"});
    require(ask_run.exit_code == 0, "ask exited " + std::to_string(ask_run.exit_code));
    require(ask_run.out == "Spinoza\n", "ask answered \"" + ask_run.out + "\"");
    log << "parse+translate+build-db+ask all agree with the worked example";
}

// --- 2. parser vs the brute-force reduction oracle --------------------------

void criterion_parser_oracle(std::ostream& log) {
    testsupport::Rng rng(20240 + 2);
    int grammars = 0, utterances = 0;
    while (grammars < 200) {
        Grammar g = testsupport::random_grammar(rng);
        ++grammars;
        for (int u = 0; u < 3; ++u) {
            auto words = testsupport::random_utterance(rng, g, 5);
            auto target = testsupport::random_target(rng, g);
            auto oracle = testsupport::oracle_parse_set(g, words, target);
            require(grammatical(g, words, target) == !oracle.empty(),
                    "grammaticality disagrees with the oracle");
            auto all = enumerate_parses(g, words, target, 100000);
            std::set<testsupport::OracleParse> got;
            for (const auto& d : all) {
                require(validate_diagram(g, d).ok, "emitted diagram fails validation");
                got.insert({d.entry_indices, d.matching});
            }
            require(got.size() == all.size(), "duplicate diagrams emitted");
            require(got == oracle, "parse enumeration disagrees with the oracle");
            if (!oracle.empty()) {
                auto first = parse(g, words, target);
                require(first.has_value(), "parse misses an existing reduction");
                require(got.count({first->entry_indices, first->matching}) == 1,
                        "canonical parse not among the enumerated set");
            }
            ++utterances;
        }
    }
    log << grammars << " grammars, " << utterances << " utterances, zero discrepancies";
}

// --- 3. homomorphism search vs exhaustive map enumeration -------------------

void criterion_hom_oracle(std::ostream& log) {
    testsupport::Rng rng(20240 + 3);
    int pairs = 0;
    while (pairs < 500) {
        RelStructure src = testsupport::random_structure(rng, 3);
        RelStructure dst = testsupport::random_structure(rng, 3);
        Hom pins;
        if (rng.chance(25))
            pins[src.universe()[rng.below(src.universe().size())]] =
                dst.universe()[rng.below(dst.universe().size())];
        auto brute = testsupport::all_maps_homs(src, dst, pins);
        auto found = enumerate_homomorphisms(src, dst, pins);
        require(found.size() == brute.size(),
                "homomorphism count mismatch: got " + std::to_string(found.size()) +
                    ", oracle " + std::to_string(brute.size()));
        require(std::set<Hom>(found.begin(), found.end()) ==
                    std::set<Hom>(brute.begin(), brute.end()),
                "homomorphism sets differ");
        require(find_homomorphism(src, dst, pins).has_value() == !brute.empty(),
                "find/enumerate disagree");
        ++pairs;
    }
    log << pairs << " structure pairs, exact counts match";
}

// --- 4. evaluation vs direct satisfaction semantics --------------------------

void criterion_eval_equivalence(std::ostream& log) {
    testsupport::Rng rng(20240 + 4);
    int pairs = 0;
    while (pairs < 200) {
        Query q = testsupport::random_query(rng, 4, 4);
        RelStructure k = testsupport::random_structure(rng, 4);
        require(eval(q, k) == testsupport::satisfaction_eval(q, k),
                "eval disagrees with satisfaction semantics");
        ++pairs;
    }
    log << pairs << " (query, structure) pairs agree";
}

// --- 5. containment vs the canonical-database oracle -------------------------

void criterion_containment_oracle(std::ostream& log) {
    testsupport::Rng rng(20240 + 5);
    int pairs = 0, positive = 0;
    while (pairs < 200) {
        Query q1 = testsupport::random_query(rng, 4, 4);
        Query q2 = testsupport::random_query(rng, 4, 4);
        if (q1.free_arity() != q2.free_arity()) continue;
        bool got = contains(q1, q2);
        bool want = testsupport::containment_oracle(q1, q2);
        require(got == want, "containment disagrees with the canonical-database oracle");
        positive += want ? 1 : 0;
        ++pairs;
    }
    // the oracle must discriminate, otherwise the direction is untested
    require(positive > 10 && positive < 190, "degenerate containment sample");
    log << pairs << " query pairs agree (" << positive
        << " contained); hom direction CM(q2)->CM(q1) confirmed";
}

// --- 6. lambda . theta round trip --------------------------------------------

void criterion_round_trip(std::ostream& log) {
    testsupport::Rng rng(20240 + 6);
    int queries = 0;
    while (queries < 100) {
        Query q = testsupport::random_query(rng, 5, 4);
        Query back = lambda_translate(theta_translate(q));
        require(contains(q, back) && contains(back, q),
                "lambda(theta(q)) is not equivalent to q for: " + q.to_text());
        ++queries;
    }
    log << queries << " queries mutually contain their round trips";
}

// --- 7. factorization: direct wiring evaluation = query evaluation -----------

void criterion_factorization(std::ostream& log) {
    testsupport::Rng rng(20240 + 7);
    int done = 0, attempts = 0;
    while (done < 100 && attempts < 5000) {
        ++attempts;
        Grammar g = testsupport::random_grammar(rng);
        Lexicon lex = testsupport::random_lexicon(rng, g);
        auto words = testsupport::random_utterance(rng, g, 4);
        auto target = testsupport::random_target(rng, g);
        auto r = parse(g, words, target);
        if (!r) continue;
        Wiring d = apply_L(lex, *r);
        RelStructure k = testsupport::random_interpretation(rng, lex, 3);
        require(direct_eval(d, k) == eval_rows(lambda_translate(d), k),
                "direct wiring evaluation disagrees with query evaluation");
        ++done;
    }
    require(done >= 100, "could not generate enough parseable samples");
    log << done << " lexicon/parse/structure triples agree";
}

// --- 8. NP-hardness embedding through the CLI --------------------------------

void criterion_hardness_embedding(std::ostream& log) {
    std::string dir = testsupport::make_temp_dir();
    auto encode_and_build = [&](const std::string& tag, const std::string& graph_json) {
        std::string base = dir + "/" + tag;
        testsupport::write_file(base + ".graph.json", graph_json);
        auto enc = run({cli_path(), "encode-graph", base + ".graph.json", "--grammar",
                        base + ".g.json", "--lexicon", base + ".l.json", "--corpus",
                        base + ".c.txt", "--linking", base + ".mu.json"});
        require(enc.exit_code == 0, tag + ": encode-graph failed");
        auto build = run({cli_path(), "build-db", base + ".g.json", base + ".l.json",
                          base + ".c.txt", base + ".mu.json", "--out", base + ".db.json"});
        require(build.exit_code == 0, tag + ": build-db failed");
        return base;
    };

    const std::string triangle_q = cycle_question("rel", 3);

    // triangle pattern into a single loop: answer nonempty
    std::string loop = encode_and_build(
        "loop", R"({"universe": ["z"], "tables": {"rel": [["z","z"]]}})");
    auto ask_loop = run({cli_path(), "ask", loop + ".g.json", loop + ".l.json",
                         loop + ".db.json", triangle_q, "--type", "q"});
    require(ask_loop.exit_code == 0 && ask_loop.out == "z\n",
            "triangle pattern into the loop gave \"" + ask_loop.out + "\"");

    // triangle pattern into the directed 2-cycle: empty
    std::string c2 = encode_and_build(
        "c2", R"({"universe": ["a", "b"], "tables": {"rel": [["a","b"], ["b","a"]]}})");
    auto ask_c2 = run({cli_path(), "ask", c2 + ".g.json", c2 + ".l.json", c2 + ".db.json",
                       triangle_q, "--type", "q"});
    require(ask_c2.exit_code == 1, "triangle pattern into the 2-cycle should be empty");

    // cross-check both against the brute-force graph homomorphism oracle
    auto check_against_brute = [&](const std::string& graph_json, const std::string& base,
                                   const std::string& utterance) {
        RelStructure g = structure_from_json(graph_json);
        GraphEncoding enc = encode_graph(g, false);
        auto q = parse(enc.grammar, tokenize(utterance), parse_type("q"));
        require(q.has_value(), "pattern question does not parse");
        Query pattern = lambda_translate(apply_L(enc.lexicon, *q));
        std::set<Tuple> expected;
        for (const auto& h :
             testsupport::all_maps_homs(canonical_structure(pattern), g)) {
            Tuple row;
            for (const auto& v : pattern.free_vars()) row.push_back(h.at(v));
            expected.insert(row);
        }
        auto ask = run({cli_path(), "ask", base + ".g.json", base + ".l.json",
                        base + ".db.json", utterance, "--type", "q"});
        std::set<Tuple> got;
        std::istringstream lines(ask.out);
        std::string line;
        while (std::getline(lines, line))
            if (!line.empty()) got.insert({line});
        require(got == expected, "CLI answers differ from graph-hom brute force");
    };
    check_against_brute(R"({"universe": ["z"], "tables": {"rel": [["z","z"]]}})", loop,
                        triangle_q);
    check_against_brute(
        R"({"universe": ["a", "b"], "tables": {"rel": [["a","b"], ["b","a"]]}})", c2,
        triangle_q);
    check_against_brute(
        R"({"universe": ["a", "b"], "tables": {"rel": [["a","b"], ["b","a"]]}})", c2,
        cycle_question("rel", 2));
    log << "triangle->loop nonempty, triangle->2-cycle empty, both match brute force";
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"1. paper example end to end", 1.0, criterion_paper_example},
        {"2. parser oracle equivalence", 60.0, criterion_parser_oracle},
        {"3. homomorphism oracle equivalence", 30.0, criterion_hom_oracle},
        {"4. evaluation equivalence", 30.0, criterion_eval_equivalence},
        {"5. containment oracle", 30.0, criterion_containment_oracle},
        {"6. lambda-theta round trip", 30.0, criterion_round_trip},
        {"7. factorization invariant", 30.0, criterion_factorization},
        {"8. NP-hardness embedding", 5.0, criterion_hardness_embedding},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::ostringstream log;
        const auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            c.body(log);
        } catch (const Failure& f) {
            error = f.what;
        } catch (const std::exception& e) {
            error = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (error.empty() && elapsed > c.time_budget_s)
            error = "exceeded the " + std::to_string(c.time_budget_s) + "s budget";
        if (error.empty()) {
            std::printf("PASS  %-38s (%.2fs)  %s\n", c.name.c_str(), elapsed,
                        log.str().c_str());
        } else {
            std::printf("FAIL  %-38s (%.2fs)  %s\n", c.name.c_str(), elapsed, error.c_str());
            ++failures;
        }
    }
    if (failures) std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
