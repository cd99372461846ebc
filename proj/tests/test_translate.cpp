#include <doctest.h>

#include "relsem/cq/engine.hpp"
#include "relsem/diagram/lexicon.hpp"
#include "relsem/diagram/translate.hpp"
#include "relsem/errors.hpp"
#include "relsem/io/json_io.hpp"
#include "relsem/pregroup/parser.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "support/subprocess.hpp"

using namespace relsem;

static Grammar demo_grammar() {
    return grammar_from_json(testsupport::read_file(testsupport::demo_dir() + "/grammar.json"));
}
static Lexicon demo_lexicon(const Grammar& g) {
    return lexicon_from_json(testsupport::read_file(testsupport::demo_dir() + "/lexicon.json"),
                             &g);
}

TEST_CASE("apply_L reproduces the worked example query") {
    Grammar g = demo_grammar();
    Lexicon lex = demo_lexicon(g);
    auto r = parse(g, tokenize("Who influenced the philosopher who discovered calculus"),
                   parse_type("q"));
    REQUIRE(r.has_value());
    Query q = lambda_translate(apply_L(lex, *r));
    CHECK(q.to_text() == "exists x1 x2 . infl(x0,x1) & phil(x1) & disc(x1,x2) & calc(x2)");
    CHECK(q.free_names() == std::vector<std::string>{"x0"});
}

TEST_CASE("apply_L: single noun and closed sentence") {
    Grammar g = demo_grammar();
    Lexicon lex = demo_lexicon(g);

    auto noun = parse(g, {"Spinoza"}, parse_type("n"));
    REQUIRE(noun.has_value());
    Query nq = lambda_translate(apply_L(lex, *noun));
    CHECK(nq.to_text() == "Spin(x0)");

    auto svo = parse(g, tokenize("Spinoza influenced Leibniz"), parse_type("s"));
    REQUIRE(svo.has_value());
    Wiring w = apply_L(lex, *svo);
    CHECK(w.codomain.empty());
    CHECK(w.boxes.size() == 3);
    CHECK(w.wires.size() == 2);
    Query sq = lambda_translate(w);
    CHECK(sq.to_text() == "exists x0 x1 . Spin(x0) & infl(x0,x1) & Leib(x1)");
}

TEST_CASE("apply_L: missing entry and cup arity mismatch") {
    Grammar g = demo_grammar();
    auto r = parse(g, {"Spinoza"}, parse_type("n"));
    REQUIRE(r.has_value());
    Lexicon empty_lex({}, {});
    CHECK_THROWS_AS(apply_L(empty_lex, *r), MissingEntryError);

    // n carries 2 wires, i carries 1: the cup joining them cannot match
    auto poset = BasicTypePoset::closure({"n", "i", "s"}, {{"n", "i"}});
    Grammar g2({"x", "v"}, poset, {{"x", parse_type("n")}, {"v", parse_type("*i s")}});
    Lexicon lex2({{"n", 2}, {"i", 1}, {"s", 0}},
                 {{"x", parse_type("n"), Lexicon::symbol_template("X", 2)},
                  {"v", parse_type("*i s"), Lexicon::symbol_template("V", 1)}});
    auto r2 = parse(g2, {"x", "v"}, parse_type("s"));
    REQUIRE(r2.has_value());
    CHECK_THROWS_AS(apply_L(lex2, *r2), ArityMismatchError);
}

TEST_CASE("apply_L: wide bundles merge in reversed order") {
    // one 2-wire noun cancelling into a 2-wire verb slot: planar nesting
    // pairs the rightmost noun wire with the leftmost verb wire
    auto poset = BasicTypePoset::closure({"n", "s"}, {});
    Grammar g({"ab", "v"}, poset, {{"ab", parse_type("n")}, {"v", parse_type("*n s")}});
    Lexicon lex({{"n", 2}, {"s", 0}},
                {{"ab", parse_type("n"), Lexicon::symbol_template("A", 2)},
                 {"v", parse_type("*n s"), Lexicon::symbol_template("V", 2)}});
    auto r = parse(g, {"ab", "v"}, parse_type("s"));
    REQUIRE(r.has_value());
    Query q = lambda_translate(apply_L(lex, *r));
    CHECK(q.to_text() == "exists x0 x1 . A(x0,x1) & V(x1,x0)");
}

TEST_CASE("lambda examples") {
    CHECK(lambda_translate(Wiring{}).to_text() == "true");

    Wiring open;
    open.wires = {0, 1};
    open.boxes = {{"R", {0, 1}}};
    open.codomain = {0, 1};
    Query q = lambda_translate(open);
    CHECK(q.to_text() == "R(x0,x1)");
    CHECK(q.free_names() == std::vector<std::string>{"x0", "x1"});

    // repeated boundary wire: the diagonal
    Wiring diag;
    diag.wires = {0};
    diag.codomain = {0, 0};
    Query dq = lambda_translate(diag);
    CHECK(dq.free_vars() == std::vector<std::string>{"x0", "x0"});
    CHECK(dq.to_text() == "x1 = x0");

    // isolated non-boundary wire: a bound variable with no atoms
    Wiring iso;
    iso.wires = {0};
    Query iq = lambda_translate(iso);
    CHECK(iq.to_text() == "exists x0 . true");
}

TEST_CASE("theta examples") {
    CHECK(theta_translate(Query::parse("true")) == Wiring{});

    Wiring w = theta_translate(Query::parse("R(x0,x1)"));
    CHECK(w.codomain.size() == 2);
    CHECK(w.boxes.size() == 1);
    CHECK(w.domain.empty());

    // the worked example query and the parsed wiring are semantically equal
    Grammar g = demo_grammar();
    Lexicon lex = demo_lexicon(g);
    auto r = parse(g, tokenize("Who influenced the philosopher who discovered calculus"),
                   parse_type("q"));
    REQUIRE(r.has_value());
    Query from_parse = lambda_translate(apply_L(lex, *r));
    Query via_theta = lambda_translate(theta_translate(from_parse));
    CHECK(contains(from_parse, via_theta));
    CHECK(contains(via_theta, from_parse));
}

TEST_CASE("lambda . theta round trip up to mutual containment") {
    testsupport::Rng rng(55);
    for (int it = 0; it < 150; ++it) {
        Query q = testsupport::random_query(rng, 5, 4);
        Query back = lambda_translate(theta_translate(q));
        CHECK(contains(q, back));
        CHECK(contains(back, q));
    }
}

TEST_CASE("direct_eval examples") {
    RelStructure k({"1", "2", "3"},
                   {{"R", {{"1", "2"}, {"2", "3"}, {"3", "3"}}}, {"S", {{"2"}, {"3"}}}});

    Wiring single;
    single.wires = {0, 1};
    single.boxes = {{"R", {0, 1}}};
    single.codomain = {0, 1};
    CHECK(direct_eval(single, k) == k.table("R"));

    // two boxes sharing the middle wire: a relational join
    Wiring join;
    join.wires = {0, 1};
    join.boxes = {{"R", {0, 1}}, {"S", {1}}};
    join.codomain = {0, 1};
    CHECK(direct_eval(join, k) == std::set<Tuple>{{"1", "2"}, {"2", "3"}, {"3", "3"}});

    // closed wiring: the Boolean query
    Wiring closed;
    closed.wires = {0};
    closed.boxes = {{"S", {0}}};
    CHECK(direct_eval(closed, k) == std::set<Tuple>{{}});
    Wiring closed_empty;
    closed_empty.wires = {0};
    closed_empty.boxes = {{"T", {0}}};
    CHECK(direct_eval(closed_empty, k).empty());

    // arity mismatch against the tables
    Wiring bad;
    bad.wires = {0};
    bad.boxes = {{"R", {0}}};
    CHECK_THROWS_AS(direct_eval(bad, k), ArityMismatchError);

    // isolated boundary wire ranges over the universe
    Wiring free_wire;
    free_wire.wires = {0};
    free_wire.codomain = {0};
    CHECK(direct_eval(free_wire, k) == std::set<Tuple>{{"1"}, {"2"}, {"3"}});

    // isolated bound wire needs a nonempty universe
    Wiring iso;
    iso.wires = {0};
    CHECK(direct_eval(iso, k) == std::set<Tuple>{{}});
    CHECK(direct_eval(iso, RelStructure{}).empty());
}

TEST_CASE("factorization: direct_eval equals eval of the translation") {
    testsupport::Rng rng(808);
    int done = 0;
    for (int it = 0; it < 600 && done < 120; ++it) {
        Grammar g = testsupport::random_grammar(rng);
        Lexicon lex = testsupport::random_lexicon(rng, g);
        auto words = testsupport::random_utterance(rng, g, 4);
        auto target = testsupport::random_target(rng, g);
        auto r = parse(g, words, target);
        if (!r) continue;
        Wiring d = apply_L(lex, *r);
        RelStructure k = testsupport::random_interpretation(rng, lex, 3);
        CHECK(direct_eval(d, k) == eval_rows(lambda_translate(d), k));
        ++done;
    }
    CHECK(done >= 100);
}

TEST_CASE("direct_eval agrees with eval on random wirings too") {
    testsupport::Rng rng(909);
    for (int it = 0; it < 150; ++it) {
        Wiring d = testsupport::random_wiring(rng, rng.below(2), rng.below(3));
        RelStructure k = testsupport::random_structure(rng, 3);
        CHECK(direct_eval(d, k) == eval_rows(lambda_translate(d), k));
    }
}
