/*
 * relsem -- relational semantics for pregroup grammars.
 *
 * C API of the shared library: opaque handles plus status codes. All
 * functions returning relsem_status set a thread-local message retrievable
 * with relsem_last_error() on failure. Strings returned through char** out
 * parameters are heap-allocated and must be released with
 * relsem_string_free(); handles must be released with their *_free function.
 * Handles are immutable after creation and safe to share across threads.
 */
#ifndef RELSEM_H
#define RELSEM_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum relsem_status {
    RELSEM_OK = 0,
    /* negative result of a decision or search, not an error */
    RELSEM_NO = 1,
    RELSEM_ERR_INVALID_INPUT = 10,
    RELSEM_ERR_CYCLE = 11,
    RELSEM_ERR_UNKNOWN_WORD = 12,
    RELSEM_ERR_SCALE = 13,
    RELSEM_ERR_BOUNDARY_MISMATCH = 14,
    RELSEM_ERR_MISSING_ENTRY = 15,
    RELSEM_ERR_ARITY_MISMATCH = 16,
    RELSEM_ERR_SIGNATURE_MISMATCH = 17,
    RELSEM_ERR_FREE_ARITY_MISMATCH = 18,
    RELSEM_ERR_NON_CLOSED_SENTENCE = 19,
    RELSEM_ERR_UNKNOWN_ENTITY = 20,
    RELSEM_ERR_PRECONDITION = 21,
    RELSEM_ERR_INTERNAL = 99
} relsem_status;

typedef struct relsem_grammar relsem_grammar;
typedef struct relsem_lexicon relsem_lexicon;
typedef struct relsem_database relsem_database;
typedef struct relsem_diagram relsem_diagram;
typedef struct relsem_parse_list relsem_parse_list;

const char* relsem_version(void);

/* Message describing the most recent failure on this thread. */
const char* relsem_last_error(void);

void relsem_string_free(char* s);

/* ----- grammars ------------------------------------------------------- */

relsem_status relsem_grammar_load(const char* json_text, relsem_grammar** out);
relsem_status relsem_grammar_to_json(const relsem_grammar* g, char** out);
void relsem_grammar_free(relsem_grammar* g);

/* ----- lexica ---------------------------------------------------------- */

relsem_status relsem_lexicon_load(const char* json_text, const relsem_grammar* g,
                                  relsem_lexicon** out);
relsem_status relsem_lexicon_to_json(const relsem_lexicon* lex, char** out);
void relsem_lexicon_free(relsem_lexicon* lex);

/* ----- parsing --------------------------------------------------------- */

/* RELSEM_OK when grammatical, RELSEM_NO when not. Types use the surface
 * syntax, e.g. "q" or "*i s o*". */
relsem_status relsem_grammatical(const relsem_grammar* g, const char* sentence,
                                 const char* target_type);

/* Canonically least parse; RELSEM_NO and *out = NULL when none exists. */
relsem_status relsem_parse(const relsem_grammar* g, const char* sentence,
                           const char* target_type, relsem_diagram** out);

/* Up to `limit` parses in canonical order (limit >= 1). May hold zero. */
relsem_status relsem_enumerate_parses(const relsem_grammar* g, const char* sentence,
                                      const char* target_type, size_t limit,
                                      relsem_parse_list** out);
size_t relsem_parse_list_size(const relsem_parse_list* list);
/* Borrowed reference, valid while the list lives. */
const relsem_diagram* relsem_parse_list_get(const relsem_parse_list* list, size_t i);
void relsem_parse_list_free(relsem_parse_list* list);

relsem_status relsem_diagram_to_json(const relsem_diagram* d, char** out);
relsem_status relsem_diagram_to_text(const relsem_diagram* d, char** out);
relsem_status relsem_diagram_from_json(const relsem_grammar* g, const char* json_text,
                                       relsem_diagram** out);
/* RELSEM_OK for a valid diagram; RELSEM_NO with the reason in
 * relsem_last_error() otherwise. */
relsem_status relsem_diagram_validate(const relsem_grammar* g, const relsem_diagram* d);
void relsem_diagram_free(relsem_diagram* d);

/* ----- translation and queries ----------------------------------------- */

/* Parse the sentence, apply the free model and print the query in surface
 * syntax. RELSEM_NO when the sentence does not parse. */
relsem_status relsem_translate(const relsem_grammar* g, const relsem_lexicon* lex,
                               const char* sentence, const char* target_type, char** out);

/* Evaluation result as JSON: {"free": [names...], "rows": [[...], ...]}. */
relsem_status relsem_eval(const relsem_database* db, const char* query_text, char** out);

/* Containment between two queries in surface syntax: RELSEM_OK = contained,
 * RELSEM_NO = not contained. */
relsem_status relsem_contains(const char* query1, const char* query2);

/* Entailment between two sentences at the same target type. */
relsem_status relsem_entails(const relsem_grammar* g, const relsem_lexicon* lex,
                             const char* sentence1, const char* sentence2,
                             const char* target_type);

/* ----- databases and question answering -------------------------------- */

relsem_status relsem_database_load(const char* json_text, relsem_database** out);
/* Serialises the structure, with its provenance section when present. */
relsem_status relsem_database_to_json(const relsem_database* db, char** out);
void relsem_database_free(relsem_database* db);

/* Compile a corpus (one sentence per line, parsed at `sentence_type`) plus an
 * entity linking into a database with provenance. */
relsem_status relsem_build_db(const relsem_grammar* g, const relsem_lexicon* lex,
                              const char* corpus_text, const char* linking_json,
                              const char* sentence_type, relsem_database** out);

/* Answer a question; result JSON as for relsem_eval. RELSEM_NO when the
 * answer set is empty. */
relsem_status relsem_ask(const relsem_grammar* g, const relsem_lexicon* lex,
                         const relsem_database* db, const char* question,
                         const char* question_type, char** out);

/* Encode a graph (database JSON with one binary table) as a corpus over the
 * fixed micro-grammar. Every out parameter may be NULL to skip it. */
relsem_status relsem_encode_graph(const char* graph_json, int symmetric,
                                  char** grammar_json, char** lexicon_json,
                                  char** corpus_text, char** linking_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RELSEM_H */
