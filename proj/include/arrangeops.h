/* C interface to the arrangeops library: exact operads of planar rooted line
 * arrangements and their companion operads, plus the derived analyses.
 *
 * All functions return an aop_status; results come back through out
 * parameters. Strings returned through char** are heap-allocated and must be
 * released with aop_string_free. Documents are opaque handles released with
 * aop_doc_free. aop_last_error() returns a thread-local detail message for
 * the most recent failing call.
 */
#ifndef ARRANGEOPS_H
#define ARRANGEOPS_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum aop_status {
    AOP_OK = 0,
    AOP_ERR_ARGUMENT = 1,         /* null handle, unknown name, bad request */
    AOP_ERR_PARSE = 2,            /* malformed JSON or rational literal */
    AOP_ERR_VALIDATION = 3,       /* a document invariant is violated */
    AOP_ERR_INDEX = 4,            /* composition slot out of range */
    AOP_ERR_DOMAIN = 5,           /* parameter outside its stated domain */
    AOP_ERR_NOT_GENERIC = 6,      /* coincident collision of three or more lines */
    AOP_ERR_NON_FACTORIZABLE = 7, /* multi-particle event, non-Yang-Baxter theory */
    AOP_ERR_LAW_FAILURE = 8,      /* a law or residual check failed */
    AOP_ERR_IO = 9,               /* file could not be read or written */
    AOP_ERR_INTERNAL = 10
} aop_status;

typedef struct aop_doc aop_doc;

const char* aop_version(void);
const char* aop_last_error(void);

/* ---- documents ---- */

aop_status aop_doc_from_json(const char* json, aop_doc** out);
aop_status aop_doc_read_file(const char* path, aop_doc** out);
aop_status aop_doc_to_json(const aop_doc* doc, char** json_out);
/* "arrangement" | "tiling" | "points" | "chain"; NULL on a null handle. */
const char* aop_doc_kind(const aop_doc* doc);
int aop_doc_arity(const aop_doc* doc);
void aop_doc_free(aop_doc* doc);
void aop_string_free(char* s);

/* ---- operations ---- */

/* Partial composition a o_slot b for two documents of the same kind;
 * slot is 1-based. */
aop_status aop_compose(const aop_doc* a, int slot, const aop_doc* b, aop_doc** out);

/* Arrangement analyses. Results are JSON strings documented in the README. */
aop_status aop_normalize(const aop_doc* arrangement, char** json_out);
aop_status aop_decompose(const aop_doc* arrangement, char** json_out);
aop_status aop_classify(const aop_doc* arrangement, char** json_out);
aop_status aop_project(const aop_doc* arrangement, const char* at_q, const char* at_t,
                       aop_doc** out);
aop_status aop_envelope(const aop_doc* arrangement, char** json_out);
aop_status aop_regions(const aop_doc* arrangement, long long* count_out);
aop_status aop_permutahedron(const aop_doc* arrangement, char** json_out);
aop_status aop_reduced_word(const aop_doc* arrangement, char** json_out);

/* Seeded law suite for one of: tiling, points, chain, word, tree,
 * arrangement, tuple. AOP_ERR_LAW_FAILURE when any triple fails. */
aop_status aop_laws(const char* operad, int samples, unsigned long long seed,
                    char** report_json);

/* Yang-Baxter residual check for a named theory ("identity", "flip",
 * "yang:eta=<float>", "broken") on seeded random parameter triples.
 * AOP_ERR_LAW_FAILURE when the max residual exceeds the tolerance. */
aop_status aop_yb_check(const char* theory, int samples, unsigned long long seed,
                        char** report_json);

/* SVG 1.1 figure of an arrangement document. */
aop_status aop_render_svg(const aop_doc* arrangement, int highlight_envelope,
                          char** svg_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ARRANGEOPS_H */
