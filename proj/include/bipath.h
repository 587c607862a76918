/* C interface to the bipath persistence library.
 *
 * All functions return 0 on success, 1 on a validation/input error, and 2
 * when the two decomposition methods disagree ("both" mode).  On failure
 * bp_last_error() returns a thread-local description of the problem.
 * Returned objects and strings are owned by the caller and released with
 * the matching bp_*_free function.
 */
#ifndef BIPATH_H
#define BIPATH_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct bp_diagram bp_diagram;
typedef struct bp_diagram_set bp_diagram_set;

#define BP_OK 0
#define BP_ERR_INVALID 1
#define BP_ERR_MISMATCH 2

/* Persistence diagram of a bipath filtration (text in .bft format) in one
 * homology degree, with coefficients mod the prime p. */
int bp_pd(const char* bft_text, int degree, unsigned p, bp_diagram** out);

/* Diagrams for every degree 0..max simplex dimension that has at least
 * one interval; empty degrees are omitted. */
int bp_pd_all(const char* bft_text, unsigned p, bp_diagram_set** out);

/* Interval decomposition of an explicit module (module JSON format).
 * method is "matrix", "direct", or "both"; "both" runs the two independent
 * algorithms and fails with BP_ERR_MISMATCH when their diagrams differ. */
int bp_decompose(const char* module_json, const char* method, bp_diagram** out);

/* Serializes a diagram; format is "json", "csv", or "svg". */
int bp_diagram_emit(const bp_diagram* d, const char* format, char** out_bytes);

int bp_diagram_parse(const char* json_text, bp_diagram** out);

int bp_diagram_set_size(const bp_diagram_set* s);
const bp_diagram* bp_diagram_set_get(const bp_diagram_set* s, int index);

/* Serializes a diagram set as one JSON object listing every degree. */
int bp_diagram_set_emit_json(const bp_diagram_set* s, char** out_bytes);

/* Restricts a one-critical two-parameter grid filtration along an order
 * embedding of the bipath poset; writes the resulting .bft text. */
int bp_restrict_grid(const char* grid_json, const char* embedding_json, char** out_bft);

/* End-to-end check on the built-in worked example plus a seeded random
 * round trip (seed overridable with the BIPATH_SEED environment variable). */
int bp_selftest(void);

const char* bp_last_error(void);

void bp_diagram_free(bp_diagram* d);
void bp_diagram_set_free(bp_diagram_set* s);
void bp_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* BIPATH_H */
