/* C interface to the equivariant bundle criteria library.
 *
 * All entry points are exported from the shared library with C linkage and
 * communicate through JSON documents.  Handles are opaque; every function
 * returns a status code.  Nonnegative codes are verdicts, negative codes
 * are errors; eqb_last_error() describes the most recent failure on the
 * context.  Strings returned through out-parameters are owned by the
 * caller and released with eqb_string_free().
 */

#ifndef EQB_C_H
#define EQB_C_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* verdict codes (match CLI exit codes) */
#define EQB_GUARANTEED 0
#define EQB_UNKNOWN 3
#define EQB_IMPOSSIBLE 4

/* error codes */
#define EQB_E_INPUT (-2)
#define EQB_E_NUMERIC (-3)
#define EQB_E_GAP (-5)
#define EQB_E_SYMMETRY (-6)
#define EQB_E_INTERNAL (-1)

/* output formats */
#define EQB_FORMAT_TEXT 0
#define EQB_FORMAT_JSON 1

typedef struct eqb_ctx eqb_ctx;

eqb_ctx* eqb_ctx_new(void);
void eqb_ctx_free(eqb_ctx* ctx);

/* Seed for the deterministic randomized pieces (character table splitting).
 * Identical inputs and seed give byte-identical JSON output. */
int eqb_ctx_set_seed(eqb_ctx* ctx, uint64_t seed);
/* name is "tol-int" or "tol-gap"; value must be positive. */
int eqb_ctx_set_tolerance(eqb_ctx* ctx, const char* name, double value);
int eqb_ctx_set_format(eqb_ctx* ctx, int format);

/* Message for the last failing call on this context. */
const char* eqb_last_error(const eqb_ctx* ctx);

/* spec is a builtin name ("q8", "z4", "clifford:1,2", ...) or a JSON
 * group object. */
int eqb_group_report(eqb_ctx* ctx, const char* spec, char** out);

int eqb_clifford_report(eqb_ctx* ctx, int p, int q, char** out);

/* document carries group, space, bundles and a question; returns the
 * verdict code.  kind may be NULL or "" to accept any question, otherwise
 * it must match the document ("embed" or "stable-iso"). */
int eqb_check(eqb_ctx* ctx, const char* kind, const char* document_json,
              char** out);

int eqb_swan(eqb_ctx* ctx, const char* document_json, char** out);

int eqb_circle(eqb_ctx* ctx, const char* document_json, char** out);

int eqb_bloch(eqb_ctx* ctx, const char* model_json, char** out);

void eqb_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* EQB_C_H */
