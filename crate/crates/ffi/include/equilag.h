/* C interface of the equilag library.
 *
 * Usage pattern:
 *
 *   EqlgInput *input = NULL;
 *   if (eqlg_input_parse(document_json, &input) != EQLG_STATUS_OK) {
 *       fprintf(stderr, "%s\n", eqlg_last_error());
 *       return 1;
 *   }
 *   char *report = NULL;
 *   EqlgStatus status = eqlg_run_find_lagrangian(input, &report);
 *   if (report != NULL) {
 *       puts(report);             // JSON run report
 *       eqlg_string_free(report);
 *   }
 *   eqlg_input_free(input);
 *
 * Status EQLG_STATUS_NEGATIVE still produces a report: it marks a
 * verified negative outcome (failed verification or exhausted search).
 *
 * This header is maintained by hand and kept in sync with the exported
 * symbols by the crate's header_sync test.
 */

#ifndef EQUILAG_H
#define EQUILAG_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum EqlgStatus {
  /* Success; every verdict in the report passed. */
  EQLG_STATUS_OK = 0,
  /* Verified negative (failed verification, exhausted search). */
  EQLG_STATUS_NEGATIVE = 1,
  /* Malformed or semantically invalid input. */
  EQLG_STATUS_INVALID_INPUT = 2,
  /* Internal failure; consult eqlg_last_error(). */
  EQLG_STATUS_INTERNAL = 3,
  /* A required pointer argument was null. */
  EQLG_STATUS_NULL_ARGUMENT = 4,
} EqlgStatus;

/* Opaque handle over a validated input document (JSON or TOML). */
typedef struct EqlgInput EqlgInput;

/* Static version string of the library. */
const char *eqlg_version(void);

/* Message of the most recent error on the calling thread; valid until
 * the next failing call on the same thread. */
const char *eqlg_last_error(void);

/* Parse and validate an input document. On success writes a handle to
 * `out`; free it with eqlg_input_free. */
EqlgStatus eqlg_input_parse(const char *text, EqlgInput **out);

/* Free a handle returned by eqlg_input_parse. Null is ignored. */
void eqlg_input_free(EqlgInput *input);

/* Free a string returned by a run function. Null is ignored. */
void eqlg_string_free(char *text);

/* Build the cover of a document; report cell counts, Euler
 * characteristic, module dimension and deck-action traces. */
EqlgStatus eqlg_run_cover(const EqlgInput *input, char **out_json);

/* Run the invariant-Lagrangian pipeline; the report carries either a
 * certificate or an exhaustion record. */
EqlgStatus eqlg_run_find_lagrangian(const EqlgInput *input, char **out_json);

/* Trace-identity report for a cover document. */
EqlgStatus eqlg_run_chevalley_weil(const EqlgInput *input, char **out_json);

/* Witt-equivalence of the modules of two documents over one group
 * (semi-decision: negative answers are exhaustion reports). */
EqlgStatus eqlg_run_witt_equiv(const EqlgInput *left, const EqlgInput *right,
                               char **out_json);

/* Re-verify a certificate (a find-lagrangian report or a bare
 * {"lagrangian": [[..]]} object) against a document. */
EqlgStatus eqlg_run_verify(const EqlgInput *input,
                           const char *certificate_json, char **out_json);

/* Run the built-in acceptance corpus with the given seed. */
EqlgStatus eqlg_run_corpus(uint64_t seed, char **out_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* EQUILAG_H */
