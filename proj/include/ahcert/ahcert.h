#ifndef AHCERT_H
#define AHCERT_H

/* ahcert -- exact certificate runner for threshold inductive-limit algebras.
 *
 * The library runs self-contained experiments (ideal lattice certification,
 * trace decay bounds, divisibility witnesses, K0 computations, ...) entirely
 * in exact rational arithmetic and returns machine-readable JSON
 * certificates. All state lives behind the opaque result handle.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  AHC_OK = 0,       /* certified */
  AHC_USAGE = 1,    /* unknown command, malformed config, or internal error */
  AHC_HORIZON = 2   /* search budget exhausted; partial certificate attached */
} ahc_status;

typedef struct ahc_result ahc_result;

/* Run one experiment. `command` is one of: ideal-cert, stability, traceless,
 * goodearl, approx-div, k0-verify, total-order, embed-check. `config_json`
 * is a JSON object with experiment parameters; NULL or "" selects defaults.
 * Rationals in configs are exact "p/q" strings. On return *out is always a
 * result to release with ahc_result_free(), whatever the status. */
ahc_status ahc_run(const char* command, const char* config_json, ahc_result** out);

/* JSON certificate (schema field "schema": 1). Owned by the result. */
const char* ahc_result_certificate(const ahc_result* r);

/* One-paragraph human-readable summary. Owned by the result. */
const char* ahc_result_summary(const ahc_result* r);

int ahc_result_status(const ahc_result* r);

void ahc_result_free(ahc_result* r);

/* Newline-separated list of available commands. Static storage. */
const char* ahc_commands(void);

const char* ahc_version(void);

#ifdef __cplusplus
}
#endif

#endif /* AHCERT_H */
