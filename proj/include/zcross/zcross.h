#ifndef ZCROSS_H
#define ZCROSS_H

/*
 * C interface to the zcross analysis engine: crossed products of function
 * algebras by Z-actions, commutants, centers, maximal-abelian decisions, and
 * the character-space / finite-Fourier analyses, all in exact arithmetic.
 *
 * Scenarios and reports cross this boundary as JSON text; reports are opaque
 * handles owning both the JSON document and its human-readable rendering.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zcross_status {
  ZCROSS_OK = 0,
  /* malformed scenarios, bad windows, precondition failures */
  ZCROSS_ERROR_VALIDATION = 2,
  /* a theorem route disagreed with its brute-force oracle, or another
     internal invariant failed; never silenced */
  ZCROSS_ERROR_INTERNAL = 3,
  /* null pointers and other misuse of this API */
  ZCROSS_ERROR_ARGUMENT = 4
} zcross_status;

typedef struct zcross_report zcross_report;

const char* zcross_version(void);

/*
 * Run a scenario given as JSON text (see the README for the schema).
 * options_json may be NULL or "{}" and accepts
 *   {"window": N, "oracle_only": b, "seed": S, "root_bound": B}.
 * On success *out owns the report; release it with zcross_report_free.
 * On failure *out is NULL and zcross_last_error() describes the problem.
 */
zcross_status zcross_run_scenario(const char* scenario_json, const char* options_json,
                                  zcross_report** out);

/* Run a bundled demo by name. */
zcross_status zcross_run_demo(const char* name, const char* options_json,
                              zcross_report** out);

/* Owned by the report; valid until zcross_report_free. */
const char* zcross_report_json(const zcross_report* report);
const char* zcross_report_text(const zcross_report* report);
void zcross_report_free(zcross_report* report);

/* Static JSON array of {"name": ..., "description": ...} for the demos. */
const char* zcross_demos_json(void);

/* Scenario JSON of one bundled demo; free *out with zcross_string_free. */
zcross_status zcross_demo_scenario_json(const char* name, char** out);
void zcross_string_free(char* text);

/* Message for the most recent failure in the calling thread. */
const char* zcross_last_error(void);

#ifdef __cplusplus
}
#endif

#endif
