/* C interface to the fixlab verification library.
 *
 * Instances travel as JSON documents (see README for the schema); results
 * come back as heap-allocated JSON strings the caller releases with
 * fixlab_string_free. All functions return FIXLAB_OK on success; on failure
 * *error (when non-NULL) receives a message, also to be released with
 * fixlab_string_free.
 */
#ifndef FIXLAB_H
#define FIXLAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct fixlab_instance fixlab_instance;

typedef enum {
  FIXLAB_OK = 0,
  FIXLAB_ERR_PARSE = 1,
  FIXLAB_ERR_INVALID_INSTANCE = 2,
  FIXLAB_ERR_INVALID_PARAMETER = 3,
  FIXLAB_ERR_DOMAIN = 4,
  FIXLAB_ERR_IO = 5,
} fixlab_status;

void fixlab_string_free(char* s);
void fixlab_instance_free(fixlab_instance* inst);

fixlab_status fixlab_instance_from_json(const char* json,
                                        fixlab_instance** out, char** error);
fixlab_status fixlab_instance_load(const char* path, fixlab_instance** out,
                                   char** error);
fixlab_status fixlab_instance_to_json(const fixlab_instance* inst, char** out);
fixlab_status fixlab_instance_save(const fixlab_instance* inst,
                                   const char* path, char** error);

/* Truncated worked example: N points, two maps, ln_plus_id gauge, tau = 1. */
fixlab_status fixlab_example23(int n, fixlab_instance** out, char** error);

/* Deterministic random instance with a random m-map family and defaults
 * for gauge, functional and tau. */
fixlab_status fixlab_generate(uint64_t seed, int n, double order_density,
                              int m, fixlab_instance** out, char** error);

/* Space validation report as JSON: {"ok": bool, "violations": [...]}. */
fixlab_status fixlab_validate(const fixlab_instance* inst, char** report,
                              char** error);

/* Contraction certificate as JSON. tau_override/mode_override may be NULL
 * to use the instance values; eps <= 0 selects the default tolerance
 * (1e-9, or FIXLAB_EPS). */
fixlab_status fixlab_check(const fixlab_instance* inst,
                           const char* tau_override, const char* mode_override,
                           double eps, char** certificate, char** error);

/* Maximal admissible modulus. *out_tau_star is +inf when every constraint
 * has a vacuous witness. */
fixlab_status fixlab_max_tau(const fixlab_instance* inst,
                             const char* mode_override, double* out_tau_star,
                             char** error);

/* Orbit traces with decrement and rate-bound reports as JSON.
 * start_label NULL runs from every point; map_index is 1-based;
 * max_steps <= 0 selects the pigeonhole default. */
fixlab_status fixlab_solve(const fixlab_instance* inst,
                           const char* start_label, int map_index,
                           int max_steps, const char* mode_override,
                           double eps, char** traces, char** error);

/* Fixed-point sets and the theorem-conclusion report as JSON. */
fixlab_status fixlab_analyze(const fixlab_instance* inst, char** report,
                             char** error);

#ifdef __cplusplus
}
#endif

#endif /* FIXLAB_H */
