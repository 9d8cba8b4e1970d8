/* C interface to the Simon's-problem MBQC simulator.
 *
 * All functions returning strings allocate with malloc-compatible semantics;
 * release them with sm_string_free(). On failure they return a nonzero
 * status and leave *out untouched; sm_last_error() describes the most recent
 * failure on the calling thread.
 */
#ifndef SIMON_MBQC_H
#define SIMON_MBQC_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sm_status {
    SM_OK = 0,
    SM_ERR_DOMAIN = 1,    /* invalid value, impossible branch, promise violation */
    SM_ERR_CAPACITY = 2,  /* problem size beyond simulator limits */
    SM_ERR_BAD_ARG = 3,   /* null pointer or malformed JSON */
    SM_ERR_INTERNAL = 4
} sm_status;

const char* sm_version(void);

/* Thread-local message for the last failing call; empty string if none. */
const char* sm_last_error(void);

void sm_string_free(char* s);

/* config: {"bb","flips"?,"shots","seed","noise"?:{"kind","param"}} */
sm_status sm_run_json(const char* config_json, char** out_json);

/* config: {"resource"?,"shots","seed","resamples"?,"noise"?} */
sm_status sm_tomo_json(const char* config_json, char** out_json);

/* config: {"trials"?,"seed"?} or {"monte_carlo":true,"n","queries","trials"?,"seed"?} */
sm_status sm_baseline_json(const char* config_json, char** out_json);

/* config: {"n","period"?,"flips"?,"shots","seed"} */
sm_status sm_spnn_run_json(const char* config_json, char** out_json);

sm_status sm_catalog_json(char** out_json);

sm_status sm_resource_counts_json(int n, char** out_json);

/* resource_name: "linear5" | "sp22-6" | "sp22-8" | "spnn:<n>" */
sm_status sm_resource_dot(const char* resource_name, char** out_dot);

sm_status sm_pattern_json(const char* bb_id, int flips, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* SIMON_MBQC_H */
