/* C interface to the SU_q(2) semigroup-BMO verification library.
 *
 * All entry points are thread-compatible: distinct contexts may be used
 * concurrently; a single context must not be shared between threads.
 * Strings returned through out-parameters are heap-allocated and must be
 * released with suq2_string_free.
 */
#ifndef SUQ2_C_H
#define SUQ2_C_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct suq2_ctx suq2_ctx;

typedef enum {
  SUQ2_OK = 0,
  SUQ2_ERR_INVALID_ARGUMENT = 1, /* bad config, params, or budget refusal */
  SUQ2_ERR_PARSE = 2,            /* malformed JSON or element grammar */
  SUQ2_ERR_INTERNAL = 3
} suq2_status;

/* Creates a context from a JSON config: {"q":0.5,"seed":1234,"trunc_n":12,
 * "trunc_m":6,"torus_samples":4096,"t_grid":"1e-4,50,64"}; missing keys take
 * those defaults. NULL or "" means all defaults. On failure returns a status
 * and *out is NULL. */
suq2_status suq2_ctx_create(const char* config_json, suq2_ctx** out);

void suq2_ctx_free(suq2_ctx* ctx);

/* Runs one subcommand (haar, peterweyl, multiplier, bmo, lp, gnsmod,
 * transfer, dilate, verify) with JSON params; on success *report_json
 * receives the JSON report (caller frees with suq2_string_free). On error
 * the status is returned and suq2_last_error describes it. */
suq2_status suq2_run(suq2_ctx* ctx, const char* command,
                     const char* params_json, char** report_json);

/* 1 if the last successful report passed all its checks, 0 otherwise. */
int suq2_last_pass(const suq2_ctx* ctx);

/* Message for the last failed call on this context; valid until the next
 * call on the same context. Never NULL. */
const char* suq2_last_error(const suq2_ctx* ctx);

void suq2_string_free(char* s);

const char* suq2_version(void);

#ifdef __cplusplus
}
#endif

#endif /* SUQ2_C_H */
