#ifndef MHK_H
#define MHK_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes mirror the CLI exit codes: 0 pass, 1 verification failure,
   2 usage error. */
typedef enum {
    MHK_OK = 0,
    MHK_VERIFICATION_FAILED = 1,
    MHK_USAGE_ERROR = 2,
    MHK_INTERNAL_ERROR = 3
} mhk_status;

typedef struct mhk_config mhk_config; /* opaque verification run configuration */
typedef struct mhk_report mhk_report; /* opaque run report */

mhk_config* mhk_config_new(void);
void mhk_config_free(mhk_config* cfg);

mhk_status mhk_config_set_group(mhk_config* cfg, const char* dsl);
mhk_status mhk_config_add_suite(mhk_config* cfg, const char* name);
mhk_status mhk_config_set_window(mhk_config* cfg, int window);
mhk_status mhk_config_set_seed(mhk_config* cfg, uint64_t seed);
mhk_status mhk_config_set_out_path(mhk_config* cfg, const char* path);
mhk_status mhk_config_set_serial(mhk_config* cfg, int serial);

/* Executes the configured suites. Returns MHK_OK when every check passes and
   MHK_VERIFICATION_FAILED when at least one fails; in both cases *out (when
   non-null) receives a report handle the caller must free. Returns
   MHK_USAGE_ERROR / MHK_INTERNAL_ERROR without a report otherwise. */
mhk_status mhk_verify(const mhk_config* cfg, mhk_report** out);

int mhk_report_passed(const mhk_report* rep);
/* The JSON report document; owned by the report handle. */
const char* mhk_report_json(const mhk_report* rep);
void mhk_report_free(mhk_report* rep);

/* JSON instance summary for a group DSL string ("Z", "Zn:6", "D:3",
   "prod(Zn:2,Zn:3)"). *out_json must be released with mhk_string_free. */
mhk_status mhk_describe(const char* dsl, char** out_json);

/* Comma-separated list of suite names; caller frees with mhk_string_free. */
char* mhk_suite_names(void);

void mhk_string_free(char* s);

/* Message for the most recent failure on the calling thread; empty string
   when none. */
const char* mhk_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* MHK_H */
