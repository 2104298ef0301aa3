/* C API for the coded-computing scheduling library.
 *
 * All objects are opaque handles; functions returning int use the
 * lea_status codes below (0 = success).  On failure a thread-local
 * message is available via lea_last_error().
 */
#ifndef LEA_LEA_H
#define LEA_LEA_H

#include <stddef.h>

#if defined(_WIN32)
#define LEA_API __declspec(dllexport)
#else
#define LEA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct lea_config lea_config;
typedef struct lea_report lea_report;

enum lea_status {
  LEA_OK = 0,
  LEA_ERR_CONFIG = 1,     /* bad key, bad value, violated invariant */
  LEA_ERR_INFEASIBLE = 2, /* deadline infeasible for the profile */
  LEA_ERR_IO = 3,         /* unreadable/unwritable path */
  LEA_ERR_INVALID = 4,    /* null handle or bad argument */
  LEA_ERR_INTERNAL = 5,
};

/* Message describing the most recent failure on this thread. */
LEA_API const char* lea_last_error(void);

/* ---- configuration ---- */

/* Parses and validates a flat key=value scenario file.  NULL on error. */
LEA_API lea_config* lea_config_load(const char* path);
/* Same, from an in-memory string. */
LEA_API lea_config* lea_config_parse(const char* text);
/* Applies one override (e.g. "rounds", "200000") and revalidates. */
LEA_API int lea_config_set(lea_config* cfg, const char* key, const char* value);
LEA_API void lea_config_free(lea_config* cfg);

LEA_API int lea_config_warning_count(const lea_config* cfg);
LEA_API const char* lea_config_warning(const lea_config* cfg, int index);
/* Canonical text form; caller must not free, valid until the next call
 * on this config. */
LEA_API const char* lea_config_text(lea_config* cfg);

/* ---- simulation ---- */

LEA_API lea_report* lea_simulate(const lea_config* cfg);
LEA_API void lea_report_free(lea_report* report);

LEA_API double lea_report_throughput(const lea_report* report);
LEA_API long long lea_report_rounds(const lea_report* report);
LEA_API long long lea_report_successes(const lea_report* report);
/* "lea", "static" or "genie"; static storage. */
LEA_API const char* lea_report_strategy(const lea_report* report);

/* path == NULL writes to stdout. */
LEA_API int lea_report_write_rounds_csv(const lea_report* report, const char* path);
LEA_API int lea_report_write_summary(const lea_report* report, const char* path);
/* Requires log_estimates = true in the config. */
LEA_API int lea_report_write_estimates_csv(const lea_report* report, const char* path);

/* ---- verification and demos ---- */

/* Runs the oracle suites; returns the number of failed checks (negative
 * on internal error).  verbose != 0 prints one line per check to stdout. */
LEA_API int lea_verify(int verbose);

/* Encodes a dataset (decimal-text file, one row per chunk; random data
 * when data_path == NULL) with the config's coding parameters and writes
 * the n*r shard payloads to out_path, one row per shard. */
LEA_API int lea_encode_demo(const lea_config* cfg, const char* data_path,
                            const char* out_path);

#ifdef __cplusplus
}
#endif

#endif /* LEA_LEA_H */
