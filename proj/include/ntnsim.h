/* C API of the ntnsim shared library.
 *
 * All entry points return an ntnsim_status; failures leave a thread-local
 * message retrievable via ntnsim_last_error(). Handles are opaque and owned
 * by the caller through the matching *_free function. Strings returned
 * through char** out-parameters are released with ntnsim_string_free.
 */
#ifndef NTNSIM_H
#define NTNSIM_H

#include <stddef.h>
#include <stdint.h>

#if defined _WIN32 || defined __CYGWIN__
#define NTNSIM_API __declspec(dllexport)
#else
#define NTNSIM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ntnsim_config ntnsim_config;
typedef struct ntnsim_result ntnsim_result;

typedef enum ntnsim_status {
    NTNSIM_OK = 0,
    NTNSIM_ERR_PARSE = 1,      /* malformed document */
    NTNSIM_ERR_CONSTRAINT = 2, /* schema/constraint violation */
    NTNSIM_ERR_INVALID_ARG = 3,
    NTNSIM_ERR_RUNTIME = 4
} ntnsim_status;

typedef enum ntnsim_axis {
    NTNSIM_AXIS_TX_POWER_DBM = 0,
    NTNSIM_AXIS_RHO = 1
} ntnsim_axis;

typedef enum ntnsim_metric {
    NTNSIM_METRIC_SUM_RATE = 0,
    NTNSIM_METRIC_ENERGY_EFFICIENCY = 1,
    NTNSIM_METRIC_COVERAGE = 2
} ntnsim_metric;

/* One aggregated sweep point, mirrored as plain C data. */
typedef struct ntnsim_record {
    char scheme[4];     /* "I".."IV" */
    char condition[12]; /* "ideal" / "impaired" */
    char axis[16];      /* "tx_power_dbm" / "rho" */
    double axis_value;
    double sum_rate_mean;
    double sum_rate_ci95;
    double energy_efficiency;
    double coverage_all_users;
    double coverage_per_user_mean;
    uint32_t trials;
    uint64_t master_seed;
} ntnsim_record;

/* Thread-local message for the most recent failure in this thread. */
NTNSIM_API const char* ntnsim_last_error(void);

NTNSIM_API ntnsim_status ntnsim_config_load(const char* text, ntnsim_config** out);
NTNSIM_API ntnsim_status ntnsim_config_load_file(const char* path, ntnsim_config** out);
NTNSIM_API ntnsim_status ntnsim_config_to_text(const ntnsim_config* config, char** out_text);
NTNSIM_API void ntnsim_config_free(ntnsim_config* config);

/* Run-section overrides (CLI flags). Pass 0 workers for hardware default. */
NTNSIM_API ntnsim_status ntnsim_config_set_trials(ntnsim_config* config, uint32_t trials);
NTNSIM_API ntnsim_status ntnsim_config_set_seed(ntnsim_config* config, uint64_t seed);
NTNSIM_API ntnsim_status ntnsim_config_set_workers(ntnsim_config* config, uint32_t workers);

NTNSIM_API ntnsim_status ntnsim_run_sweep(const ntnsim_config* config, ntnsim_axis axis,
                                          ntnsim_result** out);
NTNSIM_API void ntnsim_result_free(ntnsim_result* result);

NTNSIM_API size_t ntnsim_result_count(const ntnsim_result* result);
NTNSIM_API ntnsim_status ntnsim_result_record(const ntnsim_result* result, size_t index,
                                              ntnsim_record* out);
NTNSIM_API ntnsim_status ntnsim_result_csv(const ntnsim_result* result, char** out_text);
NTNSIM_API ntnsim_status ntnsim_result_svg(const ntnsim_result* result, ntnsim_metric metric,
                                           char** out_text);

NTNSIM_API void ntnsim_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* NTNSIM_H */
