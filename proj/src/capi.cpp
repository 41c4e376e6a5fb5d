#include "ntnsim.h"

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "ntnsim/engine.hpp"
#include "ntnsim/report.hpp"
#include "ntnsim/scenario.hpp"

using namespace ntnsim;

struct ntnsim_config {
    ScenarioConfig config;
};

struct ntnsim_result {
    std::vector<MetricsRecord> records;
};

namespace {

thread_local std::string g_last_error;

ntnsim_status set_error(ntnsim_status status, const std::string& message) {
    g_last_error = message;
    return status;
}

template <typename Fn>
ntnsim_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const config_error& e) {
        return set_error(NTNSIM_ERR_CONSTRAINT, e.what());
    } catch (const std::bad_alloc&) {
        return set_error(NTNSIM_ERR_RUNTIME, "out of memory");
    } catch (const std::exception& e) {
        return set_error(NTNSIM_ERR_RUNTIME, e.what());
    }
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void copy_field(char* dst, size_t dst_size, const char* src) {
    std::strncpy(dst, src, dst_size - 1);
    dst[dst_size - 1] = '\0';
}

}  // namespace

extern "C" {

const char* ntnsim_last_error(void) { return g_last_error.c_str(); }

ntnsim_status ntnsim_config_load(const char* text, ntnsim_config** out) {
    if (!text || !out) return set_error(NTNSIM_ERR_INVALID_ARG, "null argument");
    *out = nullptr;
    return guarded([&]() {
        try {
            auto* handle = new ntnsim_config{load_config(text)};
            *out = handle;
            return NTNSIM_OK;
        } catch (const config_error& e) {
            return set_error(
                e.kind() == config_error::Kind::parse ? NTNSIM_ERR_PARSE : NTNSIM_ERR_CONSTRAINT,
                e.what());
        }
    });
}

ntnsim_status ntnsim_config_load_file(const char* path, ntnsim_config** out) {
    if (!path || !out) return set_error(NTNSIM_ERR_INVALID_ARG, "null argument");
    *out = nullptr;
    return guarded([&]() {
        try {
            auto* handle = new ntnsim_config{load_config_file(path)};
            *out = handle;
            return NTNSIM_OK;
        } catch (const config_error& e) {
            return set_error(
                e.kind() == config_error::Kind::parse ? NTNSIM_ERR_PARSE : NTNSIM_ERR_CONSTRAINT,
                e.what());
        }
    });
}

ntnsim_status ntnsim_config_to_text(const ntnsim_config* config, char** out_text) {
    if (!config || !out_text) return set_error(NTNSIM_ERR_INVALID_ARG, "null argument");
    return guarded([&]() {
        *out_text = copy_string(save_config(config->config));
        return NTNSIM_OK;
    });
}

void ntnsim_config_free(ntnsim_config* config) { delete config; }

ntnsim_status ntnsim_config_set_trials(ntnsim_config* config, uint32_t trials) {
    if (!config) return set_error(NTNSIM_ERR_INVALID_ARG, "null config");
    if (trials < 1) return set_error(NTNSIM_ERR_CONSTRAINT, "run.trials: must be >= 1");
    config->config.run.trials = static_cast<int>(trials);
    return NTNSIM_OK;
}

ntnsim_status ntnsim_config_set_seed(ntnsim_config* config, uint64_t seed) {
    if (!config) return set_error(NTNSIM_ERR_INVALID_ARG, "null config");
    config->config.run.seed = seed;
    return NTNSIM_OK;
}

ntnsim_status ntnsim_config_set_workers(ntnsim_config* config, uint32_t workers) {
    if (!config) return set_error(NTNSIM_ERR_INVALID_ARG, "null config");
    config->config.run.workers = static_cast<int>(workers);
    return NTNSIM_OK;
}

ntnsim_status ntnsim_run_sweep(const ntnsim_config* config, ntnsim_axis axis,
                               ntnsim_result** out) {
    if (!config || !out) return set_error(NTNSIM_ERR_INVALID_ARG, "null argument");
    if (axis != NTNSIM_AXIS_TX_POWER_DBM && axis != NTNSIM_AXIS_RHO)
        return set_error(NTNSIM_ERR_INVALID_ARG, "unknown sweep axis");
    *out = nullptr;
    return guarded([&]() {
        const SweepAxis ax =
            axis == NTNSIM_AXIS_TX_POWER_DBM ? SweepAxis::tx_power_dbm : SweepAxis::rho;
        const SweepSpec spec = make_sweep_spec(config->config, ax);
        auto* handle = new ntnsim_result{run_sweep(config->config, spec)};
        *out = handle;
        return NTNSIM_OK;
    });
}

void ntnsim_result_free(ntnsim_result* result) { delete result; }

size_t ntnsim_result_count(const ntnsim_result* result) {
    return result ? result->records.size() : 0;
}

ntnsim_status ntnsim_result_record(const ntnsim_result* result, size_t index,
                                   ntnsim_record* out) {
    if (!result || !out) return set_error(NTNSIM_ERR_INVALID_ARG, "null argument");
    if (index >= result->records.size())
        return set_error(NTNSIM_ERR_INVALID_ARG, "record index out of range");
    const MetricsRecord& r = result->records[index];
    ntnsim_record rec{};
    copy_field(rec.scheme, sizeof(rec.scheme), to_string(r.scheme));
    copy_field(rec.condition, sizeof(rec.condition), to_string(r.condition));
    copy_field(rec.axis, sizeof(rec.axis), to_string(r.axis));
    rec.axis_value = r.axis_value;
    rec.sum_rate_mean = r.sum_rate_mean;
    rec.sum_rate_ci95 = r.sum_rate_ci95;
    rec.energy_efficiency = r.energy_efficiency;
    rec.coverage_all_users = r.coverage_all_users;
    rec.coverage_per_user_mean = r.coverage_per_user_mean;
    rec.trials = static_cast<uint32_t>(r.trials);
    rec.master_seed = r.master_seed;
    *out = rec;
    return NTNSIM_OK;
}

ntnsim_status ntnsim_result_csv(const ntnsim_result* result, char** out_text) {
    if (!result || !out_text) return set_error(NTNSIM_ERR_INVALID_ARG, "null argument");
    return guarded([&]() {
        *out_text = copy_string(to_csv(result->records));
        return NTNSIM_OK;
    });
}

ntnsim_status ntnsim_result_svg(const ntnsim_result* result, ntnsim_metric metric,
                                char** out_text) {
    if (!result || !out_text) return set_error(NTNSIM_ERR_INVALID_ARG, "null argument");
    Metric m;
    switch (metric) {
        case NTNSIM_METRIC_SUM_RATE: m = Metric::sum_rate; break;
        case NTNSIM_METRIC_ENERGY_EFFICIENCY: m = Metric::energy_efficiency; break;
        case NTNSIM_METRIC_COVERAGE: m = Metric::coverage; break;
        default: return set_error(NTNSIM_ERR_INVALID_ARG, "unknown metric");
    }
    return guarded([&]() {
        *out_text = copy_string(to_svg(result->records, m));
        return NTNSIM_OK;
    });
}

void ntnsim_string_free(char* text) { delete[] text; }

}  // extern "C"
