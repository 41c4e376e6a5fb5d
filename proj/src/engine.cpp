#include "ntnsim/engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace ntnsim {

const char* to_string(SweepAxis axis) {
    return axis == SweepAxis::tx_power_dbm ? "tx_power_dbm" : "rho";
}

void SweepSpec::validate() const {
    if (values.empty()) throw config_error("sweep.values", "must not be empty");
    for (size_t i = 1; i < values.size(); ++i)
        if (values[i] <= values[i - 1])
            throw config_error("sweep.values", "values must be strictly increasing");
    if (trials < 1) throw config_error("sweep.trials", "must be >= 1");
    if (schemes.empty()) throw config_error("sweep.schemes", "must not be empty");
    if (conditions.empty()) throw config_error("sweep.conditions", "must not be empty");
    if (axis == SweepAxis::rho)
        for (double v : values)
            if (v < 1.0) throw config_error("sweep.values", "active amplitude must be >= 1");
}

std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
    // Odd increment keeps master_seed + (i+1)*gamma injective in i; the
    // splitmix64 finalizer is a bijection, so distinct trials never collide.
    return splitmix64(master_seed + (trial_index + 1) * 0x9E3779B97F4A7C15ULL);
}

std::vector<SchemeResult> run_trial(const ScenarioConfig& config, std::span<const Scheme> schemes,
                                    std::span<const Condition> conditions, Rng& trial_rng,
                                    std::optional<double> active_rho_override) {
    const ChannelRealization realization = draw_realization(config, trial_rng);
    std::vector<SchemeResult> results;
    results.reserve(schemes.size() * conditions.size());
    for (Scheme scheme : schemes)
        for (Condition condition : conditions)
            results.push_back(
                evaluate_scheme(scheme, realization, config, condition, active_rho_override));
    return results;
}

std::pair<double, double> coverage_probability(
    const std::vector<std::vector<double>>& per_trial_rates, std::span<const double> targets) {
    if (per_trial_rates.empty()) return {0.0, 0.0};
    const size_t users = targets.size();
    size_t all_ok = 0;
    std::vector<size_t> per_user_ok(users, 0);
    for (const auto& user_rates : per_trial_rates) {
        if (user_rates.size() != users)
            throw std::invalid_argument("coverage_probability: rate/target length mismatch");
        bool all = true;
        for (size_t u = 0; u < users; ++u) {
            if (user_rates[u] >= targets[u])
                ++per_user_ok[u];
            else
                all = false;
        }
        if (all) ++all_ok;
    }
    const double trials = static_cast<double>(per_trial_rates.size());
    double per_user_mean = 0.0;
    for (size_t u = 0; u < users; ++u) per_user_mean += static_cast<double>(per_user_ok[u]) / trials;
    per_user_mean /= static_cast<double>(users);
    return {static_cast<double>(all_ok) / trials, per_user_mean};
}

double energy_efficiency(double sum_rate_mean, double bandwidth_hz, double total_power_mean_w) {
    if (total_power_mean_w <= 0.0)
        throw std::domain_error("energy_efficiency: power must be positive");
    return bandwidth_hz * sum_rate_mean / total_power_mean_w;
}

SweepSpec make_sweep_spec(const ScenarioConfig& config, SweepAxis axis) {
    SweepSpec spec;
    spec.axis = axis;
    spec.values = axis == SweepAxis::tx_power_dbm ? config.sweep.tx_power_dbm_values
                                                  : config.sweep.rho_values;
    spec.trials = config.run.trials;
    spec.master_seed = config.run.seed;
    spec.schemes = config.sweep.schemes;
    spec.conditions = config.sweep.conditions;
    spec.workers = config.run.workers;
    return spec;
}

namespace {

// Per-trial samples for one (scheme, condition) cell at one axis value.
struct CellSamples {
    std::vector<double> sum_rate;                 // [trial]
    std::vector<double> total_power;              // [trial]
    std::vector<std::vector<double>> user_rates;  // [trial][user]
};

}  // namespace

std::vector<MetricsRecord> run_sweep(const ScenarioConfig& config, const SweepSpec& spec) {
    spec.validate();
    const int trials = spec.trials;
    const size_t cells = spec.schemes.size() * spec.conditions.size();

    int workers = spec.workers > 0 ? spec.workers
                                   : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    workers = std::min<int>(workers, trials);

    std::vector<MetricsRecord> records;
    records.reserve(spec.values.size() * cells);

    for (double axis_value : spec.values) {
        ScenarioConfig point_config = config;
        std::optional<double> rho_override;
        if (spec.axis == SweepAxis::tx_power_dbm)
            point_config.power.tx_power_dbm = axis_value;
        else
            rho_override = axis_value;

        std::vector<CellSamples> samples(cells);
        for (auto& cell : samples) {
            cell.sum_rate.resize(trials);
            cell.total_power.resize(trials);
            cell.user_rates.resize(trials);
        }

        // Trials are seeded individually from (master_seed, index), so the
        // partitioning over workers cannot change any result.
        auto run_range = [&](int begin, int end) {
            for (int t = begin; t < end; ++t) {
                Rng rng(derive_trial_seed(spec.master_seed, static_cast<std::uint64_t>(t)));
                const std::vector<SchemeResult> results =
                    run_trial(point_config, spec.schemes, spec.conditions, rng, rho_override);
                for (size_t c = 0; c < cells; ++c) {
                    samples[c].sum_rate[t] = results[c].sum_rate;
                    samples[c].total_power[t] = results[c].total_power_w;
                    samples[c].user_rates[t] = results[c].per_user_rate;
                }
            }
        };

        if (workers == 1) {
            run_range(0, trials);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(workers);
            const int chunk = (trials + workers - 1) / workers;
            for (int w = 0; w < workers; ++w) {
                const int begin = w * chunk;
                const int end = std::min(trials, begin + chunk);
                if (begin >= end) break;
                pool.emplace_back(run_range, begin, end);
            }
            for (auto& th : pool) th.join();
        }

        // Deterministic reduction in trial order.
        size_t c = 0;
        for (Scheme scheme : spec.schemes) {
            for (Condition condition : spec.conditions) {
                const CellSamples& cell = samples[c++];
                double rate_sum = 0.0;
                double power_sum = 0.0;
                for (int t = 0; t < trials; ++t) {
                    rate_sum += cell.sum_rate[t];
                    power_sum += cell.total_power[t];
                }
                const double rate_mean = rate_sum / trials;
                const double power_mean = power_sum / trials;
                double var_sum = 0.0;
                for (int t = 0; t < trials; ++t) {
                    const double d = cell.sum_rate[t] - rate_mean;
                    var_sum += d * d;
                }
                const double std_err =
                    trials > 1 ? std::sqrt(var_sum / (trials - 1)) / std::sqrt(trials) : 0.0;
                const auto [cov_all, cov_user] =
                    coverage_probability(cell.user_rates, point_config.rate_targets);

                MetricsRecord rec;
                rec.scheme = scheme;
                rec.condition = condition;
                rec.axis = spec.axis;
                rec.axis_value = axis_value;
                rec.sum_rate_mean = rate_mean;
                rec.sum_rate_ci95 = 1.96 * std_err;
                rec.energy_efficiency =
                    energy_efficiency(rate_mean, point_config.bandwidth, power_mean);
                rec.coverage_all_users = cov_all;
                rec.coverage_per_user_mean = cov_user;
                rec.trials = trials;
                rec.master_seed = spec.master_seed;
                records.push_back(rec);
            }
        }
    }
    return records;
}

}  // namespace ntnsim
