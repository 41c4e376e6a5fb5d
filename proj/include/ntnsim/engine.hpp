#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ntnsim/schemes.hpp"

namespace ntnsim {

enum class SweepAxis { tx_power_dbm, rho };

const char* to_string(SweepAxis axis);

struct SweepSpec {
    SweepAxis axis = SweepAxis::tx_power_dbm;
    std::vector<double> values;
    int trials = 1;
    std::uint64_t master_seed = 1;
    std::vector<Scheme> schemes;
    std::vector<Condition> conditions;
    int workers = 0;  // 0 = hardware concurrency

    void validate() const;  // throws config_error
};

struct MetricsRecord {
    Scheme scheme = Scheme::I;
    Condition condition = Condition::ideal;
    SweepAxis axis = SweepAxis::tx_power_dbm;
    double axis_value = 0.0;
    double sum_rate_mean = 0.0;  // bit/s/Hz
    double sum_rate_ci95 = 0.0;
    double energy_efficiency = 0.0;  // bit/Joule
    double coverage_all_users = 0.0;
    double coverage_per_user_mean = 0.0;
    int trials = 0;
    std::uint64_t master_seed = 0;
};

// Stable per-trial seed: splitmix64 finalizer over
// master_seed + (trial_index + 1) * 0x9E3779B97F4A7C15. Injective in the
// trial index for a fixed master seed.
std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::uint64_t trial_index);

// One realization, every requested (scheme, condition) evaluated on it.
// Results ordered scheme-major, condition-minor, matching the input spans.
std::vector<SchemeResult> run_trial(const ScenarioConfig& config, std::span<const Scheme> schemes,
                                    std::span<const Condition> conditions, Rng& trial_rng,
                                    std::optional<double> active_rho_override = std::nullopt);

// all_users: fraction of trials where every user met its target.
// per_user_mean: mean over users of the per-user success fractions.
std::pair<double, double> coverage_probability(const std::vector<std::vector<double>>& per_trial_rates,
                                               std::span<const double> targets);

// bandwidth * sum_rate_mean / total_power_mean, bit/Joule.
double energy_efficiency(double sum_rate_mean, double bandwidth_hz, double total_power_mean_w);

// Sweep spec assembled from the config's sweep/run sections.
SweepSpec make_sweep_spec(const ScenarioConfig& config, SweepAxis axis);

// Full Monte Carlo sweep. Trials are distributed over workers with per-trial
// seeding and reduced in trial order, so results do not depend on the worker
// count. Records ordered (axis_value, scheme, condition).
std::vector<MetricsRecord> run_sweep(const ScenarioConfig& config, const SweepSpec& spec);

}  // namespace ntnsim
