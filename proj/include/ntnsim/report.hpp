#pragma once

#include <span>
#include <string>

#include "ntnsim/engine.hpp"

namespace ntnsim {

enum class Metric { sum_rate, energy_efficiency, coverage };

const char* to_string(Metric metric);

// CSV with the fixed header
// scheme,condition,axis,axis_value,sum_rate_mean,sum_rate_ci95,energy_efficiency,
// coverage_all_users,coverage_per_user_mean,trials,master_seed
// Floats carry 9 significant digits; output is byte-stable for equal records.
std::string to_csv(std::span<const MetricsRecord> records);

// Self-contained SVG line chart of one metric, one series per
// (scheme, condition). Plotted values equal the CSV values.
std::string to_svg(std::span<const MetricsRecord> records, Metric metric);

}  // namespace ntnsim
