#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ntnsim/scenario.hpp"
#include "ntnsim/types.hpp"

namespace ntnsim {

// Transmissive RIS state for one evaluation.
struct RisConfig {
    int n_elements = 0;
    RisMode mode = RisMode::passive;
    double rho = 1.0;                    // per-element amplitude coefficient
    std::vector<double> phases;          // radians, length n_elements
    double element_noise_power_w = 0.0;  // injected noise, active mode only
    double element_static_power_w = 0.0;
    double amp_efficiency = 1.0;
};

// Materializes the RIS state a scheme needs from the scenario settings.
// The configured rho binds to the configured mode; the other mode falls back
// to its default amplitude (1.0 passive, 4.0 active). rho_override drives the
// active amplitude during rho sweeps.
RisConfig resolve_ris_config(const ScenarioConfig& config, RisMode scheme_mode,
                             std::optional<double> rho_override = std::nullopt);

// Phase vector co-phasing every cascaded term with the direct path:
//   theta_n = arg(direct) - arg(g_n) - arg(f_n), arg(0) taken as 0.
std::vector<double> align_phases(std::span<const cgain> g, std::span<const cgain> f, cgain direct);

// Transmissive composition: sum_n rho * g_n * e^{j theta_n} * f_n.
cgain cascaded_channel(std::span<const cgain> g, std::span<const cgain> f,
                       std::span<const double> phases, double rho);

// Amplified element noise reaching the receiver (incoherent across elements):
// passive -> 0; active -> rho^2 * sigma_ris^2 * sum |f_n|^2.
double forwarded_noise_power(const RisConfig& ris, std::span<const cgain> f);

// passive -> N * P_elem; active adds the amplifier draw
// max(rho^2 - 1, 0) * incident_power / amp_efficiency.
double ris_power_consumption(const RisConfig& ris, double incident_power_w);

}  // namespace ntnsim
