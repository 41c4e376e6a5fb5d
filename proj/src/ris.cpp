#include "ntnsim/ris.hpp"

#include <cmath>
#include <stdexcept>

namespace ntnsim {

RisConfig resolve_ris_config(const ScenarioConfig& config, RisMode scheme_mode,
                             std::optional<double> rho_override) {
    const RisSettings& s = config.ris;
    RisConfig ris;
    ris.n_elements = s.num_ris_elements;
    ris.mode = scheme_mode;
    if (scheme_mode == RisMode::passive) {
        ris.rho = s.ris_mode == RisMode::passive ? s.rho : 1.0;
        ris.element_noise_power_w = 0.0;
        ris.element_static_power_w = s.element_static_power_w.value_or(0.010);
    } else {
        ris.rho = rho_override.value_or(s.ris_mode == RisMode::active ? s.rho : 4.0);
        ris.element_noise_power_w = s.element_noise_power_w.value_or(config.thermal_floor_w());
        ris.element_static_power_w = s.element_static_power_w.value_or(0.025);
    }
    ris.amp_efficiency = s.amp_efficiency;
    return ris;
}

std::vector<double> align_phases(std::span<const cgain> g, std::span<const cgain> f, cgain direct) {
    if (g.size() != f.size()) throw std::invalid_argument("align_phases: length mismatch");
    const double direct_phase = direct == cgain{} ? 0.0 : std::arg(direct);
    std::vector<double> phases(g.size());
    for (size_t i = 0; i < g.size(); ++i) {
        double theta = direct_phase - std::arg(g[i]) - std::arg(f[i]);
        theta = std::fmod(theta, 2.0 * M_PI);
        if (theta < 0.0) theta += 2.0 * M_PI;
        phases[i] = theta;
    }
    return phases;
}

cgain cascaded_channel(std::span<const cgain> g, std::span<const cgain> f,
                       std::span<const double> phases, double rho) {
    if (g.size() != f.size() || g.size() != phases.size())
        throw std::invalid_argument("cascaded_channel: length mismatch");
    cgain sum{};
    for (size_t i = 0; i < g.size(); ++i)
        sum += g[i] * std::polar(1.0, phases[i]) * f[i];
    return rho * sum;
}

double forwarded_noise_power(const RisConfig& ris, std::span<const cgain> f) {
    if (ris.mode == RisMode::passive) return 0.0;
    double sum = 0.0;
    for (const cgain& c : f) sum += std::norm(c);
    return ris.rho * ris.rho * ris.element_noise_power_w * sum;
}

double ris_power_consumption(const RisConfig& ris, double incident_power_w) {
    if (incident_power_w < 0.0)
        throw std::domain_error("ris_power_consumption: incident power must be >= 0");
    double p = ris.n_elements * ris.element_static_power_w;
    if (ris.mode == RisMode::active)
        p += std::max(ris.rho * ris.rho - 1.0, 0.0) * incident_power_w / ris.amp_efficiency;
    return p;
}

}  // namespace ntnsim
