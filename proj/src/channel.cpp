#include "ntnsim/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace ntnsim {

double fspl_db(double distance_m, double frequency_hz) {
    if (distance_m < 1.0) throw std::domain_error("fspl_db: distance below 1 m model validity");
    if (frequency_hz <= 0.0) throw std::domain_error("fspl_db: frequency must be positive");
    return 20.0 * std::log10(distance_m) + 20.0 * std::log10(frequency_hz) - 147.55;
}

double los_probability(double elevation_deg, std::span<const LosTableRow> table) {
    if (table.empty()) throw std::invalid_argument("los_probability: empty table");
    if (elevation_deg <= table.front().elevation_deg) return table.front().probability;
    if (elevation_deg >= table.back().elevation_deg) return table.back().probability;
    for (size_t i = 1; i < table.size(); ++i) {
        if (elevation_deg <= table[i].elevation_deg) {
            const auto& lo = table[i - 1];
            const auto& hi = table[i];
            const double t = (elevation_deg - lo.elevation_deg) / (hi.elevation_deg - lo.elevation_deg);
            return lo.probability + t * (hi.probability - lo.probability);
        }
    }
    return table.back().probability;
}

double rician_k_linear(const ScenarioConfig& config, LinkClass link_class, bool is_los) {
    if (!is_los) return 0.0;  // Rayleigh under blockage
    double k_db = 0.0;
    switch (link_class) {
        case LinkClass::haps_ground: k_db = config.rician_k.haps_ground; break;
        case LinkClass::haps_uav: k_db = config.rician_k.haps_uav; break;
        case LinkClass::uav_ground: k_db = config.rician_k.uav_ground; break;
    }
    return db_to_linear(k_db);
}

LinkState sample_link_state(const LinkGeometry& geom, const ScenarioConfig& config, Rng& rng) {
    LinkState state;
    if (geom.link_class == LinkClass::uav_ground) {
        state.is_los = true;
    } else {
        const double p = los_probability(geom.elevation_deg, config.los_table);
        state.is_los = rng.bernoulli(p);
    }
    const double sigma = state.is_los ? config.shadowing_sigma.los : config.shadowing_sigma.nlos;
    state.shadowing_db = sigma > 0.0 ? sigma * rng.normal() : 0.0;
    state.pathloss_db = fspl_db(geom.slant_distance_m, config.carrier_frequency) + state.shadowing_db;
    if (!state.is_los) state.pathloss_db += config.clutter_loss;
    return state;
}

cgain sample_rician(double k_factor_linear, double mean_power, Rng& rng) {
    if (k_factor_linear < 0.0) throw std::domain_error("sample_rician: K must be >= 0");
    if (mean_power <= 0.0) throw std::domain_error("sample_rician: mean power must be > 0");
    // Cap so K -> infinity degenerates cleanly to the pure LoS component.
    constexpr double k_cap = 1e12;
    const double k = std::min(k_factor_linear, k_cap);
    const cgain w = rng.cnormal();
    const double los = std::sqrt(k / (k + 1.0));
    const double scatter = std::sqrt(1.0 / (k + 1.0));
    return std::sqrt(mean_power) * (los + scatter * w);
}

cgain channel_gain(const LinkState& state, cgain fading) {
    return fading * std::sqrt(std::pow(10.0, -state.pathloss_db / 10.0));
}

}  // namespace ntnsim
