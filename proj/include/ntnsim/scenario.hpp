#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ntnsim/impairments.hpp"
#include "ntnsim/rng.hpp"
#include "ntnsim/types.hpp"

namespace ntnsim {

// Raised on malformed documents and constraint violations. `key` names the
// offending config entry when one is known.
class config_error : public std::runtime_error {
public:
    enum class Kind { parse, constraint };

    config_error(std::string key, const std::string& rule, Kind kind = Kind::constraint)
        : std::runtime_error(key.empty() ? rule : key + ": " + rule),
          key_(std::move(key)),
          kind_(kind) {}

    const std::string& key() const { return key_; }
    Kind kind() const { return kind_; }

private:
    std::string key_;
    Kind kind_;
};

struct RicianKDb {
    double haps_ground = 10.0;  // LoS K-factor, dB; NLoS links fall back to Rayleigh
    double haps_uav = 15.0;
    double uav_ground = 10.0;

    bool operator==(const RicianKDb&) const = default;
};

struct ShadowingSigmaDb {
    double los = 4.0;
    double nlos = 6.0;

    bool operator==(const ShadowingSigmaDb&) const = default;
};

struct LosTableRow {
    double elevation_deg = 0.0;
    double probability = 0.0;

    bool operator==(const LosTableRow&) const = default;
};

struct RisSettings {
    int num_ris_elements = 50;
    RisMode ris_mode = RisMode::active;
    double rho = 4.0;  // amplitude coefficient for the configured mode
    std::optional<double> element_noise_power_w;   // default: thermal floor of the bandwidth
    std::optional<double> element_static_power_w;  // default: 10 mW passive, 25 mW active
    double amp_efficiency = 0.5;
    double element_gain_db = 26.0;  // per-side element coupling gain, see README

    bool operator==(const RisSettings&) const = default;
};

struct PowerModel {
    double tx_power_dbm = 30.0;
    double pa_efficiency = 0.4;
    double haps_static_w = 10.0;
    double user_static_w = 0.1;  // per user
    double uav_static_w = 5.0;   // relay circuitry, Scheme II only
    std::optional<double> relay_tx_power_dbm;   // default: follows tx_power_dbm
    std::optional<double> relay_pa_efficiency;  // default: follows pa_efficiency

    bool operator==(const PowerModel&) const = default;
};

struct SweepSettings {
    std::vector<double> tx_power_dbm_values = {0, 5, 10, 15, 20, 25, 30, 35, 40, 45, 50};
    std::vector<double> rho_values = {1, 2, 4, 6, 8, 10};
    std::vector<Scheme> schemes = {Scheme::I, Scheme::II, Scheme::III, Scheme::IV};
    std::vector<Condition> conditions = {Condition::ideal, Condition::impaired};

    bool operator==(const SweepSettings&) const = default;
};

struct RunSettings {
    std::uint64_t seed = 1;
    int trials = 10000;
    int workers = 0;  // 0 = hardware concurrency

    bool operator==(const RunSettings&) const = default;
};

struct ScenarioConfig {
    // geometry: HAPS at 20 km serving a hotspot ~32 km slant range away; the
    // relay/RIS UAV hovers low over a compact user disc.
    Position3D haps_position{-25000.0, 0.0, 20000.0};
    Position3D uav_position{0.0, 0.0, 60.0};
    double user_area_radius = 80.0;  // meters, disc under the UAV
    int num_users = 3;

    // radio
    int num_haps_antennas = 4;
    double carrier_frequency = 2.0e9;  // Hz
    double bandwidth = 10.0e6;         // Hz
    double noise_figure = 7.0;         // dB
    Environment environment = Environment::urban;
    RicianKDb rician_k;
    ShadowingSigmaDb shadowing_sigma;
    double clutter_loss = 8.0;  // dB, NLoS only
    std::vector<LosTableRow> los_table;  // defaulted to the urban table
    double haps_antenna_gain_db = 7.0;
    double uav_antenna_gain_db = 8.0;
    double user_antenna_gain_db = 0.0;

    RisSettings ris;

    // noma
    std::vector<double> noma_coefficients = {0.6, 0.3, 0.1};
    std::vector<double> rate_targets = {0.6, 0.6, 0.6};  // bit/s/Hz per user

    ImpairmentProfile impairments;
    PowerModel power;
    SweepSettings sweep;
    RunSettings run;

    bool operator==(const ScenarioConfig&) const = default;

    // Thermal noise floor of the configured bandwidth plus noise figure, Watts.
    double noise_power_w() const;
    // Thermal floor alone (no noise figure), Watts.
    double thermal_floor_w() const;

    // Throws config_error naming the offending key on any violated constraint.
    void validate() const;
};

// Elevation->probability table patterned after the 3GPP TR 38.811 urban column.
const std::vector<LosTableRow>& default_urban_los_table();

// JSON document in/out. load_config validates; save_config(load_config(x))
// round-trips to an identical config.
ScenarioConfig load_config(const std::string& text);
ScenarioConfig load_config_file(const std::string& path);
std::string save_config(const ScenarioConfig& config);

// Geometry helpers.
double slant_distance(const Position3D& a, const Position3D& b);
// Angle above the horizontal from ground_point toward aerial_point, degrees.
// Throws std::domain_error if the points are co-located or the aerial point
// is not above the ground point.
double elevation_angle(const Position3D& ground_point, const Position3D& aerial_point);

LinkGeometry link_geometry(const Position3D& low, const Position3D& high, LinkClass link_class);

// L user positions uniform in the disc of user_area_radius centered under the
// UAV ground projection, z = 0.
std::vector<Position3D> place_users(const ScenarioConfig& config, Rng& rng);

}  // namespace ntnsim
