#pragma once

#include <span>

#include "ntnsim/rng.hpp"
#include "ntnsim/scenario.hpp"
#include "ntnsim/types.hpp"

namespace ntnsim {

// Free-space path loss, dB: 20 log10(d) + 20 log10(f) - 147.55.
// Throws std::domain_error below 1 m (outside model validity).
double fspl_db(double distance_m, double frequency_hz);

// Linear interpolation in an (elevation, probability) table; clamped at the
// table ends. Monotone tables give monotone output.
double los_probability(double elevation_deg, std::span<const LosTableRow> table);

// Draws LoS state, shadowing and total path loss for one link.
// uav_ground links are always LoS; the HAPS links are Bernoulli over the
// elevation-indexed table. Clutter loss applies only in NLoS.
LinkState sample_link_state(const LinkGeometry& geom, const ScenarioConfig& config, Rng& rng);

// Rician amplitude coefficient with E[|g|^2] = mean_power:
//   g = sqrt(mean_power) * (sqrt(K/(K+1)) + sqrt(1/(K+1)) * w),  w ~ CN(0,1).
// K is linear; K = 0 is Rayleigh. Very large K collapses to the LoS component.
cgain sample_rician(double k_factor_linear, double mean_power, Rng& rng);

// Applies large-scale loss to a small-scale coefficient:
// fading * sqrt(10^(-pathloss_db/10)).
cgain channel_gain(const LinkState& state, cgain fading);

// LoS-state dependent Rician K (linear) for a link class. NLoS is Rayleigh.
double rician_k_linear(const ScenarioConfig& config, LinkClass link_class, bool is_los);

}  // namespace ntnsim
