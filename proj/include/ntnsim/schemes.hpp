#pragma once

#include <optional>
#include <vector>

#include "ntnsim/rng.hpp"
#include "ntnsim/scenario.hpp"
#include "ntnsim/types.hpp"

namespace ntnsim {

// One Monte Carlo draw of every link gain the four schemes consume.
// Antenna/element gains and path loss are already folded into the entries.
// LoS state is drawn once per physical link and shared by all antennas and
// elements on it; small-scale fading is i.i.d. per antenna/element.
struct ChannelRealization {
    int num_antennas = 0;  // M
    int num_elements = 0;  // N
    int num_users = 0;     // L

    std::vector<cgain> direct;          // M x L, HAPS antenna -> user
    std::vector<cgain> haps_ris;        // M x N, HAPS antenna -> RIS element
    std::vector<cgain> ris_user;        // N x L, RIS element -> user
    std::vector<cgain> haps_uav_relay;  // M, HAPS antenna -> relay antenna
    std::vector<cgain> uav_user_relay;  // L, relay antenna -> user

    LinkState haps_uav_state;
    std::vector<LinkState> haps_user_states;  // L
    std::vector<LinkState> uav_user_states;   // L
    std::vector<Position3D> user_positions;   // L

    cgain direct_at(int m, int l) const { return direct[m * num_users + l]; }
    cgain haps_ris_at(int m, int n) const { return haps_ris[m * num_elements + n]; }
    cgain ris_user_at(int n, int l) const { return ris_user[n * num_users + l]; }
};

struct SchemeResult {
    Scheme scheme = Scheme::I;
    Condition condition = Condition::ideal;
    std::vector<double> per_user_sindr;
    std::vector<double> per_user_rate;  // bit/s/Hz
    double sum_rate = 0.0;
    double total_power_w = 0.0;
};

// Draws user placement, link states and all fading for one trial. The one
// realization is shared across every scheme/condition of the trial.
ChannelRealization draw_realization(const ScenarioConfig& config, Rng& rng);

// End-to-end evaluation of one scheme on one realization.
//   I:   antenna 0, direct NOMA link, full slot.
//   II:  TAS over M; half-duplex AF relay, per-hop SNDRs cascaded, direct
//        slot-1 SINDR added (diversity combining); slot 1/2.
//   III: TAS over M; direct + passive cascaded channel, phases aligned for
//        the weakest-direct user; full slot.
//   IV:  as III with active amplitude and forwarded RIS noise on each user's
//        noise floor.
// condition == ideal forces every kappa to zero.
SchemeResult evaluate_scheme(Scheme scheme, const ChannelRealization& realization,
                             const ScenarioConfig& config, Condition condition,
                             std::optional<double> active_rho_override = std::nullopt);

// Consumed power for one scheme/trial: PA draw + statics + scheme extras.
double total_power(Scheme scheme, const ScenarioConfig& config, double incident_ris_power_w,
                   std::optional<double> active_rho_override = std::nullopt);

}  // namespace ntnsim
