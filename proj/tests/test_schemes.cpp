#include <cmath>
#include <vector>

#include <doctest.h>

#include "ntnsim/access.hpp"
#include "ntnsim/channel.hpp"
#include "ntnsim/engine.hpp"
#include "ntnsim/impairments.hpp"
#include "ntnsim/schemes.hpp"

using namespace ntnsim;

namespace {

ScenarioConfig default_config() { return load_config("{}"); }

}  // namespace

TEST_CASE("realization dimensions follow the config") {
    ScenarioConfig cfg = default_config();
    Rng rng(derive_trial_seed(1, 0));
    const ChannelRealization r = draw_realization(cfg, rng);
    CHECK(r.num_antennas == 4);
    CHECK(r.num_elements == 50);
    CHECK(r.num_users == 3);
    CHECK(r.direct.size() == 4 * 3);
    CHECK(r.haps_ris.size() == 4 * 50);
    CHECK(r.ris_user.size() == 50 * 3);
    CHECK(r.haps_uav_relay.size() == 4);
    CHECK(r.uav_user_relay.size() == 3);
    CHECK(r.haps_user_states.size() == 3);
    CHECK(r.uav_user_states.size() == 3);
}

TEST_CASE("identical seeds give identical realizations") {
    ScenarioConfig cfg = default_config();
    Rng a(123), b(123);
    const ChannelRealization ra = draw_realization(cfg, a);
    const ChannelRealization rb = draw_realization(cfg, b);
    CHECK(ra.direct == rb.direct);
    CHECK(ra.haps_ris == rb.haps_ris);
    CHECK(ra.ris_user == rb.ris_user);
    CHECK(ra.haps_uav_relay == rb.haps_uav_relay);
    CHECK(ra.uav_user_relay == rb.uav_user_relay);
}

TEST_CASE("zero shadowing gives deterministic large-scale losses") {
    ScenarioConfig cfg = load_config(R"({
        "geometry": {"user_area_radius": 0.0},
        "radio": {"shadowing_sigma": {"los": 0, "nlos": 0},
                   "los_table": [[0, 1.0], [90, 1.0]]}
    })");
    Rng rng(5);
    const ChannelRealization r = draw_realization(cfg, rng);
    const double d = slant_distance({cfg.uav_position.x, cfg.uav_position.y, 0.0},
                                    cfg.haps_position);
    for (const LinkState& s : r.haps_user_states) {
        CHECK(s.is_los);
        CHECK(s.pathloss_db == doctest::Approx(fspl_db(d, cfg.carrier_frequency)));
    }
}

TEST_CASE("scheme III with no elements degenerates to scheme I") {
    ScenarioConfig cfg = default_config();
    cfg.num_haps_antennas = 1;  // pins both schemes to the same antenna
    cfg.ris.num_ris_elements = 0;
    Rng rng(9);
    const ChannelRealization r = draw_realization(cfg, rng);
    const SchemeResult i = evaluate_scheme(Scheme::I, r, cfg, Condition::ideal);
    const SchemeResult iii = evaluate_scheme(Scheme::III, r, cfg, Condition::ideal);
    REQUIRE(i.per_user_rate.size() == iii.per_user_rate.size());
    for (size_t u = 0; u < i.per_user_rate.size(); ++u)
        CHECK(iii.per_user_rate[u] == doctest::Approx(i.per_user_rate[u]).epsilon(1e-12));
}

TEST_CASE("active RIS at unity gain without injected noise matches passive") {
    ScenarioConfig cfg = load_config(R"({"ris": {"ris_mode": "active", "rho": 1.0,
                                                  "element_noise_power": 0.0}})");
    Rng rng(10);
    const ChannelRealization r = draw_realization(cfg, rng);
    for (Condition c : {Condition::ideal, Condition::impaired}) {
        const SchemeResult iii = evaluate_scheme(Scheme::III, r, cfg, c);
        const SchemeResult iv = evaluate_scheme(Scheme::IV, r, cfg, c);
        for (size_t u = 0; u < iii.per_user_sindr.size(); ++u)
            CHECK(iv.per_user_sindr[u] == doctest::Approx(iii.per_user_sindr[u]).epsilon(1e-12));
    }
}

TEST_CASE("impairments strictly reduce every positive SINDR, every trial") {
    ScenarioConfig cfg = default_config();
    int violations = 0;
    for (int t = 0; t < 10000; ++t) {
        Rng rng(derive_trial_seed(77, t));
        const ChannelRealization r = draw_realization(cfg, rng);
        for (Scheme s : {Scheme::I, Scheme::II, Scheme::III, Scheme::IV}) {
            const SchemeResult ideal = evaluate_scheme(s, r, cfg, Condition::ideal);
            const SchemeResult impaired = evaluate_scheme(s, r, cfg, Condition::impaired);
            if (impaired.sum_rate > ideal.sum_rate) ++violations;
            for (size_t u = 0; u < ideal.per_user_sindr.size(); ++u)
                if (ideal.per_user_sindr[u] > 0.0 &&
                    impaired.per_user_sindr[u] >= ideal.per_user_sindr[u])
                    ++violations;
        }
    }
    CHECK(violations == 0);
}

TEST_CASE("scheme III never loses to scheme I for a single served user") {
    ScenarioConfig cfg = default_config();
    cfg.num_haps_antennas = 1;
    cfg.num_users = 1;
    cfg.noma_coefficients = {1.0};
    cfg.rate_targets = {0.35};
    for (int t = 0; t < 500; ++t) {
        Rng rng(derive_trial_seed(31, t));
        const ChannelRealization r = draw_realization(cfg, rng);
        const SchemeResult i = evaluate_scheme(Scheme::I, r, cfg, Condition::ideal);
        const SchemeResult iii = evaluate_scheme(Scheme::III, r, cfg, Condition::ideal);
        CHECK(iii.sum_rate >= i.sum_rate - 1e-12);
    }
}

TEST_CASE("scheme II with a dead direct link and an ideal first hop halves the one-hop rate") {
    ScenarioConfig cfg = default_config();
    cfg.num_users = 2;
    cfg.num_haps_antennas = 1;
    cfg.noma_coefficients = {0.7, 0.3};
    cfg.rate_targets = {0.35, 0.35};
    cfg.power.tx_power_dbm = 30.0;

    ChannelRealization r;
    r.num_antennas = 1;
    r.num_elements = 0;
    r.num_users = 2;
    r.direct = {cgain{}, cgain{}};
    r.haps_uav_relay = {cgain{1e6, 0.0}};  // effectively infinite first-hop SNR
    r.uav_user_relay = {cgain{1e-5, 0.0}, cgain{3e-5, 0.0}};
    r.haps_user_states.resize(2);
    r.uav_user_states.resize(2);
    r.user_positions.resize(2);

    const SchemeResult ii = evaluate_scheme(Scheme::II, r, cfg, Condition::ideal);

    // One-hop equivalent: the relay's own link evaluated at full slot.
    const double p_relay = dbm_to_watts(cfg.power.tx_power_dbm);
    const double noise = cfg.noise_power_w();
    std::vector<double> gamma2(2);
    for (int l = 0; l < 2; ++l) gamma2[l] = p_relay * std::norm(r.uav_user_relay[l]) / noise;
    const auto alloc = make_allocation(cfg.noma_coefficients, gamma2);
    const auto sindrs = noma_sindrs(gamma2, alloc, 1.0, 1.0, 0.0);
    const auto one_hop = rates(sindrs, 1.0);
    for (int u = 0; u < 2; ++u)
        CHECK(ii.per_user_rate[u] == doctest::Approx(one_hop[u] / 2.0).epsilon(1e-4));
}

TEST_CASE("total power composition") {
    ScenarioConfig cfg = default_config();
    cfg.power.tx_power_dbm = 30.0;  // 1 W
    cfg.power.pa_efficiency = 0.4;
    cfg.power.haps_static_w = 5.0;
    cfg.power.user_static_w = 0.0;
    CHECK(total_power(Scheme::I, cfg, 0.0) == doctest::Approx(7.5));

    SUBCASE("scheme III adds exactly the element statics") {
        cfg.ris.element_static_power_w = 0.010;
        CHECK(total_power(Scheme::III, cfg, 0.0) - total_power(Scheme::I, cfg, 0.0) ==
              doctest::Approx(50 * 0.010));
    }

    SUBCASE("scheme IV at unity amplitude equals scheme III") {
        cfg.ris.ris_mode = RisMode::active;
        cfg.ris.rho = 1.0;
        cfg.ris.element_static_power_w = 0.0;
        CHECK(total_power(Scheme::IV, cfg, 0.123) ==
              doctest::Approx(total_power(Scheme::III, cfg, 0.123)));
    }

    SUBCASE("scheme II adds relay circuit and PA draw") {
        cfg.power.uav_static_w = 2.0;
        CHECK(total_power(Scheme::II, cfg, 0.0) ==
              doctest::Approx(7.5 + 2.0 + 1.0 / 0.4));
    }
}

TEST_CASE("impaired per-user rates respect the distortion ceiling at every power") {
    ScenarioConfig cfg = load_config(R"({
        "geometry": {"num_users": 1, "user_area_radius": 0.0},
        "radio": {"shadowing_sigma": {"los": 0, "nlos": 0},
                   "los_table": [[0, 1.0], [90, 1.0]],
                   "rician_k": {"haps_ground": 30, "haps_uav": 30, "uav_ground": 30}}
    })");
    const double hop[] = {cfg.impairments.kappa_tx, cfg.impairments.kappa_rx};
    const double ris[] = {cfg.impairments.kappa_tx, cfg.impairments.kappa_ris,
                          cfg.impairments.kappa_rx};
    const double k_hop_sq = std::pow(aggregate_kappa(hop), 2);
    const double cap_link = std::log2(1.0 + 1.0 / k_hop_sq);
    const double cap_ris = std::log2(1.0 + 1.0 / std::pow(aggregate_kappa(ris), 2));
    // Scheme II combines the saturated relay cascade with the saturated
    // direct branch, so its ceiling is the sum of the two branch ceilings.
    const double dual_hop = 2.0 * k_hop_sq + k_hop_sq * k_hop_sq;
    const double cap_relay = 0.5 * std::log2(1.0 + 1.0 / dual_hop + 1.0 / k_hop_sq);
    for (double tx_dbm : {0.0, 30.0, 60.0, 90.0, 115.0, 140.0}) {
        cfg.power.tx_power_dbm = tx_dbm;
        for (int t = 0; t < 50; ++t) {
            Rng rng(derive_trial_seed(55, t));
            const ChannelRealization r = draw_realization(cfg, rng);
            CHECK(evaluate_scheme(Scheme::I, r, cfg, Condition::impaired).per_user_rate[0] <=
                  cap_link + 1e-9);
            CHECK(evaluate_scheme(Scheme::II, r, cfg, Condition::impaired).per_user_rate[0] <=
                  cap_relay + 1e-9);
            CHECK(evaluate_scheme(Scheme::III, r, cfg, Condition::impaired).per_user_rate[0] <=
                  cap_ris + 1e-9);
            CHECK(evaluate_scheme(Scheme::IV, r, cfg, Condition::impaired).per_user_rate[0] <=
                  cap_ris + 1e-9);
        }
    }
}

TEST_CASE("invalid scheme id is rejected") {
    ScenarioConfig cfg = default_config();
    Rng rng(1);
    const ChannelRealization r = draw_realization(cfg, rng);
    CHECK_THROWS_AS(evaluate_scheme(static_cast<Scheme>(9), r, cfg, Condition::ideal),
                    std::invalid_argument);
}
