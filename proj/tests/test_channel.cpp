#include <cmath>

#include <doctest.h>

#include "ntnsim/channel.hpp"

using namespace ntnsim;

TEST_CASE("free-space path loss") {
    CHECK(fspl_db(1.0, 1.0) == doctest::Approx(-147.55));
    CHECK(fspl_db(10e3, 2e9) == doctest::Approx(118.4706).epsilon(1e-5));
    CHECK(fspl_db(20e3, 2e9) == doctest::Approx(124.4912).epsilon(1e-5));
    CHECK_THROWS_AS(fspl_db(0.5, 2e9), std::domain_error);
}

TEST_CASE("doubling the distance costs 6.02 dB") {
    Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        const double d = 1.0 + rng.uniform01() * 1e5;
        const double f = 1e8 + rng.uniform01() * 1e10;
        CHECK(fspl_db(2 * d, f) - fspl_db(d, f) == doctest::Approx(6.0206).epsilon(1e-4));
    }
}

TEST_CASE("LoS probability interpolation") {
    const std::vector<LosTableRow> table = {{10, 0.4}, {30, 0.6}, {90, 0.99}};
    CHECK(los_probability(90.0, table) == doctest::Approx(0.99));
    CHECK(los_probability(20.0, table) == doctest::Approx(0.5));
    CHECK(los_probability(0.0, table) == doctest::Approx(0.4));  // clamped below the table

    const std::vector<LosTableRow> constant = {{0, 0.25}, {90, 0.25}};
    for (double e : {0.0, 13.7, 45.0, 88.8}) CHECK(los_probability(e, constant) == doctest::Approx(0.25));
}

TEST_CASE("LoS probability is monotone for a monotone table") {
    const auto& table = default_urban_los_table();
    double prev = -1.0;
    for (double e = 0.0; e <= 90.0; e += 0.5) {
        const double p = los_probability(e, table);
        CHECK(p >= prev);
        CHECK(p >= 0.0);
        CHECK(p <= 1.0);
        prev = p;
    }
}

namespace {

ScenarioConfig config_with(const std::string& radio_overrides) {
    return load_config(std::string(R"({"radio": )") + radio_overrides + "}");
}

}  // namespace

TEST_CASE("uav_ground links are always LoS") {
    ScenarioConfig cfg = load_config("{}");
    Rng rng(2);
    const LinkGeometry geom{300.0, 40.0, LinkClass::uav_ground};
    for (int i = 0; i < 200; ++i) CHECK(sample_link_state(geom, cfg, rng).is_los);
}

TEST_CASE("deterministic NLoS pathloss is fspl plus clutter") {
    ScenarioConfig cfg = config_with(
        R"({"shadowing_sigma": {"los": 0, "nlos": 0}, "clutter_loss": 20.0,
            "los_table": [[0, 0.0], [90, 0.0]]})");
    Rng rng(4);
    const LinkGeometry geom{10e3, 45.0, LinkClass::haps_ground};
    const LinkState state = sample_link_state(geom, cfg, rng);
    CHECK_FALSE(state.is_los);
    CHECK(state.pathloss_db == doctest::Approx(138.4706).epsilon(1e-5));
}

TEST_CASE("LoS fraction follows the table probability") {
    ScenarioConfig cfg = config_with(R"({"los_table": [[0, 0.7], [90, 0.7]]})");
    Rng rng(6);
    const LinkGeometry geom{10e3, 30.0, LinkClass::haps_ground};
    int los = 0;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i)
        if (sample_link_state(geom, cfg, rng).is_los) ++los;
    CHECK(static_cast<double>(los) / draws == doctest::Approx(0.7).epsilon(0.015));
}

TEST_CASE("NLoS pathloss dominates LoS at identical distance without shadowing") {
    ScenarioConfig cfg = config_with(R"({"shadowing_sigma": {"los": 0, "nlos": 0}})");
    Rng rng(8);
    const LinkGeometry geom{5e3, 25.0, LinkClass::haps_ground};
    double los_pl = 0.0, nlos_pl = 0.0;
    bool saw_los = false, saw_nlos = false;
    for (int i = 0; i < 1000 && !(saw_los && saw_nlos); ++i) {
        const LinkState s = sample_link_state(geom, cfg, rng);
        (s.is_los ? los_pl : nlos_pl) = s.pathloss_db;
        (s.is_los ? saw_los : saw_nlos) = true;
    }
    REQUIRE(saw_los);
    REQUIRE(saw_nlos);
    CHECK(nlos_pl >= los_pl);
}

TEST_CASE("huge K collapses to the LoS component") {
    Rng rng(10);
    const cgain g = sample_rician(1e15, 1.0, rng);
    CHECK(std::norm(g) == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("rician mean power is the configured mean power") {
    Rng rng(12);
    for (double k : {0.0, 10.0}) {
        double sum = 0.0;
        const int draws = 1000000;
        for (int i = 0; i < draws; ++i) sum += std::norm(sample_rician(k, 1.0, rng));
        CHECK(sum / draws == doctest::Approx(1.0).epsilon(0.01));
    }
}

TEST_CASE("moment estimate recovers the configured K factor") {
    // With X = |g|^2: Var X / (E X)^2 = (2K+1)/(K+1)^2, inverted as
    // K = ((1-c) + sqrt(1-c)) / c.
    Rng rng(14);
    const double k_true = 10.0;
    const int draws = 1000000;
    double sum = 0.0, sum_sq = 0.0;
    for (int i = 0; i < draws; ++i) {
        const double x = std::norm(sample_rician(k_true, 1.0, rng));
        sum += x;
        sum_sq += x * x;
    }
    const double mean = sum / draws;
    const double var = sum_sq / draws - mean * mean;
    const double c = var / (mean * mean);
    const double k_hat = ((1.0 - c) + std::sqrt(1.0 - c)) / c;
    CHECK(k_hat == doctest::Approx(k_true).epsilon(0.05));
}

TEST_CASE("channel gain applies the large-scale loss") {
    const cgain fading{1.0, 0.0};
    CHECK(channel_gain({true, 0.0, 0.0}, fading) == fading);
    CHECK(std::abs(channel_gain({true, 0.0, 20.0}, fading)) == doctest::Approx(0.1));
    const cgain g = channel_gain({true, 0.0, 124.49}, fading);
    CHECK(std::norm(g) == doctest::Approx(3.556e-13).epsilon(1e-3));
}
