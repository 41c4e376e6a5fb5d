#include <cmath>

#include <doctest.h>

#include "ntnsim/impairments.hpp"
#include "ntnsim/rng.hpp"

using namespace ntnsim;

TEST_CASE("aggregate kappa is root-sum-square") {
    const double single[] = {0.1, 0.0};
    CHECK(aggregate_kappa(single) == doctest::Approx(0.1));
    const double ideal[] = {0.0, 0.0, 0.0};
    CHECK(aggregate_kappa(ideal) == doctest::Approx(0.0));
    const double pair[] = {0.1, 0.1};
    CHECK(aggregate_kappa(pair) == doctest::Approx(0.14142).epsilon(1e-4));
}

TEST_CASE("effective SNDR transform") {
    CHECK(effective_sndr(7.3, 0.0) == doctest::Approx(7.3));
    CHECK(effective_sndr(1e12, 0.1) == doctest::Approx(100.0).epsilon(1e-6));
    CHECK(effective_sndr(10.0, 0.1) == doctest::Approx(9.0909).epsilon(1e-4));
}

TEST_CASE("effective SNDR monotonicity and ceiling") {
    Rng rng(21);
    for (int i = 0; i < 500; ++i) {
        const double snr = rng.uniform01() * 1e6;
        const double kappa = 0.01 + rng.uniform01() * 0.5;
        const double out = effective_sndr(snr, kappa);
        CHECK(out <= snr);
        CHECK(out <= 1.0 / (kappa * kappa));
        // strictly increasing in snr, strictly decreasing in kappa
        CHECK(effective_sndr(snr * 1.01 + 1e-9, kappa) > out);
        if (snr > 0.0) CHECK(effective_sndr(snr, kappa * 1.01) < out);
        CHECK(effective_sndr(snr, 0.0) == doctest::Approx(snr));
    }
}

TEST_CASE("AF cascade") {
    CHECK(af_cascade_sndr(0.0, 123.0) == doctest::Approx(0.0));
    CHECK(af_cascade_sndr(10.0, 10.0) == doctest::Approx(4.7619).epsilon(1e-4));
    const double g = 1e9;
    CHECK(af_cascade_sndr(g, g) == doctest::Approx(g / 2.0).epsilon(1e-6));
}

TEST_CASE("AF cascade never beats the weaker hop") {
    Rng rng(22);
    for (int i = 0; i < 500; ++i) {
        const double g1 = rng.uniform01() * 1e4;
        const double g2 = rng.uniform01() * 1e4;
        CHECK(af_cascade_sndr(g1, g2) <= std::min(g1, g2));
    }
}
