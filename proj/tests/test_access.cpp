#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <doctest.h>

#include "ntnsim/access.hpp"
#include "ntnsim/rng.hpp"

using namespace ntnsim;

TEST_CASE("sic order sorts ascending by gain with index tie-break") {
    const double gains[] = {0.5, 2.0, 1.0};
    CHECK(sic_order(gains) == std::vector<int>{0, 2, 1});
    const double tied[] = {1.0, 1.0};
    CHECK(sic_order(tied) == std::vector<int>{0, 1});
    const double one[] = {42.0};
    CHECK(sic_order(one) == std::vector<int>{0});
}

TEST_CASE("single user collapses to plain SNR") {
    const double gains[] = {0.37};
    const double coeffs[] = {1.0};
    const auto alloc = make_allocation(coeffs, gains);
    const auto sindrs = noma_sindrs(gains, alloc, 2.0, 0.5, 0.0);
    CHECK(sindrs[0] == doctest::Approx(2.0 * 0.37 / 0.5));
}

TEST_CASE("two-user hand-computed SINDRs") {
    // Equal gains with P*G/N0 = 10, a = [0.8, 0.2].
    const double gains[] = {1.0, 1.0};
    const double coeffs[] = {0.8, 0.2};
    const auto alloc = make_allocation(coeffs, gains);

    const auto ideal = noma_sindrs(gains, alloc, 10.0, 1.0, 0.0);
    CHECK(ideal[0] == doctest::Approx(8.0 / 3.0).epsilon(1e-9));
    CHECK(ideal[1] == doctest::Approx(2.0).epsilon(1e-9));

    const auto impaired = noma_sindrs(gains, alloc, 10.0, 1.0, std::sqrt(0.05));
    CHECK(impaired[0] == doctest::Approx(8.0 / 3.5).epsilon(1e-9));
    CHECK(impaired[1] == doctest::Approx(2.0 / 1.5).epsilon(1e-9));
}

TEST_CASE("rates apply the Shannon map and slot fraction") {
    const double sindrs[] = {0.0, 3.0};
    auto full = rates(sindrs, 1.0);
    CHECK(full[0] == doctest::Approx(0.0));
    CHECK(full[1] == doctest::Approx(2.0));
    auto half = rates(sindrs, 0.5);
    CHECK(half[1] == doctest::Approx(1.0));
}

TEST_CASE("antenna selection is argmax with tie to the lowest index") {
    const double ties[] = {1.2, 3.4, 0.5, 3.4};
    CHECK(select_antenna(ties) == 1);
    const double one[] = {0.1};
    CHECK(select_antenna(one) == 0);
    const double equal[] = {2.0, 2.0, 2.0};
    CHECK(select_antenna(equal) == 0);
}

TEST_CASE("selected antenna is never worse than any fixed antenna") {
    Rng rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> sums(4);
        for (auto& s : sums) s = rng.uniform01() * 10.0;
        const int best = select_antenna(sums);
        for (double s : sums) CHECK(sums[best] >= s);
    }
}

TEST_CASE("SINDR approaches the interference/distortion ceiling at high power") {
    const double gains[] = {0.3, 1.0, 2.5};
    const double coeffs[] = {0.6, 0.3, 0.1};
    const auto alloc = make_allocation(coeffs, gains);
    const double noise = 1e-3;
    const double kappa = 0.1;
    const auto sindrs = noma_sindrs(gains, alloc, 1e6 * noise / *std::min_element(gains, gains + 3),
                                    noise, kappa);
    const double residual[] = {0.3 + 0.1, 0.1, 0.0};  // sum of later coefficients per rank
    for (int rank = 0; rank < 3; ++rank) {
        const int user = alloc.order[rank];
        const double ceiling = coeffs[rank] / (residual[rank] + kappa * kappa);
        CHECK(sindrs[user] <= ceiling);
        CHECK(sindrs[user] == doctest::Approx(ceiling).epsilon(0.01));
    }
}

TEST_CASE("SINDR is non-decreasing in transmit power") {
    const double gains[] = {0.4, 1.7};
    const double coeffs[] = {0.7, 0.3};
    const auto alloc = make_allocation(coeffs, gains);
    std::vector<double> prev(2, -1.0);
    for (double p = 0.01; p < 1e5; p *= 3.0) {
        const auto sindrs = noma_sindrs(gains, alloc, p, 1.0, 0.05);
        for (int u = 0; u < 2; ++u) {
            CHECK(sindrs[u] >= prev[u]);
            prev[u] = sindrs[u];
        }
    }
}

TEST_CASE("user labels do not affect results") {
    Rng rng(43);
    const double coeffs[] = {0.6, 0.3, 0.1};
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> gains = {rng.uniform01() * 4, rng.uniform01() * 4, rng.uniform01() * 4};
        const auto direct = noma_sindrs(gains, make_allocation(coeffs, gains), 5.0, 0.1, 0.1);

        std::vector<int> perm = {2, 0, 1};
        std::vector<double> shuffled(3);
        for (int i = 0; i < 3; ++i) shuffled[i] = gains[perm[i]];
        const auto permuted =
            noma_sindrs(shuffled, make_allocation(coeffs, shuffled), 5.0, 0.1, 0.1);
        for (int i = 0; i < 3; ++i) CHECK(permuted[i] == doctest::Approx(direct[perm[i]]));
    }
}
