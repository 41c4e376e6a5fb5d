#include "ntnsim/access.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ntnsim {

std::vector<int> sic_order(std::span<const double> effective_gains) {
    std::vector<int> order(effective_gains.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return effective_gains[a] < effective_gains[b]; });
    return order;
}

NomaAllocation make_allocation(std::span<const double> coefficients,
                               std::span<const double> effective_gains) {
    if (coefficients.size() != effective_gains.size())
        throw std::invalid_argument("make_allocation: length mismatch");
    return NomaAllocation{{coefficients.begin(), coefficients.end()}, sic_order(effective_gains)};
}

std::vector<double> noma_sindrs(std::span<const double> effective_gains,
                                const NomaAllocation& allocation, double tx_power_w,
                                std::span<const double> noise_power_w, double kappa_agg) {
    const size_t n = effective_gains.size();
    if (allocation.coefficients.size() != n || allocation.order.size() != n)
        throw std::invalid_argument("noma_sindrs: length mismatch");
    if (noise_power_w.size() != n && noise_power_w.size() != 1)
        throw std::invalid_argument("noma_sindrs: noise length mismatch");

    // Residual interference at rank k is the power of messages decoded later
    // (ranks above k); the strongest user has none.
    std::vector<double> residual(n, 0.0);
    double tail = 0.0;
    for (size_t k = n; k-- > 0;) {
        residual[k] = tail;
        tail += allocation.coefficients[k];
    }

    const double kappa_sq = kappa_agg * kappa_agg;
    std::vector<double> sindrs(n, 0.0);
    for (size_t k = 0; k < n; ++k) {
        const int user = allocation.order[k];
        const double gain = effective_gains[user];
        const double noise = noise_power_w.size() == 1 ? noise_power_w[0] : noise_power_w[user];
        const double received = tx_power_w * gain;
        sindrs[user] = allocation.coefficients[k] * received /
                       (received * (residual[k] + kappa_sq) + noise);
    }
    return sindrs;
}

std::vector<double> noma_sindrs(std::span<const double> effective_gains,
                                const NomaAllocation& allocation, double tx_power_w,
                                double noise_power_w, double kappa_agg) {
    return noma_sindrs(effective_gains, allocation, tx_power_w,
                       std::span<const double>(&noise_power_w, 1), kappa_agg);
}

std::vector<double> rates(std::span<const double> sindrs, double slot_fraction) {
    if (slot_fraction <= 0.0 || slot_fraction > 1.0)
        throw std::invalid_argument("rates: slot fraction must lie in (0, 1]");
    std::vector<double> out(sindrs.size());
    for (size_t i = 0; i < sindrs.size(); ++i) out[i] = slot_fraction * std::log2(1.0 + sindrs[i]);
    return out;
}

int select_antenna(std::span<const double> per_antenna_sum_rates) {
    if (per_antenna_sum_rates.empty())
        throw std::invalid_argument("select_antenna: need at least one antenna");
    int best = 0;
    for (int m = 1; m < static_cast<int>(per_antenna_sum_rates.size()); ++m)
        if (per_antenna_sum_rates[m] > per_antenna_sum_rates[best]) best = m;
    return best;
}

}  // namespace ntnsim
