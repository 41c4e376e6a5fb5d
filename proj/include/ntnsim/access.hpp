#pragma once

#include <span>
#include <vector>

namespace ntnsim {

// Power-domain NOMA allocation: coefficients descending, largest to the
// weakest user; order[k] is the user index at SIC rank k (rank 0 = weakest).
struct NomaAllocation {
    std::vector<double> coefficients;
    std::vector<int> order;
};

// User indices sorted ascending by effective gain; ties to the lower index.
std::vector<int> sic_order(std::span<const double> effective_gains);

NomaAllocation make_allocation(std::span<const double> coefficients,
                               std::span<const double> effective_gains);

// Per-user SINDRs, indexed by user (not rank). User at rank k with gain G:
//   a_k P G / (P G (sum_{j>k} a_j + kappa^2) + N0).
// The per-user-noise overload supports receivers with unequal noise floors.
std::vector<double> noma_sindrs(std::span<const double> effective_gains,
                                const NomaAllocation& allocation, double tx_power_w,
                                double noise_power_w, double kappa_agg);
std::vector<double> noma_sindrs(std::span<const double> effective_gains,
                                const NomaAllocation& allocation, double tx_power_w,
                                std::span<const double> noise_power_w, double kappa_agg);

// slot_fraction * log2(1 + sindr) per user.
std::vector<double> rates(std::span<const double> sindrs, double slot_fraction);

// Argmax over per-antenna sum rates; ties to the lowest index.
int select_antenna(std::span<const double> per_antenna_sum_rates);

}  // namespace ntnsim
