#pragma once

#include <span>

namespace ntnsim {

// Aggregate residual transceiver distortion. A single EVM-like level kappa
// per chain stands in for the individual RF impairment mechanisms.
struct ImpairmentProfile {
    bool enabled = true;
    double kappa_tx = 0.17;   // transmitting nodes (HAPS, UAV)
    double kappa_rx = 0.17;   // receiving nodes (UAV, users)
    double kappa_ris = 0.05;  // RIS node

    bool operator==(const ImpairmentProfile&) const = default;
};

// Root-sum-square of per-node distortion levels.
double aggregate_kappa(std::span<const double> kappas);

// SNDR transform of the aggregate distortion model:
//   gamma -> gamma / (gamma * kappa^2 + 1).
// Saturates at 1/kappa^2 as gamma grows.
double effective_sndr(double snr, double kappa_agg);

// Exact end-to-end SNDR of a variable-gain AF hop pair:
//   g1 * g2 / (g1 + g2 + 1).
// Feeding per-hop impairment-transformed SNDRs through this reproduces the
// dual-hop distortion expression with ceiling 1/(k1^2 + k2^2 + k1^2 k2^2).
double af_cascade_sndr(double gamma1, double gamma2);

}  // namespace ntnsim
