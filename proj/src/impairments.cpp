#include "ntnsim/impairments.hpp"

#include <cmath>
#include <stdexcept>

namespace ntnsim {

double aggregate_kappa(std::span<const double> kappas) {
    double sum_sq = 0.0;
    for (double k : kappas) {
        if (k < 0.0) throw std::domain_error("aggregate_kappa: levels must be >= 0");
        sum_sq += k * k;
    }
    return std::sqrt(sum_sq);
}

double effective_sndr(double snr, double kappa_agg) {
    if (snr < 0.0 || kappa_agg < 0.0)
        throw std::domain_error("effective_sndr: arguments must be >= 0");
    return snr / (snr * kappa_agg * kappa_agg + 1.0);
}

double af_cascade_sndr(double gamma1, double gamma2) {
    if (gamma1 < 0.0 || gamma2 < 0.0)
        throw std::domain_error("af_cascade_sndr: arguments must be >= 0");
    return gamma1 * gamma2 / (gamma1 + gamma2 + 1.0);
}

}  // namespace ntnsim
