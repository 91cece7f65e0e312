// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <secureprune/consensus/confirmations.hpp>

#include <cmath>

#include <secureprune/util/errors.hpp>

namespace secureprune {

double attacker_success_probability(double q, int z)
{
    if (q <= 0.0) {
        return 0.0;
    }
    if (z <= 0) {
        // With no confirmations the attacker's replacement chain is
        // never behind, so the race is already won.
        return 1.0;
    }
    const double p = 1.0 - q;
    const double lambda = z * (q / p);
    const double ratio = q / p;
    // 1 - sum_{k=0..z} Pois(k; lambda) * (1 - ratio^(z-k)); the Poisson
    // term is evaluated in log space to stay finite at large z.
    double sum = 0.0;
    for (int k = 0; k <= z; ++k) {
        const double log_pois =
            -lambda + k * std::log(lambda) - std::lgamma(k + 1.0);
        sum += std::exp(log_pois) * (1.0 - std::pow(ratio, z - k));
    }
    const double prob = 1.0 - sum;
    return prob < 0.0 ? 0.0 : prob;
}

int confirmations_required(double q, double p_target)
{
    if (q < 0.0 || q >= 0.5) {
        throw ConfigError(
            "confirmations_required: attacker fraction must be in [0, 0.5)");
    }
    if (p_target <= 0.0 || p_target >= 1.0) {
        throw ConfigError("confirmations_required: target must be in (0, 1)");
    }
    constexpr int MAX_Z = 1 << 20;
    for (int z = 1; z <= MAX_Z; ++z) {
        if (attacker_success_probability(q, z) < p_target) {
            return z;
        }
    }
    throw ConfigError("confirmations_required: no depth below target");
}

} // namespace secureprune
