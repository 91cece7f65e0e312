// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef SECUREPRUNE_CONSENSUS_CONFIRMATIONS_HPP
#define SECUREPRUNE_CONSENSUS_CONFIRMATIONS_HPP

namespace secureprune {

// Probability that an attacker controlling fraction q of the hashrate
// ever overtakes a block buried under z confirmations: the Poisson
// mixture over the attacker's progress while the honest chain mined z
// blocks, each branch weighted by the catch-up probability of a
// deficit random walk.
double attacker_success_probability(double q, int z);

// Smallest z >= 1 whose attacker success probability is below
// p_target. Throws ConfigError for q >= 0.5 (no finality: the attacker
// eventually wins with certainty) or out-of-range arguments.
int confirmations_required(double q, double p_target);

} // namespace secureprune

#endif // SECUREPRUNE_CONSENSUS_CONFIRMATIONS_HPP
