// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef SECUREPRUNE_SIMNET_SIM_HPP
#define SECUREPRUNE_SIMNET_SIM_HPP

#include <cstdint>

#include <secureprune/simnet/config.hpp>
#include <secureprune/simnet/metrics.hpp>

namespace secureprune {

// Runs the discrete-event network simulation described by `config`
// until the observer node's chain reaches `duration_blocks`. Fully
// deterministic for a fixed config (including seed): every random
// draw comes from one seeded generator, and simultaneous events fire
// in scheduling order.
Metrics run_sim(const SimConfig& config);

// Convenience wrapper: runs the reaffirmation-based baseline protocol
// with the given window parameters, leaving the rest of `config`
// untouched.
Metrics coinprune_baseline(const SimConfig& config, const CoinPruneParams& params);

// Measured synchronization time for one node joining at
// `join_height`: runs the simulation until the network reaches that
// height and accounts for every block body the serving peer actually
// retained under the protocol's pruning rule.
double simulate_join(const SimConfig& config, uint32_t join_height);

// Closed-form synchronization time for downloading and validating
// `n_blocks` bodies: n*(8b/R + T_p) + n*8b/R_v, plus n*T_proofs when
// the protocol verifies accumulator proofs per block. Block size `b`
// is MiB, bandwidths are Mbit/s; the factor 8 converts MiB to Mbit.
double sync_time_analytic(Protocol protocol, uint32_t n_blocks, const SimConfig& config);

} // namespace secureprune

#endif // SECUREPRUNE_SIMNET_SIM_HPP
