// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef SECUREPRUNE_SIMNET_BENCH_HPP
#define SECUREPRUNE_SIMNET_BENCH_HPP

#include <cstdint>
#include <vector>

#include <secureprune/acc/group.hpp>
#include <secureprune/simnet/metrics.hpp>

namespace secureprune {

// Measures the full per-block proof verification a validator performs
// for a block spending `size` records and creating `size` records:
// deriving the prime representatives of both sets, multiplying them
// into batch exponents, and checking the deletion and addition proofs
// of exponentiation. Returns the mean wall-clock seconds over
// `trials` runs per size.
std::vector<ProofBenchRow> bench_proofs(const std::vector<uint32_t>& sizes,
                                        const GroupParams& params,
                                        uint32_t trials = 5);

} // namespace secureprune

#endif // SECUREPRUNE_SIMNET_BENCH_HPP
