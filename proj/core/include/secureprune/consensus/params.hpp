// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef SECUREPRUNE_CONSENSUS_PARAMS_HPP
#define SECUREPRUNE_CONSENSUS_PARAMS_HPP

#include <cstdint>
#include <vector>

#include <secureprune/acc/group.hpp>
#include <secureprune/ledger/block.hpp>
#include <secureprune/ledger/tx.hpp>

namespace secureprune {

// Snapshot cadence and the confirmation depth that both finalizes a
// snapshot and gates pruning below it.
struct PruneConfig {
    uint32_t snapshot_interval = 0; // blocks between snapshots
    uint32_t confirmations = 0;     // blocks required on top before pruning

    // Retained block bodies never exceed this many.
    uint32_t max_storage_blocks() const { return snapshot_interval + confirmations; }
};

// Everything nodes must agree on out of band.
struct ChainParams {
    GroupParams group;
    PruneConfig prune;
    uint64_t coinbase_reward = 50;
    // Leading zero bits required of header hashes (0 disables grinding:
    // block production is then externally scheduled).
    uint32_t difficulty_bits = 0;
    // Mining-side budget for the serialized size of a block's
    // transaction list.
    size_t max_block_bytes = 1 << 20;
    // Initial allocation carried by the genesis coinbase, so there are
    // spendable coins from the start.
    std::vector<TxOutput> genesis_outputs;

    // Desk-scale parameters on the tiny test group.
    static ChainParams test_default();
};

// `count` outputs of `amount` coins each, owners "genesis-0".."genesis-N".
std::vector<TxOutput> make_genesis_outputs(uint32_t count, uint64_t amount);

// The genesis block determined by the parameters: a single coinbase
// carrying the initial allocation, accumulated from the empty state.
// Deterministic, so every node derives the identical block.
Block make_genesis(const ChainParams& params);

} // namespace secureprune

#endif // SECUREPRUNE_CONSENSUS_PARAMS_HPP
