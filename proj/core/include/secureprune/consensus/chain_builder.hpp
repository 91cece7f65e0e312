// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef SECUREPRUNE_CONSENSUS_CHAIN_BUILDER_HPP
#define SECUREPRUNE_CONSENSUS_CHAIN_BUILDER_HPP

#include <cstdint>
#include <random>
#include <vector>

#include <secureprune/consensus/node.hpp>

namespace secureprune {

struct ChainBuildConfig {
    ChainParams params;
    // Synthetic 2-input/2-output transactions included per block (fewer
    // when the state is too small to supply inputs).
    uint32_t txs_per_block = 2;
    uint64_t seed = 0;
};

// Drives a deterministic single-miner chain across any number of
// observer nodes: every mined block is submitted to every node, so
// archival and pruning replicas can be compared at each height.
class ChainHarness
{
public:
    explicit ChainHarness(ChainBuildConfig cfg);

    // Nodes join at genesis. Returns the node's index; index 0 is
    // always the miner created by the constructor.
    size_t add_node(ByteVec owner, bool prune_enabled);

    NodeState& node(size_t index) { return m_nodes[index]; }
    const NodeState& node(size_t index) const { return m_nodes[index]; }
    size_t node_count() const { return m_nodes.size(); }

    // Mine `count` blocks on the miner, each filled with synthetic
    // spends of existing records, and submit each to every node.
    void mine_blocks(uint32_t count);

private:
    Transaction make_synthetic_tx(std::vector<UtxoRecord>& spendable);

    ChainBuildConfig m_cfg;
    std::mt19937_64 m_rng;
    std::vector<NodeState> m_nodes;
    uint64_t m_user_counter = 0;
};

} // namespace secureprune

#endif // SECUREPRUNE_CONSENSUS_CHAIN_BUILDER_HPP
