// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <secureprune/consensus/chain_builder.hpp>

#include <secureprune/util/errors.hpp>

namespace secureprune {

ChainHarness::ChainHarness(ChainBuildConfig cfg)
    : m_cfg(std::move(cfg)), m_rng(m_cfg.seed)
{
    m_nodes.emplace_back(m_cfg.params, to_bytes("miner-0"), /*prune_enabled=*/true);
}

size_t ChainHarness::add_node(ByteVec owner, bool prune_enabled)
{
    if (m_nodes.front().tip_height() != 0) {
        throw ConfigError("ChainHarness: nodes must join at genesis");
    }
    m_nodes.emplace_back(m_cfg.params, std::move(owner), prune_enabled);
    return m_nodes.size() - 1;
}

Transaction ChainHarness::make_synthetic_tx(std::vector<UtxoRecord>& spendable)
{
    Transaction tx;
    // Spend two records when available, one otherwise; the pool only
    // holds records not yet picked for this block.
    const size_t want = spendable.size() >= 2 ? 2 : 1;
    uint64_t total = 0;
    for (size_t i = 0; i < want; ++i) {
        const size_t pick = static_cast<size_t>(m_rng() % spendable.size());
        const UtxoRecord rec = spendable[pick];
        spendable.erase(spendable.begin() + static_cast<ptrdiff_t>(pick));
        tx.inputs.push_back(rec.key);
        total += rec.amount;
    }
    const ByteVec owner_a = to_bytes("user-" + std::to_string(m_user_counter++));
    const ByteVec owner_b = to_bytes("user-" + std::to_string(m_user_counter++));
    if (total >= 2) {
        tx.outputs.push_back(TxOutput{total / 2, owner_a});
        tx.outputs.push_back(TxOutput{total - total / 2, owner_b});
    } else {
        tx.outputs.push_back(TxOutput{total, owner_a});
    }
    return tx;
}

void ChainHarness::mine_blocks(uint32_t count)
{
    for (uint32_t i = 0; i < count; ++i) {
        NodeState& miner = m_nodes.front();
        std::vector<UtxoRecord> spendable;
        spendable.reserve(miner.state().size());
        for (const auto& [key, value] : miner.state().records()) {
            spendable.push_back(make_record(key, value));
        }
        for (uint32_t t = 0; t < m_cfg.txs_per_block && !spendable.empty(); ++t) {
            miner.add_to_mempool(make_synthetic_tx(spendable));
        }

        const uint32_t height = miner.tip_height() + 1;
        const Block block = miner.mine(/*timestamp=*/height, /*stamped_nonce=*/height);
        for (NodeState& node : m_nodes) {
            const ValidationResult res = node.submit_block(block);
            if (!res.accepted) {
                throw IntegrityError("ChainHarness: node rejected mined block (" +
                                     reject_reason_name(res.reason) + ")");
            }
        }
    }
}

} // namespace secureprune
