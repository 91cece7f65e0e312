// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <secureprune/consensus/params.hpp>

#include <secureprune/acc/accumulator.hpp>
#include <secureprune/ledger/merkle.hpp>
#include <secureprune/ledger/utxo.hpp>

namespace secureprune {

ChainParams ChainParams::test_default()
{
    ChainParams params;
    params.group = GroupParams::test_small();
    params.prune = PruneConfig{100, 50};
    params.coinbase_reward = 50;
    params.difficulty_bits = 0;
    params.genesis_outputs = make_genesis_outputs(8, 1000);
    return params;
}

std::vector<TxOutput> make_genesis_outputs(uint32_t count, uint64_t amount)
{
    std::vector<TxOutput> outputs;
    outputs.reserve(count);
    for (uint32_t i = 0; i < count; ++i) {
        outputs.push_back(TxOutput{amount, to_bytes("genesis-" + std::to_string(i))});
    }
    return outputs;
}

Block make_genesis(const ChainParams& params)
{
    Transaction coinbase;
    coinbase.is_coinbase = true;
    coinbase.coinbase_height = 0;
    coinbase.outputs = params.genesis_outputs;

    Block genesis;
    genesis.txs = {coinbase};

    const UtxoSet empty_state;
    const TransitionResult transition = state_transition(empty_state, genesis.txs);
    std::vector<Bigint> added_primes;
    added_primes.reserve(transition.added.size());
    for (const UtxoRecord& rec : transition.added) {
        added_primes.push_back(record_prime(rec));
    }

    // No deletions from the empty state; the deletion proof is the
    // trivial exponent-1 statement.
    const Bigint empty = acc_empty(params.group);
    const BatchResult del = batch_del(params.group, empty, {});
    genesis.acc_after_del = del.state;
    genesis.proof_del = del.proof;
    const BatchResult add = batch_add(params.group, del.state, added_primes);
    genesis.proof_add = add.proof;

    genesis.header.prev_hash = Hash256{};
    genesis.header.nonce = 0;
    genesis.header.accumulator = add.state;
    genesis.header.merkle_root = merkle_root(genesis.txs);
    genesis.header.version = 1;
    genesis.header.timestamp = 0;
    genesis.header.difficulty_bits = 0;
    return genesis;
}

} // namespace secureprune
