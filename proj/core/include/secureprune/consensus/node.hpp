// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef SECUREPRUNE_CONSENSUS_NODE_HPP
#define SECUREPRUNE_CONSENSUS_NODE_HPP

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <secureprune/acc/accumulator.hpp>
#include <secureprune/consensus/params.hpp>
#include <secureprune/consensus/snapshot.hpp>
#include <secureprune/ledger/block.hpp>
#include <secureprune/ledger/utxo.hpp>

namespace secureprune {

enum class RejectReason {
    none,
    unknown_parent, // buffered as orphan until the parent shows up
    bad_pow,
    bad_tx,
    bad_merkle,
    bad_proof_del,
    bad_proof_add,
    stale,     // valid-looking side block that does not win the fork
    duplicate, // block already known
};

std::string reject_reason_name(RejectReason reason);

struct ValidationResult {
    bool accepted = false;
    RejectReason reason = RejectReason::none;
    // True when accepting this block replaced the previous best chain.
    bool reorged = false;
};

// Canonical byte key for witness-table entries.
ByteVec utxo_key_bytes(const UtxoKey& key);

// One logical full node: best chain, current state, membership
// witnesses for every record of the state, mempool, and retained
// snapshots. All mutation happens through sequential calls; the owning
// actor provides any cross-node sequencing.
class NodeState
{
public:
    NodeState(ChainParams params, ByteVec owner_id, bool prune_enabled);

    const ChainParams& params() const { return m_params; }
    const Chain& chain() const { return m_chain; }
    const UtxoSet& state() const { return m_state; }
    const WitnessTable& witnesses() const { return m_witnesses; }
    const std::vector<Snapshot>& snapshots() const { return m_snapshots; }
    const std::vector<Transaction>& mempool() const { return m_mempool; }
    const ByteVec& owner_id() const { return m_owner; }
    bool prune_enabled() const { return m_prune_enabled; }

    uint32_t tip_height() const { return m_chain.tip_height(); }
    Hash256 tip_hash() const { return m_chain.tip_hash(); }
    size_t retained_bodies() const { return m_chain.body_count(); }

    void add_to_mempool(const Transaction& tx) { m_mempool.push_back(tx); }

    // Assemble the next block on the current tip: select mempool
    // transactions within the block size budget (dropping any the state
    // transition rejects), compute the deletion/addition accumulator
    // updates with their proofs, and solve the header. With nonzero
    // difficulty the nonce is ground (bounded by the 32-bit nonce
    // space); at difficulty zero block production is externally
    // scheduled and `stamped_nonce` is written as-is.
    Block mine(uint64_t timestamp, uint32_t stamped_nonce = 0) const;

    // Full intake pipeline: duplicate/orphan handling, validation,
    // connection, fork resolution, snapshot release and pruning.
    ValidationResult submit_block(const Block& block);

    // Snapshot of the post-block state when the tip height is a
    // multiple of the snapshot interval (idempotent at one height);
    // nothing otherwise.
    std::optional<Snapshot> release_snapshot();
    std::optional<Snapshot> latest_snapshot() const;

    // Discard bodies below the latest snapshot once it has at least k
    // blocks on top; headers are never discarded. Returns the number of
    // bodies pruned.
    uint32_t try_prune();

    // Recompute the membership witness of every record in the current
    // state from scratch.
    void rebuild_witnesses();

    // Reconstruct a node from bootstrap material: full header chain,
    // verified snapshot, and the bodies after the snapshot height.
    // Bodies are fully validated while replaying; a failure throws
    // IntegrityError. Header-chain and snapshot verification is the
    // caller's job (see bootstrap.hpp).
    static NodeState assemble(ChainParams params, ByteVec owner_id,
                              bool prune_enabled,
                              const std::vector<BlockHeader>& headers,
                              const Snapshot& snapshot,
                              const std::map<uint32_t, Block>& bodies);

private:
    struct ContextCheck {
        bool ok = false;
        RejectReason reason = RejectReason::none;
        TransitionResult transition;
        std::vector<Bigint> deleted_primes;
        std::vector<Bigint> added_primes;
    };

    // Contextual validation of `block` on top of (state, parent
    // accumulator): transactions, Merkle commitment, proof-of-work,
    // and the two exponentiation proofs.
    static ContextCheck validate_in_context(const ChainParams& params,
                                            const UtxoSet& state,
                                            const Bigint& parent_acc,
                                            const Block& block);

    ValidationResult connect_tip(const Block& block);
    void apply_connect(const Block& block, ContextCheck&& check,
                       bool update_witnesses);
    void post_connect();
    void process_orphans_of(const Hash256& parent);
    bool try_reorg(const Hash256& leaf_hash);
    UtxoSet replay_main_to(uint32_t height) const;

    ChainParams m_params;
    ByteVec m_owner;
    bool m_prune_enabled = false;

    Chain m_chain;
    UtxoSet m_state;
    WitnessTable m_witnesses;
    std::vector<Transaction> m_mempool;
    std::vector<Snapshot> m_snapshots; // ascending height, at most two
    // State at the prune boundary: the base for fork replays.
    UtxoSet m_anchor_state;

    std::map<Hash256, uint32_t> m_header_index; // main-chain hash -> height
    std::map<Hash256, Block> m_side_blocks;     // known blocks off the main chain
    std::deque<Block> m_orphans;                // parent unknown, FIFO, capped
};

// Longest chain wins; equal heights keep the earliest candidate.
// Candidates are indexes into an ordering by arrival.
size_t select_chain_index(const std::vector<const Chain*>& candidates);

} // namespace secureprune

#endif // SECUREPRUNE_CONSENSUS_NODE_HPP
