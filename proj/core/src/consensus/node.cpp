// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <secureprune/consensus/node.hpp>

#include <algorithm>

#include <secureprune/ledger/merkle.hpp>
#include <secureprune/util/errors.hpp>

namespace secureprune {

namespace {

constexpr size_t MAX_ORPHANS = 64;
constexpr uint64_t NONCE_BOUND = uint64_t{1} << 32;

} // namespace

std::string reject_reason_name(RejectReason reason)
{
    switch (reason) {
    case RejectReason::none: return "none";
    case RejectReason::unknown_parent: return "unknown-parent";
    case RejectReason::bad_pow: return "bad-pow";
    case RejectReason::bad_tx: return "bad-tx";
    case RejectReason::bad_merkle: return "bad-merkle";
    case RejectReason::bad_proof_del: return "bad-proof-del";
    case RejectReason::bad_proof_add: return "bad-proof-add";
    case RejectReason::stale: return "stale";
    case RejectReason::duplicate: return "duplicate";
    }
    return "unknown";
}

ByteVec utxo_key_bytes(const UtxoKey& key)
{
    Writer w;
    write_utxo_key(w, key);
    return w.take();
}

NodeState::NodeState(ChainParams params, ByteVec owner_id, bool prune_enabled)
    : m_params(std::move(params)),
      m_owner(std::move(owner_id)),
      m_prune_enabled(prune_enabled)
{
    // The genesis block is derived from the parameters, not validated:
    // it is exempt from proof-of-work and every node constructs the
    // identical block.
    const Block genesis = make_genesis(m_params);
    TransitionResult transition = state_transition(UtxoSet{}, genesis.txs);
    std::vector<Bigint> added_primes;
    added_primes.reserve(transition.added.size());
    for (const UtxoRecord& rec : transition.added) {
        added_primes.push_back(record_prime(rec));
    }

    m_state = std::move(transition.state);
    m_state.set_height(0);
    m_chain.append(genesis);
    m_header_index.emplace(header_hash(genesis.header), 0);

    const std::vector<MembershipWitness> wits =
        witnesses_for_added(m_params.group, acc_empty(m_params.group), added_primes);
    for (size_t i = 0; i < wits.size(); ++i) {
        m_witnesses.emplace(utxo_key_bytes(transition.added[i].key), wits[i]);
    }
    m_anchor_state = m_state;
}

NodeState::ContextCheck NodeState::validate_in_context(const ChainParams& params,
                                                       const UtxoSet& state,
                                                       const Bigint& parent_acc,
                                                       const Block& block)
{
    ContextCheck check;
    // Proof-of-work: fixed network-wide difficulty, header hash below
    // the target.
    if (block.header.difficulty_bits != params.difficulty_bits ||
        !hash_meets_difficulty(header_hash(block.header),
                               block.header.difficulty_bits)) {
        check.reason = RejectReason::bad_pow;
        return check;
    }
    // Transactions: one invalid transaction rejects the block.
    try {
        check.transition = state_transition(state, block.txs);
    } catch (const TransitionError&) {
        check.reason = RejectReason::bad_tx;
        return check;
    }
    // Merkle commitment over the transaction list.
    if (!(merkle_root(block.txs) == block.header.merkle_root)) {
        check.reason = RejectReason::bad_merkle;
        return check;
    }
    // Accumulator transition proofs: the intermediate state raised to
    // the product of deleted primes must reach the parent commitment,
    // and raised to the product of added primes must reach this
    // header's commitment.
    check.deleted_primes.reserve(check.transition.deleted.size());
    for (const UtxoRecord& rec : check.transition.deleted) {
        check.deleted_primes.push_back(record_prime(rec));
    }
    check.added_primes.reserve(check.transition.added.size());
    for (const UtxoRecord& rec : check.transition.added) {
        check.added_primes.push_back(record_prime(rec));
    }
    if (!nipoe_verify(params.group, primes_product(check.deleted_primes),
                      block.acc_after_del, parent_acc, block.proof_del)) {
        check.reason = RejectReason::bad_proof_del;
        return check;
    }
    if (!nipoe_verify(params.group, primes_product(check.added_primes),
                      block.acc_after_del, block.header.accumulator,
                      block.proof_add)) {
        check.reason = RejectReason::bad_proof_add;
        return check;
    }
    check.ok = true;
    return check;
}

ValidationResult NodeState::connect_tip(const Block& block)
{
    ContextCheck check = validate_in_context(
        m_params, m_state, m_chain.header_at(tip_height()).accumulator, block);
    if (!check.ok) {
        return ValidationResult{false, check.reason, false};
    }
    apply_connect(block, std::move(check), /*update_witnesses=*/true);
    return ValidationResult{true, RejectReason::none, false};
}

void NodeState::apply_connect(const Block& block, ContextCheck&& check,
                              bool update_witnesses)
{
    const uint32_t height = m_chain.height_count();

    if (update_witnesses) {
        for (const UtxoRecord& rec : check.transition.deleted) {
            m_witnesses.erase(utxo_key_bytes(rec.key));
        }
        m_witnesses = update_witnesses_after_delete(
            m_params.group, block.acc_after_del, m_witnesses, check.deleted_primes);
        m_witnesses = update_witnesses_after_add(m_params.group, m_witnesses,
                                                 check.added_primes);
        const std::vector<MembershipWitness> wits = witnesses_for_added(
            m_params.group, block.acc_after_del, check.added_primes);
        for (size_t i = 0; i < wits.size(); ++i) {
            m_witnesses.insert_or_assign(
                utxo_key_bytes(check.transition.added[i].key), wits[i]);
        }
    }

    m_state = std::move(check.transition.state);
    m_state.set_height(height);
    m_chain.append(block);
    const Hash256 h = header_hash(block.header);
    m_header_index.emplace(h, height);
    m_side_blocks.erase(h);

    // Included transactions leave the mempool.
    m_mempool.erase(std::remove_if(m_mempool.begin(), m_mempool.end(),
                                   [&](const Transaction& tx) {
                                       return std::find(block.txs.begin(),
                                                        block.txs.end(),
                                                        tx) != block.txs.end();
                                   }),
                    m_mempool.end());
}

void NodeState::post_connect()
{
    const uint32_t interval = m_params.prune.snapshot_interval;
    if (interval > 0 && tip_height() > 0 && tip_height() % interval == 0) {
        release_snapshot();
    }
    if (m_prune_enabled) {
        try_prune();
    }
}

ValidationResult NodeState::submit_block(const Block& block)
{
    const Hash256 h = header_hash(block.header);
    if (m_header_index.count(h) != 0 || m_side_blocks.count(h) != 0) {
        return ValidationResult{false, RejectReason::duplicate, false};
    }
    if (block.header.prev_hash == m_chain.tip_hash()) {
        ValidationResult res = connect_tip(block);
        if (res.accepted) {
            post_connect();
            process_orphans_of(h);
        }
        return res;
    }
    if (m_header_index.count(block.header.prev_hash) != 0 ||
        m_side_blocks.count(block.header.prev_hash) != 0) {
        m_side_blocks.emplace(h, block);
        if (try_reorg(h)) {
            process_orphans_of(h);
            return ValidationResult{true, RejectReason::none, true};
        }
        return ValidationResult{false, RejectReason::stale, false};
    }
    // Parent unknown: buffer and wait for it.
    if (m_orphans.size() >= MAX_ORPHANS) {
        m_orphans.pop_front();
    }
    m_orphans.push_back(block);
    return ValidationResult{false, RejectReason::unknown_parent, false};
}

void NodeState::process_orphans_of(const Hash256& parent)
{
    std::vector<Block> ready;
    for (auto it = m_orphans.begin(); it != m_orphans.end();) {
        if (it->header.prev_hash == parent) {
            ready.push_back(*it);
            it = m_orphans.erase(it);
        } else {
            ++it;
        }
    }
    for (const Block& block : ready) {
        submit_block(block);
    }
}

UtxoSet NodeState::replay_main_to(uint32_t height) const
{
    UtxoSet state = m_anchor_state;
    for (uint32_t h = m_chain.prune_boundary() + 1; h <= height; ++h) {
        state = state_transition(state, m_chain.body_at(h).txs).state;
        state.set_height(h);
    }
    return state;
}

bool NodeState::try_reorg(const Hash256& leaf_hash)
{
    // Assemble the candidate branch back to its main-chain anchor.
    std::vector<Block> branch;
    Hash256 cursor = leaf_hash;
    while (true) {
        auto it = m_side_blocks.find(cursor);
        if (it == m_side_blocks.end()) {
            break;
        }
        branch.push_back(it->second);
        cursor = it->second.header.prev_hash;
    }
    const auto anchor = m_header_index.find(cursor);
    if (anchor == m_header_index.end()) {
        return false; // ancestry does not reach the main chain
    }
    std::reverse(branch.begin(), branch.end());
    const uint32_t fork_height = anchor->second;
    const uint32_t branch_tip = fork_height + static_cast<uint32_t>(branch.size());
    if (branch_tip <= tip_height()) {
        return false; // not strictly longer: first-received chain stays
    }
    if (fork_height < m_chain.prune_boundary()) {
        return false; // cannot replay below pruned bodies
    }

    // Validate the whole branch against the replayed fork state before
    // touching any node state.
    const UtxoSet fork_state = replay_main_to(fork_height);
    UtxoSet state = fork_state;
    Bigint parent_acc = m_chain.header_at(fork_height).accumulator;
    std::vector<ContextCheck> checks;
    checks.reserve(branch.size());
    for (const Block& block : branch) {
        ContextCheck check = validate_in_context(m_params, state, parent_acc, block);
        if (!check.ok) {
            return false;
        }
        state = check.transition.state;
        parent_acc = block.header.accumulator;
        checks.push_back(std::move(check));
    }

    // Commit: previous main-chain blocks above the fork become side
    // blocks (they may win again later).
    for (uint32_t h = fork_height + 1; h <= tip_height(); ++h) {
        const Block& old = m_chain.body_at(h);
        m_side_blocks.emplace(header_hash(old.header), old);
    }
    for (auto it = m_header_index.begin(); it != m_header_index.end();) {
        if (it->second > fork_height) {
            it = m_header_index.erase(it);
        } else {
            ++it;
        }
    }
    m_chain.truncate_to(fork_height);
    while (!m_snapshots.empty() && m_snapshots.back().height > fork_height) {
        m_snapshots.pop_back();
    }
    m_state = fork_state;
    m_state.set_height(fork_height);
    for (size_t i = 0; i < branch.size(); ++i) {
        // Witness updates are skipped during replay; the table is
        // rebuilt from the final state below.
        apply_connect(branch[i], std::move(checks[i]), /*update_witnesses=*/false);
        post_connect();
    }
    rebuild_witnesses();
    return true;
}

Block NodeState::mine(uint64_t timestamp, uint32_t stamped_nonce) const
{
    Transaction coinbase;
    coinbase.is_coinbase = true;
    coinbase.coinbase_height = tip_height() + 1;
    coinbase.outputs = {TxOutput{m_params.coinbase_reward, m_owner}};

    // Select mempool transactions in arrival order within the size
    // budget; transactions the state transition rejects are dropped
    // from the selection and the assembly retried.
    std::vector<Transaction> selected;
    size_t used = 0;
    for (const Transaction& tx : m_mempool) {
        const size_t sz = serialize_tx(tx).size();
        if (used + sz > m_params.max_block_bytes) {
            continue;
        }
        selected.push_back(tx);
        used += sz;
    }

    std::vector<Transaction> txs;
    TransitionResult transition;
    while (true) {
        txs.clear();
        txs.push_back(coinbase);
        txs.insert(txs.end(), selected.begin(), selected.end());
        try {
            transition = state_transition(m_state, txs);
            break;
        } catch (const TransitionError& e) {
            if (e.tx_index == 0) {
                throw IntegrityError("mine: coinbase rejected by state transition");
            }
            selected.erase(selected.begin() +
                           static_cast<ptrdiff_t>(e.tx_index - 1));
        }
    }

    std::vector<std::pair<Bigint, Bigint>> deleted;
    deleted.reserve(transition.deleted.size());
    for (const UtxoRecord& rec : transition.deleted) {
        const auto it = m_witnesses.find(utxo_key_bytes(rec.key));
        if (it == m_witnesses.end()) {
            throw IntegrityError("mine: no witness for spent record");
        }
        deleted.emplace_back(it->second.prime, it->second.w);
    }
    std::vector<Bigint> added_primes;
    added_primes.reserve(transition.added.size());
    for (const UtxoRecord& rec : transition.added) {
        added_primes.push_back(record_prime(rec));
    }

    const Bigint parent_acc = m_chain.header_at(tip_height()).accumulator;
    const BatchResult del = batch_del(m_params.group, parent_acc, deleted);
    const BatchResult add = batch_add(m_params.group, del.state, added_primes);

    Block block;
    block.txs = std::move(txs);
    block.acc_after_del = del.state;
    block.proof_del = del.proof;
    block.proof_add = add.proof;
    block.header.prev_hash = m_chain.tip_hash();
    block.header.accumulator = add.state;
    block.header.merkle_root = merkle_root(block.txs);
    block.header.version = 1;
    block.header.timestamp = timestamp;
    block.header.difficulty_bits = m_params.difficulty_bits;

    if (m_params.difficulty_bits == 0) {
        block.header.nonce = stamped_nonce;
    } else {
        uint64_t nonce = 0;
        for (; nonce < NONCE_BOUND; ++nonce) {
            block.header.nonce = static_cast<uint32_t>(nonce);
            if (hash_meets_difficulty(header_hash(block.header),
                                      m_params.difficulty_bits)) {
                break;
            }
        }
        if (nonce == NONCE_BOUND) {
            throw ConfigError("mine: nonce space exhausted");
        }
    }
    return block;
}

std::optional<Snapshot> NodeState::release_snapshot()
{
    const uint32_t interval = m_params.prune.snapshot_interval;
    if (interval == 0 || tip_height() == 0 || tip_height() % interval != 0) {
        return std::nullopt;
    }
    if (!m_snapshots.empty() && m_snapshots.back().height == tip_height()) {
        return m_snapshots.back();
    }
    Snapshot snap{m_chain.header_at(tip_height()).accumulator, m_state,
                  tip_height()};
    m_snapshots.push_back(snap);
    if (m_snapshots.size() > 2) {
        m_snapshots.erase(m_snapshots.begin());
    }
    return snap;
}

std::optional<Snapshot> NodeState::latest_snapshot() const
{
    if (m_snapshots.empty()) {
        return std::nullopt;
    }
    return m_snapshots.back();
}

uint32_t NodeState::try_prune()
{
    if (m_snapshots.empty()) {
        return 0;
    }
    const Snapshot& snap = m_snapshots.back();
    if (tip_height() < snap.height + m_params.prune.confirmations) {
        return 0; // snapshot not yet buried deep enough
    }
    if (snap.height <= m_chain.prune_boundary()) {
        return 0;
    }
    const uint32_t pruned = m_chain.prune_below(snap.height);
    m_anchor_state = snap.state_copy;
    return pruned;
}

void NodeState::rebuild_witnesses()
{
    m_witnesses.clear();
    if (m_state.size() == 0) {
        return;
    }
    std::vector<ByteVec> keys;
    std::vector<Bigint> primes;
    keys.reserve(m_state.size());
    primes.reserve(m_state.size());
    for (const auto& [key, value] : m_state.records()) {
        keys.push_back(utxo_key_bytes(key));
        primes.push_back(record_prime(make_record(key, value)));
    }
    const std::vector<Bigint> bases =
        root_factor(m_params.group, m_params.group.generator, primes);
    for (size_t i = 0; i < keys.size(); ++i) {
        m_witnesses.emplace(keys[i], MembershipWitness{bases[i], primes[i]});
    }
}

NodeState NodeState::assemble(ChainParams params, ByteVec owner_id,
                              bool prune_enabled,
                              const std::vector<BlockHeader>& headers,
                              const Snapshot& snapshot,
                              const std::map<uint32_t, Block>& bodies)
{
    if (headers.empty() || snapshot.height >= headers.size()) {
        throw IntegrityError("assemble: snapshot height beyond header chain");
    }
    NodeState node(std::move(params), std::move(owner_id), prune_enabled);
    node.m_chain = Chain{};
    node.m_header_index.clear();
    node.m_witnesses.clear();
    node.m_mempool.clear();
    node.m_snapshots.clear();
    node.m_side_blocks.clear();
    node.m_orphans.clear();

    for (uint32_t h = 0; h <= snapshot.height; ++h) {
        node.m_chain.append_header(headers[h]);
        node.m_header_index.emplace(header_hash(headers[h]), h);
    }
    node.m_chain.prune_below(snapshot.height);
    if (const auto it = bodies.find(snapshot.height); it != bodies.end()) {
        node.m_chain.attach_body(snapshot.height, it->second);
    }
    node.m_state = snapshot.state_copy;
    node.m_state.set_height(snapshot.height);
    node.m_anchor_state = node.m_state;
    if (snapshot.height > 0) {
        node.m_snapshots.push_back(snapshot);
    }

    for (uint32_t h = snapshot.height + 1; h < headers.size(); ++h) {
        const auto it = bodies.find(h);
        if (it == bodies.end()) {
            throw IntegrityError("assemble: missing body at height " +
                                 std::to_string(h));
        }
        const ValidationResult res = node.submit_block(it->second);
        if (!res.accepted) {
            throw IntegrityError("assemble: block rejected at height " +
                                 std::to_string(h) + " (" +
                                 reject_reason_name(res.reason) + ")");
        }
    }
    node.rebuild_witnesses();
    return node;
}

size_t select_chain_index(const std::vector<const Chain*>& candidates)
{
    size_t best = 0;
    for (size_t i = 1; i < candidates.size(); ++i) {
        if (candidates[i]->height_count() > candidates[best]->height_count()) {
            best = i;
        }
    }
    return best;
}

} // namespace secureprune
