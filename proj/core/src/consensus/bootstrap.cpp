// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <secureprune/consensus/bootstrap.hpp>

#include <algorithm>
#include <numeric>

#include <secureprune/util/errors.hpp>

namespace secureprune {

namespace {

void set_err(std::string* err, const std::string& what)
{
    if (err != nullptr) {
        *err = what;
    }
}

} // namespace

BootstrapSource collect_bootstrap_data(const NodeState& node)
{
    BootstrapSource src;
    src.headers = node.chain().headers();
    src.snapshot = node.latest_snapshot();
    for (uint32_t h = node.chain().prune_boundary(); h <= node.tip_height(); ++h) {
        if (node.chain().has_body(h)) {
            src.bodies.emplace(h, node.chain().body_at(h));
        }
    }
    return src;
}

bool verify_header_chain(const ChainParams& params,
                         const std::vector<BlockHeader>& headers,
                         std::string* err)
{
    if (headers.empty()) {
        set_err(err, "empty header chain");
        return false;
    }
    const Block genesis = make_genesis(params);
    if (!(headers[0] == genesis.header)) {
        set_err(err, "genesis header differs from parameters");
        return false;
    }
    for (size_t h = 1; h < headers.size(); ++h) {
        if (!(headers[h].prev_hash == header_hash(headers[h - 1]))) {
            set_err(err, "broken hash link at height " + std::to_string(h));
            return false;
        }
        if (headers[h].difficulty_bits != params.difficulty_bits ||
            !hash_meets_difficulty(header_hash(headers[h]),
                                   headers[h].difficulty_bits)) {
            set_err(err, "proof of work failure at height " + std::to_string(h));
            return false;
        }
    }
    return true;
}

bool verify_snapshot(const GroupParams& group, const Snapshot& snapshot,
                     const std::vector<BlockHeader>& headers, std::string* err)
{
    if (snapshot.height >= headers.size()) {
        set_err(err, "snapshot height beyond header chain");
        return false;
    }
    if (snapshot.state_copy.height() != snapshot.height) {
        set_err(err, "state height tag differs from snapshot height");
        return false;
    }
    if (headers[snapshot.height].accumulator != snapshot.identifier) {
        set_err(err, "identifier differs from header commitment at height " +
                         std::to_string(snapshot.height));
        return false;
    }
    if (accumulate_set(group, snapshot.state_copy) != snapshot.identifier) {
        set_err(err, "state copy does not reproduce the identifier at height " +
                         std::to_string(snapshot.height));
        return false;
    }
    return true;
}

NodeState bootstrap(const ChainParams& params, ByteVec owner_id,
                    bool prune_enabled,
                    const std::vector<BootstrapSource>& peers)
{
    // Longest chain first; earliest peer wins ties.
    std::vector<size_t> order(peers.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return peers[a].headers.size() > peers[b].headers.size();
    });

    std::string last_err = "no peers reachable";
    for (const size_t idx : order) {
        const BootstrapSource& peer = peers[idx];
        std::string err;
        if (!verify_header_chain(params, peer.headers, &err)) {
            last_err = err;
            continue;
        }
        Snapshot snap;
        if (peer.snapshot.has_value()) {
            if (!verify_snapshot(params.group, *peer.snapshot, peer.headers, &err)) {
                last_err = err;
                continue;
            }
            snap = *peer.snapshot;
        } else {
            // No snapshot released yet: replay everything from genesis.
            const Block genesis = make_genesis(params);
            snap.identifier = genesis.header.accumulator;
            snap.state_copy = state_transition(UtxoSet{}, genesis.txs).state;
            snap.height = 0;
        }
        try {
            return NodeState::assemble(params, owner_id, prune_enabled,
                                       peer.headers, snap, peer.bodies);
        } catch (const IntegrityError& e) {
            last_err = e.what();
        }
    }
    throw BootstrapError("bootstrap: every peer rejected: " + last_err);
}

} // namespace secureprune
