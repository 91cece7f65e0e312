// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef SECUREPRUNE_CONSENSUS_BOOTSTRAP_HPP
#define SECUREPRUNE_CONSENSUS_BOOTSTRAP_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <secureprune/consensus/node.hpp>
#include <secureprune/consensus/snapshot.hpp>

namespace secureprune {

// What one peer offers a joining node: its header chain, latest
// retained snapshot (absent near genesis), and the block bodies it
// still stores.
struct BootstrapSource {
    std::vector<BlockHeader> headers;
    std::optional<Snapshot> snapshot;
    std::map<uint32_t, Block> bodies;
};

struct BootstrapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Everything a peer needs to serve a bootstrap, harvested from a node.
BootstrapSource collect_bootstrap_data(const NodeState& node);

// Header-chain validity: genesis matches the parameters, every header
// links to its predecessor, and every post-genesis header meets the
// proof-of-work target. On failure `err` (if non-null) describes the
// failing height.
bool verify_header_chain(const ChainParams& params,
                         const std::vector<BlockHeader>& headers,
                         std::string* err = nullptr);

// Snapshot validity against a (already verified) header chain: the
// identifier must equal the accumulator committed in the header at the
// snapshot height, and recomputing the accumulator of the served state
// copy must reproduce the identifier. This is the mutation check a
// joining node runs before trusting any state.
bool verify_snapshot(const GroupParams& group, const Snapshot& snapshot,
                     const std::vector<BlockHeader>& headers,
                     std::string* err = nullptr);

// Join the network: pick the peer with the longest chain (earliest on
// ties), verify its header chain from genesis and its snapshot against
// the committed accumulator, then download and fully validate the
// tailchain bodies. Peers failing any step are skipped; throws
// BootstrapError when none remain. Without a snapshot the whole chain
// is replayed from genesis.
NodeState bootstrap(const ChainParams& params, ByteVec owner_id,
                    bool prune_enabled,
                    const std::vector<BootstrapSource>& peers);

} // namespace secureprune

#endif // SECUREPRUNE_CONSENSUS_BOOTSTRAP_HPP
