// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef SECUREPRUNE_CONSENSUS_SNAPSHOT_IO_HPP
#define SECUREPRUNE_CONSENSUS_SNAPSHOT_IO_HPP

#include <string>
#include <vector>

#include <secureprune/acc/group.hpp>
#include <secureprune/consensus/snapshot.hpp>
#include <secureprune/ledger/block.hpp>

namespace secureprune {

// Self-contained header-chain file: carries the group parameters and
// difficulty so a verifier needs nothing else. Difficulty and group
// here must of course match what the verifier expects of the network.
struct HeaderChainFile {
    Bigint modulus;
    Bigint generator;
    uint32_t difficulty_bits = 0;
    std::vector<BlockHeader> headers;

    bool operator==(const HeaderChainFile&) const = default;
};

// Snapshot file: magic "SPSN", version, height, identifier, state.
void write_snapshot_file(const std::string& path, const Snapshot& snapshot);
Snapshot read_snapshot_file(const std::string& path);

// Header-chain file: magic "SPHD", version, group, difficulty, headers.
void write_headers_file(const std::string& path, const HeaderChainFile& file);
HeaderChainFile read_headers_file(const std::string& path);

} // namespace secureprune

#endif // SECUREPRUNE_CONSENSUS_SNAPSHOT_IO_HPP
