// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef SECUREPRUNE_CONSENSUS_SNAPSHOT_HPP
#define SECUREPRUNE_CONSENSUS_SNAPSHOT_HPP

#include <cstdint>

#include <secureprune/ledger/utxo.hpp>
#include <secureprune/util/bigint.hpp>

namespace secureprune {

// Periodic release of the full state. The identifier is the accumulator
// from the block header at the snapshot height; recomputing the
// accumulator of state_copy and comparing against the committed header
// value is what makes a served snapshot trustworthy once that header is
// buried under k confirmations.
struct Snapshot {
    Bigint identifier;
    UtxoSet state_copy;
    uint32_t height = 0;

    bool operator==(const Snapshot&) const = default;
};

} // namespace secureprune

#endif // SECUREPRUNE_CONSENSUS_SNAPSHOT_HPP
