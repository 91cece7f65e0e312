// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef SECUREPRUNE_LEDGER_MERKLE_HPP
#define SECUREPRUNE_LEDGER_MERKLE_HPP

#include <vector>

#include <secureprune/ledger/tx.hpp>
#include <secureprune/util/sha256.hpp>

namespace secureprune {

// Root of a binary Merkle tree whose leaves are the digests of the
// canonical transaction serializations. A level with an odd node count
// duplicates its last node; the empty list hashes to the digest of the
// empty byte-string.
Hash256 merkle_root(const std::vector<Transaction>& txs);

} // namespace secureprune

#endif // SECUREPRUNE_LEDGER_MERKLE_HPP
