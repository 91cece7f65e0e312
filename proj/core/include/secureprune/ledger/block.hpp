// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef SECUREPRUNE_LEDGER_BLOCK_HPP
#define SECUREPRUNE_LEDGER_BLOCK_HPP

#include <cstdint>
#include <map>
#include <vector>

#include <secureprune/acc/nipoe.hpp>
#include <secureprune/ledger/tx.hpp>
#include <secureprune/util/bigint.hpp>
#include <secureprune/util/sha256.hpp>

namespace secureprune {

// Header: links to the parent, commits to the transactions via the
// Merkle root and to the whole chain state via the accumulator — which
// is what makes state part of proof-of-work.
struct BlockHeader {
    Hash256 prev_hash{};
    uint32_t nonce = 0;
    Bigint accumulator;     // state commitment A_i after this block
    Hash256 merkle_root{};  // over this block's transactions
    uint32_t version = 1;
    uint64_t timestamp = 0;
    // Required number of leading zero bits of the header hash.
    uint32_t difficulty_bits = 0;

    bool operator==(const BlockHeader&) const = default;
};

// Full block: header, the intermediate accumulator after deletions with
// the two exponentiation proofs, and the transaction list.
struct Block {
    BlockHeader header;
    Bigint acc_after_del;  // A'_{i-1}: state commitment after spends only
    NiPoeProof proof_del;  // proves acc_after_del^(prod deleted primes) = parent A
    NiPoeProof proof_add;  // proves acc_after_del^(prod added primes) = header A
    std::vector<Transaction> txs;

    bool operator==(const Block&) const = default;
};

void write_header(Writer& w, const BlockHeader& header);
BlockHeader read_header(Reader& r);
ByteVec serialize_header(const BlockHeader& header);

// Digest of the canonical header serialization; the proof-of-work
// preimage and the chain-link identifier.
Hash256 header_hash(const BlockHeader& header);

// True iff the digest has at least `bits` leading zero bits.
bool hash_meets_difficulty(const Hash256& digest, uint32_t bits);

void write_block(Writer& w, const Block& block);
Block read_block(Reader& r);
ByteVec serialize_block(const Block& block);
Block deserialize_block(ByteSpan bytes);

// The chain as stored by a node: the complete header chain since
// genesis (never pruned) and the block bodies at heights at or above
// the prune boundary.
class Chain
{
public:
    // Number of headers; the tip height is height() - 1. Zero only for
    // an empty (not yet initialized) chain.
    uint32_t height_count() const { return static_cast<uint32_t>(m_headers.size()); }
    uint32_t tip_height() const { return height_count() - 1; }
    const BlockHeader& header_at(uint32_t height) const { return m_headers.at(height); }
    const std::vector<BlockHeader>& headers() const { return m_headers; }
    Hash256 tip_hash() const { return header_hash(m_headers.back()); }

    bool has_body(uint32_t height) const { return m_bodies.count(height) != 0; }
    const Block& body_at(uint32_t height) const { return m_bodies.at(height); }
    size_t body_count() const { return m_bodies.size(); }
    uint32_t prune_boundary() const { return m_prune_boundary; }

    // Append a block at the next height; header and body are stored.
    void append(const Block& block);
    // Append a header without its body (bootstrap: pruned-away range).
    void append_header(const BlockHeader& header);
    // Store the body for an already-present header; the block's header
    // must match it.
    void attach_body(uint32_t height, const Block& block);
    // Drop bodies below `boundary`, keeping every header. Returns the
    // number of bodies discarded.
    uint32_t prune_below(uint32_t boundary);
    // Discard blocks above `height`, making it the tip (reorg support).
    void truncate_to(uint32_t height);

    bool operator==(const Chain&) const = default;

private:
    std::vector<BlockHeader> m_headers;
    std::map<uint32_t, Block> m_bodies;
    uint32_t m_prune_boundary = 0;
};

} // namespace secureprune

#endif // SECUREPRUNE_LEDGER_BLOCK_HPP
