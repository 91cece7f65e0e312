// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <secureprune/ledger/block.hpp>

#include <stdexcept>

namespace secureprune {

void write_header(Writer& w, const BlockHeader& header)
{
    w.hash(header.prev_hash);
    w.u32(header.nonce);
    w.bigint(header.accumulator);
    w.hash(header.merkle_root);
    w.u32(header.version);
    w.u64(header.timestamp);
    w.u32(header.difficulty_bits);
}

BlockHeader read_header(Reader& r)
{
    BlockHeader header;
    header.prev_hash = r.hash();
    header.nonce = r.u32();
    header.accumulator = r.bigint();
    header.merkle_root = r.hash();
    header.version = r.u32();
    header.timestamp = r.u64();
    header.difficulty_bits = r.u32();
    return header;
}

ByteVec serialize_header(const BlockHeader& header)
{
    Writer w;
    write_header(w, header);
    return w.take();
}

Hash256 header_hash(const BlockHeader& header)
{
    return sha256(serialize_header(header));
}

bool hash_meets_difficulty(const Hash256& digest, uint32_t bits)
{
    for (uint32_t i = 0; i < bits; ++i) {
        const uint8_t byte = digest[i / 8];
        if ((byte >> (7 - i % 8)) & 1) {
            return false;
        }
    }
    return true;
}

void write_block(Writer& w, const Block& block)
{
    write_header(w, block.header);
    w.bigint(block.acc_after_del);
    w.bigint(block.proof_del.Q);
    w.bigint(block.proof_add.Q);
    w.u32(static_cast<uint32_t>(block.txs.size()));
    for (const Transaction& tx : block.txs) {
        write_tx(w, tx);
    }
}

Block read_block(Reader& r)
{
    Block block;
    block.header = read_header(r);
    block.acc_after_del = r.bigint();
    block.proof_del.Q = r.bigint();
    block.proof_add.Q = r.bigint();
    const uint32_t n_txs = r.u32();
    block.txs.reserve(n_txs);
    for (uint32_t i = 0; i < n_txs; ++i) {
        block.txs.push_back(read_tx(r));
    }
    return block;
}

ByteVec serialize_block(const Block& block)
{
    Writer w;
    write_block(w, block);
    return w.take();
}

Block deserialize_block(ByteSpan bytes)
{
    Reader r(bytes);
    Block block = read_block(r);
    r.finish();
    return block;
}

void Chain::append(const Block& block)
{
    m_headers.push_back(block.header);
    m_bodies.emplace(static_cast<uint32_t>(m_headers.size() - 1), block);
}

void Chain::append_header(const BlockHeader& header)
{
    m_headers.push_back(header);
}

void Chain::attach_body(uint32_t height, const Block& block)
{
    if (height >= m_headers.size() || !(m_headers[height] == block.header)) {
        throw std::logic_error("Chain::attach_body: body does not match header");
    }
    m_bodies.insert_or_assign(height, block);
}

uint32_t Chain::prune_below(uint32_t boundary)
{
    const auto end = m_bodies.lower_bound(boundary);
    const auto count = static_cast<uint32_t>(std::distance(m_bodies.begin(), end));
    m_bodies.erase(m_bodies.begin(), end);
    if (boundary > m_prune_boundary) {
        m_prune_boundary = boundary;
    }
    return count;
}

void Chain::truncate_to(uint32_t height)
{
    if (height + 1 > m_headers.size()) {
        throw std::logic_error("Chain::truncate_to: height beyond tip");
    }
    if (height < m_prune_boundary) {
        throw std::logic_error("Chain::truncate_to: height below prune boundary");
    }
    m_headers.resize(height + 1);
    m_bodies.erase(m_bodies.upper_bound(height), m_bodies.end());
}

} // namespace secureprune
