// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef SECUREPRUNE_UTIL_SERIALIZE_HPP
#define SECUREPRUNE_UTIL_SERIALIZE_HPP

#include <cstdint>

#include <secureprune/util/bigint.hpp>
#include <secureprune/util/bytes.hpp>
#include <secureprune/util/sha256.hpp>

namespace secureprune {

// Canonical encoder. All multi-byte integers are big-endian; variable
// length fields carry an explicit u32 length prefix. Every hashed or
// persisted structure in the protocol is built from these primitives,
// so two implementations that agree on them agree on all digests.
class Writer
{
public:
    void u8(uint8_t v);
    void u32(uint32_t v);
    void u64(uint64_t v);
    // Raw bytes, no length prefix (fixed-size fields such as hashes).
    void raw(ByteSpan data);
    void hash(const Hash256& h);
    // u32 length prefix followed by the bytes.
    void blob(ByteSpan data);
    // u32 length prefix followed by the minimal big-endian magnitude.
    void bigint(const Bigint& x);

    const ByteVec& bytes() const { return m_buf; }
    ByteVec take() { return std::move(m_buf); }

private:
    ByteVec m_buf;
};

// Canonical decoder matching Writer. Throws ParseError on truncated or
// malformed input; trailing garbage is detected via finish().
class Reader
{
public:
    explicit Reader(ByteSpan data) : m_data(data) {}

    uint8_t u8();
    uint32_t u32();
    uint64_t u64();
    ByteVec raw(size_t n);
    Hash256 hash();
    ByteVec blob();
    Bigint bigint();

    size_t remaining() const { return m_data.size() - m_pos; }
    // Asserts all input was consumed.
    void finish() const;

private:
    ByteSpan need(size_t n);

    ByteSpan m_data;
    size_t m_pos = 0;
};

} // namespace secureprune

#endif // SECUREPRUNE_UTIL_SERIALIZE_HPP
