// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <secureprune/util/serialize.hpp>

#include <limits>

#include <secureprune/util/errors.hpp>

namespace secureprune {

void Writer::u8(uint8_t v)
{
    m_buf.push_back(v);
}

void Writer::u32(uint32_t v)
{
    m_buf.push_back(static_cast<uint8_t>(v >> 24));
    m_buf.push_back(static_cast<uint8_t>(v >> 16));
    m_buf.push_back(static_cast<uint8_t>(v >> 8));
    m_buf.push_back(static_cast<uint8_t>(v));
}

void Writer::u64(uint64_t v)
{
    u32(static_cast<uint32_t>(v >> 32));
    u32(static_cast<uint32_t>(v));
}

void Writer::raw(ByteSpan data)
{
    m_buf.insert(m_buf.end(), data.begin(), data.end());
}

void Writer::hash(const Hash256& h)
{
    raw(ByteSpan(h.data(), h.size()));
}

void Writer::blob(ByteSpan data)
{
    if (data.size() > std::numeric_limits<uint32_t>::max()) {
        throw ParseError("Writer::blob: field too large");
    }
    u32(static_cast<uint32_t>(data.size()));
    raw(data);
}

void Writer::bigint(const Bigint& x)
{
    const ByteVec mag = bigint_to_bytes(x);
    blob(mag);
}

ByteSpan Reader::need(size_t n)
{
    if (remaining() < n) {
        throw ParseError("Reader: truncated input");
    }
    ByteSpan out = m_data.subspan(m_pos, n);
    m_pos += n;
    return out;
}

uint8_t Reader::u8()
{
    return need(1)[0];
}

uint32_t Reader::u32()
{
    ByteSpan b = need(4);
    return (static_cast<uint32_t>(b[0]) << 24) |
           (static_cast<uint32_t>(b[1]) << 16) |
           (static_cast<uint32_t>(b[2]) << 8) |
           static_cast<uint32_t>(b[3]);
}

uint64_t Reader::u64()
{
    const uint64_t hi = u32();
    const uint64_t lo = u32();
    return (hi << 32) | lo;
}

ByteVec Reader::raw(size_t n)
{
    ByteSpan b = need(n);
    return ByteVec(b.begin(), b.end());
}

Hash256 Reader::hash()
{
    ByteSpan b = need(32);
    Hash256 h;
    std::copy(b.begin(), b.end(), h.begin());
    return h;
}

ByteVec Reader::blob()
{
    const uint32_t n = u32();
    return raw(n);
}

Bigint Reader::bigint()
{
    const ByteVec mag = blob();
    return bigint_from_bytes(mag);
}

void Reader::finish() const
{
    if (remaining() != 0) {
        throw ParseError("Reader: trailing bytes after structure");
    }
}

} // namespace secureprune
