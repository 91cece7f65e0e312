// Copyright (c) 2026 The secureprune developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef SECUREPRUNE_UTIL_BYTES_HPP
#define SECUREPRUNE_UTIL_BYTES_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace secureprune {

using ByteVec = std::vector<uint8_t>;
using ByteSpan = std::span<const uint8_t>;

std::string to_hex(ByteSpan data);
ByteVec from_hex(const std::string& hex);

inline ByteVec to_bytes(const std::string& s)
{
    return ByteVec(s.begin(), s.end());
}

} // namespace secureprune

#endif // SECUREPRUNE_UTIL_BYTES_HPP
